from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Verdict:
    """Outcome of a sampled law check.

    ``holds`` means no counterexample turned up in ``trials`` samples; it is
    evidence, not proof.  On failure ``witness`` reproduces the violation.
    """

    law: str
    holds: bool
    trials: int
    witness: dict | None = None
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"law": self.law, "holds": self.holds, "trials": self.trials}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out
