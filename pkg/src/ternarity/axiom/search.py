"""Randomized exact search for identities between multilinear terms.

Every term is evaluated with the operation interpreted as a cubix
multiplication over ``F_p`` at seeded random inputs.  Terms are bucketed by a
digest of their values at three fingerprint configurations, buckets are split
again at confirmation configurations, and surviving equalities are checked at
a held-out configuration.  Entries of a term are polynomials in the input
entries, so agreement at random points of several fields and sizes is strong
(Schwartz-Zippel style) evidence of a true identity, but it is not a proof.
"""

from __future__ import annotations

import hashlib
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ternarity.axiom.terms import Term, enumerate_terms, naive_associativity_terms
from ternarity.errors import BudgetExceeded, InputError
from ternarity.ndmatrix.array import Cubix
from ternarity.ndmatrix.products import KINDS, SCHEME_SPECS, multiply, resolve_kind
from ternarity.ndmatrix.semiring import PrimeField

FINGERPRINT_CONFIGS = ((101, 2), (101, 3), (257, 2))
CONFIRM_CONFIGS = ((1009, 2), (1009, 3), (7919, 2))
HELD_OUT_CONFIG = (65537, 2)

OPERATIONS = KINDS + ("sum3",)


def resolve_operation(op: str) -> str:
    return "sum3" if op == "sum3" else resolve_kind(op)


def _apply(op: str, p: int, a, b, c):
    if op == "sum3":
        return (a + b + c) % p
    return np.einsum(SCHEME_SPECS[op], a, b, c) % p


def _inputs(seed, p, N, num_vars, trial=0):
    """Seeded random cubices (as int64 arrays) for variables ``1..num_vars``."""
    out = {}
    for v in range(1, num_vars + 1):
        rng = random.Random(f"{seed}:{p}:{N}:{trial}:{v}")
        out[v] = np.array([rng.randrange(p) for _ in range(N ** 3)], dtype=np.int64).reshape(N, N, N)
    return out


class Evaluator:
    """Evaluates terms at fixed inputs, sharing common subterms."""

    def __init__(self, op: str, p: int, inputs: dict):
        self.op, self.p, self.inputs = op, p, inputs
        self.memo = {}

    def __call__(self, tree):
        if isinstance(tree, int):
            return self.inputs[tree]
        hit = self.memo.get(tree)
        if hit is None:
            a, b, c = (self(t) for t in tree)
            hit = self.memo[tree] = _apply(self.op, self.p, a, b, c)
        return hit


def _values(op, terms, configs, seed, num_vars, trial=0):
    evals = [Evaluator(op, p, _inputs(seed, p, N, num_vars, trial)) for p, N in configs]
    out = []
    for t in terms:
        h = hashlib.blake2b(digest_size=16)
        for ev in evals:
            h.update(ev(t.tree).tobytes())
        out.append(h.hexdigest())
    return out


def _values_chunk(args):
    return _values(*args)


def fingerprints(op: str, terms, seed: int = 0, configs=FINGERPRINT_CONFIGS, threads: int = 1,
                 deadline: float | None = None, num_vars: int | None = None) -> list[str]:
    """Digest of each term's values at ``configs``; identical for any thread count."""
    op = resolve_operation(op)
    terms = list(terms)
    num_vars = num_vars or (len(terms[0].leaves) if terms else 0)
    chunk = 2000
    pieces = [terms[i:i + chunk] for i in range(0, len(terms), chunk)]
    out = []
    if threads > 1 and len(pieces) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_values_chunk, (op, piece, configs, seed, num_vars)) for piece in pieces]
            for f in futures:
                if deadline is not None and time.monotonic() > deadline:
                    for g in futures:
                        g.cancel()
                    raise BudgetExceeded("fingerprint pass ran out of time", partial=out,
                                         progress={"terms_done": len(out), "terms_total": len(terms)})
                out.extend(f.result())
    else:
        for piece in pieces:
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceeded("fingerprint pass ran out of time", partial=out,
                                     progress={"terms_done": len(out), "terms_total": len(terms)})
            out.extend(_values(op, piece, configs, seed, num_vars))
    return out


# -- candidates -------------------------------------------------------------


def identity_key(left: Term, right: Term) -> tuple:
    """Canonical representative of ``left = right`` up to side-swap and variable renaming."""
    a = (left.rename(left.normalizer()), right.rename(left.normalizer()))
    b = (right.rename(right.normalizer()), left.rename(right.normalizer()))
    return min((str(a[0]), str(a[1])), (str(b[0]), str(b[1])))


@dataclass
class CandidateIdentity:
    left: Term
    right: Term
    status: str = "unconfirmed"          # unconfirmed | confirmed | refuted
    witness: dict | None = None
    configs: list = field(default_factory=list)

    def __post_init__(self):
        if self.left.variables != self.right.variables:
            raise InputError("both sides must use the same variables")

    @property
    def key(self) -> tuple:
        return identity_key(self.left, self.right)

    def __str__(self):
        return f"{self.left} = {self.right}"

    def to_json(self) -> dict:
        out = {
            "leftTerm": str(self.left),
            "rightTerm": str(self.right),
            "status": self.status,
            "configs": [{"p": p, "N": N} for p, N in self.configs],
        }
        if self.status == "confirmed":
            out["evidence"] = "probabilistic, multi-config"
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _cubix_json(arr, p):
    N = arr.shape[0]
    return Cubix(PrimeField(p), (N, N, N), tuple(int(x) for x in arr.reshape(-1))).to_json()


def check_candidate(candidate: CandidateIdentity, op: str, configs=CONFIRM_CONFIGS + (HELD_OUT_CONFIG,),
                    trials: int = 2, seed: int = 0) -> CandidateIdentity:
    """Exact evaluation of both sides at every config; a refutation stores the inputs that show it."""
    op = resolve_operation(op)
    left, right = candidate.left, candidate.right
    result = CandidateIdentity(left, right, configs=list(configs))
    if left == right:
        result.status = "confirmed"
        return result
    nv = max(left.variables)
    for p, N in configs:
        for trial in range(trials):
            inputs = _inputs(seed, p, N, nv, trial)
            ev = Evaluator(op, p, inputs)
            lv, rv = ev(left.tree), ev(right.tree)
            if not np.array_equal(lv, rv):
                result.status = "refuted"
                result.witness = {
                    "p": p,
                    "N": N,
                    "inputs": {f"x{v}": _cubix_json(a, p) for v, a in sorted(inputs.items())},
                    "left": _cubix_json(lv, p),
                    "right": _cubix_json(rv, p),
                }
                return result
    result.status = "confirmed"
    return result


def replay_witness(candidate: CandidateIdentity, op: str) -> tuple[Cubix, Cubix]:
    """Recompute both sides of a refuted candidate with the reference (pure Python) multiply."""
    w = candidate.witness
    if w is None:
        raise InputError("candidate has no witness")
    op = resolve_operation(op)
    env = {int(k[1:]): Cubix.from_json(v) for k, v in w["inputs"].items()}

    def ev(tree):
        if isinstance(tree, int):
            return env[tree]
        a, b, c = (ev(t) for t in tree)
        if op == "sum3":
            return a + b + c
        return multiply(op, a, b, c)

    return ev(candidate.left.tree), ev(candidate.right.tree)


def naive_candidates() -> list[CandidateIdentity]:
    """``(abc)de = a(bcd)e`` and ``a(bcd)e = ab(cde)``."""
    t1, t2, t3 = naive_associativity_terms()
    return [CandidateIdentity(t1, t2), CandidateIdentity(t2, t3)]


# -- search -----------------------------------------------------------------


@dataclass
class SearchReport:
    op: str
    num_vars: int
    seed: int
    terms: int
    buckets: int
    confirmed: list
    refuted: list
    complete: bool = True
    progress: dict = field(default_factory=dict)

    def to_json(self, include_refuted: bool = False) -> dict:
        out = {
            "op": self.op,
            "elements": self.num_vars,
            "terms": self.terms,
            "fingerprint_buckets": self.buckets,
            "complete": self.complete,
            "fingerprint_configs": [{"p": p, "N": N} for p, N in FINGERPRINT_CONFIGS],
            "confirm_configs": [{"p": p, "N": N} for p, N in CONFIRM_CONFIGS],
            "held_out_config": {"p": HELD_OUT_CONFIG[0], "N": HELD_OUT_CONFIG[1]},
            "confirmed_count": len(self.confirmed),
            "confirmed": [c.to_json() for c in self.confirmed],
        }
        if include_refuted:
            out["refuted"] = [c.to_json() for c in self.refuted]
        if self.progress:
            out["progress"] = self.progress
        return out

    def contains(self, left: Term, right: Term) -> bool:
        key = identity_key(left, right)
        return any(c.key == key for c in self.confirmed)


def _group(keys):
    groups = {}
    for i, k in enumerate(keys):
        groups.setdefault(k, []).append(i)
    return list(groups.values())


def search_identities(op: str, num_vars: int, seed: int = 0, confirm_trials: int = 1, threads: int = 1,
                      budget: float | None = None, with_refuted: bool = False) -> SearchReport:
    """Confirmed identity classes among all multilinear terms in ``num_vars`` variables."""
    op = resolve_operation(op)
    if num_vars not in (5, 7):
        raise InputError("identity search supports 5 or 7 variables")
    deadline = None if budget is None else time.monotonic() + budget
    terms = enumerate_terms(num_vars)
    try:
        fps = fingerprints(op, terms, seed, FINGERPRINT_CONFIGS, threads, deadline, num_vars)
    except BudgetExceeded as exc:
        report = SearchReport(op, num_vars, seed, len(terms), 0, [], [], complete=False, progress=exc.progress)
        raise BudgetExceeded(str(exc), partial=report, progress=exc.progress) from None
    buckets = [b for b in _group(fps) if len(b) > 1]

    confirmed, refuted = {}, []
    for bucket in buckets:
        members = [terms[i] for i in bucket]
        classes = [members]
        for trial in range(confirm_trials):
            split = []
            for cls in classes:
                vals = _values(op, cls, CONFIRM_CONFIGS, seed + 1, num_vars, trial)
                split.extend([[cls[i] for i in g] for g in _group(vals)])
            classes = split
        held = []
        for cls in classes:
            vals = _values(op, cls, (HELD_OUT_CONFIG,), seed + 2, num_vars)
            held.extend([[cls[i] for i in g] for g in _group(vals)])
        if with_refuted and len(held) > 1:
            for other in held[1:]:
                refuted.append(check_candidate(CandidateIdentity(held[0][0], other[0]), op, seed=seed + 3))
        for cls in held:
            if len(cls) < 2:
                continue
            for left in cls:
                if not left.is_normal():
                    continue
                for right in cls:
                    if right is left:
                        continue
                    key = identity_key(left, right)
                    if key not in confirmed:
                        confirmed[key] = CandidateIdentity(
                            Term.parse(key[0]), Term.parse(key[1]), "confirmed",
                            configs=list(FINGERPRINT_CONFIGS + CONFIRM_CONFIGS + (HELD_OUT_CONFIG,)),
                        )
    ordered = [confirmed[k] for k in sorted(confirmed)]
    return SearchReport(op, num_vars, seed, len(terms), len(set(fps)), ordered, refuted)
