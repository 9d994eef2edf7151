"""Identity laws of the cubix algebras and binary operations obtained by currying."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from ternarity.errors import InputError
from ternarity.ndmatrix.array import Cubix
from ternarity.ndmatrix.products import IDENTITY_NAMES, identities_by_name, multiply, resolve_kind
from ternarity.verdict import Verdict


@dataclass(frozen=True)
class Equation:
    """``kind(args) = rhs`` where ``a`` stands for an arbitrary cubix."""

    kind: str
    args: tuple
    rhs: str = "a"

    def __str__(self):
        return f"{self.kind}({','.join(self.args)})={self.rhs}"

    def evaluate(self, a: Cubix, ids: dict) -> tuple[Cubix, Cubix]:
        env = dict(ids, a=a)
        return multiply(self.kind, *(env[x] for x in self.args)), env[self.rhs]


def _eqs(kind, *patterns):
    return tuple(Equation(kind, tuple(p.split(","))) for p in patterns)


CATALOGUE = {
    "p1": _eqs("p1", "a,i2,i3", "i2,a,i1", "i3,i1,a"),
    "p2": _eqs("p2", "a,i1,i3", "i1,a,i3", "i3,i1,a"),
    "p3": _eqs("p3", "a,i1,I", "i1,a,I", "i3,I,a", "a,I,i3", "I,a,i2", "I,i2,a"),
    "p4": _eqs("p4", "a,i1,I", "a,i3,I", "a,I,i2", "a,I,i3", "a,I,I"),
}


@dataclass
class EquationResult:
    equation: str
    passed: bool
    counterexample: dict | None = None


@dataclass
class CatalogueReport:
    kind: str
    N: int
    semiring: str
    trials: int
    results: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "N": self.N,
            "semiring": self.semiring,
            "trials": self.trials,
            "passed": self.passed,
            "total": len(self.results),
            "equations": [
                {"equation": r.equation, "passed": r.passed, **({"counterexample": r.counterexample} if r.counterexample else {})}
                for r in self.results
            ],
            "warnings": self.warnings,
        }


def catalogue(kind: str) -> tuple:
    """Catalogued identity laws; kinds without a catalogue get an empty tuple."""
    return CATALOGUE.get(resolve_kind(kind), ())


def verify_identity_catalogue(kind: str, N: int, semiring, trials: int = 50, seed: int = 0) -> CatalogueReport:
    kind = resolve_kind(kind)
    report = CatalogueReport(kind, N, semiring.tag, trials)
    if N < 2:
        report.warnings.append(f"degenerate size N={N}: all identity cubices coincide")
    eqs = catalogue(kind)
    if not eqs:
        report.warnings.append(f"no catalogued identity laws for {kind}")
    ids = identities_by_name(N, semiring)
    rng = random.Random(seed)
    samples = [Cubix.random_cubix(semiring, N, rng) for _ in range(trials)]
    for eq in eqs:
        res = EquationResult(str(eq), True)
        for a in samples:
            lhs, rhs = eq.evaluate(a, ids)
            if lhs != rhs:
                res.passed = False
                res.counterexample = {"a": a.to_json(), "lhs": lhs.to_json(), "rhs": rhs.to_json()}
                break
        report.results.append(res)
    return report


@dataclass(frozen=True)
class ScanResult:
    kind: str
    N: int
    quadruples: tuple

    @property
    def count(self) -> int:
        return len(self.quadruples)

    def equations(self) -> list[str]:
        return [f"{self.kind}({x},{y},{z})={w}" for x, y, z, w in self.quadruples]


def identity_subalgebra_scan(kind: str, N: int, semiring) -> ScanResult:
    """All ``(x, y, z, w)`` over the four identity cubices with ``kind(x, y, z) = w``."""
    kind = resolve_kind(kind)
    if N < 2:
        raise InputError("the scan needs N >= 2; at N = 1 the identity cubices coincide")
    ids = identities_by_name(N, semiring)
    found = []
    for x, y, z in product(IDENTITY_NAMES, repeat=3):
        r = multiply(kind, ids[x], ids[y], ids[z])
        for w in IDENTITY_NAMES:
            if r == ids[w]:
                found.append((x, y, z, w))
    return ScanResult(kind, N, tuple(found))


@dataclass(frozen=True)
class CurriedOp:
    """A binary operation: one argument of a multiplication fixed to an identity cubix."""

    kind: str
    slot: int
    binding: str

    def __post_init__(self):
        if self.slot not in (0, 1, 2):
            raise InputError("slot must be 0, 1 or 2")
        if self.binding not in IDENTITY_NAMES:
            raise InputError(f"binding must be one of {IDENTITY_NAMES}")

    @property
    def name(self) -> str:
        parts = ["·", "·"]
        parts.insert(self.slot, self.binding)
        return f"{self.kind}({','.join(parts)})"

    def __call__(self, x: Cubix, y: Cubix) -> Cubix:
        bound = identities_by_name(x.size, x.semiring)[self.binding]
        args = [x, y]
        args.insert(self.slot, bound)
        return multiply(self.kind, *args)


def curry(kind: str, slot: int, binding: str) -> CurriedOp:
    return CurriedOp(resolve_kind(kind), slot, binding)


def all_curried(kind: str) -> list[CurriedOp]:
    kind = resolve_kind(kind)
    return [CurriedOp(kind, slot, b) for slot in range(3) for b in IDENTITY_NAMES]


def probe_binary(op: CurriedOp, prop: str, N: int, semiring, trials: int = 20, seed: int = 0) -> Verdict:
    """Sample a binary law: ``associative``, ``commutative`` or ``unital``.

    ``unital`` looks for a two-sided unit among the identity cubices; one-sided
    units are listed in ``detail`` either way.
    """
    rng = random.Random(seed)
    law = f"{op.name} {prop}"

    def rnd():
        return Cubix.random_cubix(semiring, N, rng)

    if prop == "associative":
        for _ in range(trials):
            x, y, z = rnd(), rnd(), rnd()
            if op(op(x, y), z) != op(x, op(y, z)):
                return Verdict(law, False, trials, {"x": x.to_json(), "y": y.to_json(), "z": z.to_json()})
        return Verdict(law, True, trials)
    if prop == "commutative":
        for _ in range(trials):
            x, y = rnd(), rnd()
            if op(x, y) != op(y, x):
                return Verdict(law, False, trials, {"x": x.to_json(), "y": y.to_json()})
        return Verdict(law, True, trials)
    if prop == "unital":
        ids = identities_by_name(N, semiring)
        samples = [rnd() for _ in range(trials)]
        left = [u for u in IDENTITY_NAMES if all(op(ids[u], x) == x for x in samples)]
        right = [u for u in IDENTITY_NAMES if all(op(x, ids[u]) == x for x in samples)]
        both = [u for u in left if u in right]
        detail = {"left_units": left, "right_units": right}
        if both:
            detail["unit"] = both[0]
            return Verdict(law, True, trials, detail=detail)
        return Verdict(law, False, trials, detail=detail)
    raise InputError(f"unknown property {prop!r}")


def reverse_indices(c: Cubix) -> Cubix:
    """``c[k, j, i]``: the index-reversal involution."""
    return Cubix.build(c.semiring, c.size, lambda i, j, k: c[k, j, i])


def heap_terms(a, b, c, d, e, reversal: bool = False) -> tuple:
    """The three fish terms ``p4(p4(a,b,c),d,e)``, ``p4(a,p4(d,c,b),e)``, ``p4(a,b,p4(c,d,e))``.

    With ``reversal=True`` the middle term becomes ``p4(a, r(p4(r d, r c, r b)), e)``
    where ``r`` reverses indices; that is the form that holds identically.
    """
    t1 = multiply("p4", multiply("p4", a, b, c), d, e)
    if reversal:
        r = reverse_indices
        mid = r(multiply("p4", r(d), r(c), r(b)))
    else:
        mid = multiply("p4", d, c, b)
    t2 = multiply("p4", a, mid, e)
    t3 = multiply("p4", a, b, multiply("p4", c, d, e))
    return t1, t2, t3


def heap_equalities(a, b, c, d, e, reversal: bool = False) -> dict:
    t1, t2, t3 = heap_terms(a, b, c, d, e, reversal)
    return {"(1)=(2)": t1 == t2, "(2)=(3)": t2 == t3, "(1)=(3)": t1 == t3}
