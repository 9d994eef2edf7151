"""The ten ternary cubix multiplications and the identity cubices.

Indices follow the written formulas with 0-based storage, flat offset
``(i*N + j)*N + k``.  Blades reads its third factor as ``c[q, p, k]``: with
that index order the three blades identity laws hold, which they do not for
``c[p, q, k]`` (kept as :data:`BLADES_ALT_SCHEME` for comparison).
"""

from __future__ import annotations

from itertools import product

from ternarity.errors import InputError, SemiringMismatch, SizeMismatch
from ternarity.ndmatrix.array import Cubix
from ternarity.ndmatrix.splice import SpliceScheme

KINDS = ("p1", "p2", "p3", "p4", "p5_1", "p5_2", "p6_1", "p6_2", "p6_3", "p7")

ALGEBRA_NAMES = {
    "cone": "p1", "blades": "p2", "triforce": "p3", "fish": "p4",
    "boat_1": "p5_1", "boat_2": "p5_2",
    "clamp_1": "p6_1", "clamp_2": "p6_2", "clamp_3": "p6_3",
    "cone_2": "p7",
}

SHAPE_OF = {
    "p1": "cone", "p2": "blades", "p3": "triforce", "p4": "fish",
    "p5_1": "boat", "p5_2": "boat",
    "p6_1": "clamp", "p6_2": "clamp", "p6_3": "clamp",
    "p7": "cone",
}

SCHEME_SPECS = {
    "p1": "ijp,ipk,pjk->ijk",
    "p2": "ipq,pjq,qpk->ijk",
    "p3": "ipq,pjr,qrk->ijk",
    "p4": "ijp,pqr,qrk->ijk",
    "p5_1": "ijp,pjq,qjk->ijk",
    "p5_2": "ipq,pjq,pjk->ijk",
    "p6_1": "ijp,ijq,pqk->ijk",
    "p6_2": "ijp,ipq,qjk->ijk",
    "p6_3": "ijk,pjq,pqk->ijk",
    "p7": "ijk,ijp,pjk->ijk",
}

SCHEMES = {kind: SpliceScheme.parse(spec) for kind, spec in SCHEME_SPECS.items()}

BLADES_ALT_SCHEME = SpliceScheme.parse("ipq,pjq,pqk->ijk")

# (number of summed indices, index triples of a, b, c in terms of i, j, k, p, q, r)
_FORMULAS = {
    "p1": (1, lambda i, j, k, p, q, r: ((i, j, p), (i, p, k), (p, j, k))),
    "p2": (2, lambda i, j, k, p, q, r: ((i, p, q), (p, j, q), (q, p, k))),
    "p3": (3, lambda i, j, k, p, q, r: ((i, p, q), (p, j, r), (q, r, k))),
    "p4": (3, lambda i, j, k, p, q, r: ((i, j, p), (p, q, r), (q, r, k))),
    "p5_1": (2, lambda i, j, k, p, q, r: ((i, j, p), (p, j, q), (q, j, k))),
    "p5_2": (2, lambda i, j, k, p, q, r: ((i, p, q), (p, j, q), (p, j, k))),
    "p6_1": (2, lambda i, j, k, p, q, r: ((i, j, p), (i, j, q), (p, q, k))),
    "p6_2": (2, lambda i, j, k, p, q, r: ((i, j, p), (i, p, q), (q, j, k))),
    "p6_3": (2, lambda i, j, k, p, q, r: ((i, j, k), (p, j, q), (p, q, k))),
    "p7": (1, lambda i, j, k, p, q, r: ((i, j, k), (i, j, p), (p, j, k))),
}


def resolve_kind(kind: str) -> str:
    kind = ALGEBRA_NAMES.get(kind, kind).replace(".", "_")
    if kind not in KINDS:
        raise InputError(f"unknown multiplication {kind!r}; expected one of {', '.join(KINDS)}")
    return kind


def _check(a, b, c):
    for x in (a, b, c):
        if x.dimension != 3 or len(set(x.shape)) != 1:
            raise SizeMismatch("arguments must be cubices")
    if not a.shape == b.shape == c.shape:
        raise SizeMismatch(f"sizes differ: {a.shape}, {b.shape}, {c.shape}")
    if not a.semiring == b.semiring == c.semiring:
        raise SemiringMismatch("arguments live in different semirings")


def multiply(kind: str, a: Cubix, b: Cubix, c: Cubix) -> Cubix:
    """Evaluate one of the ten ternary multiplications entry by entry."""
    kind = resolve_kind(kind)
    _check(a, b, c)
    s = a.semiring
    N = a.shape[0]
    nsum, idx = _FORMULAS[kind]
    add, mul, zero = s.add, s.mul, s.zero
    A, B, C = a.entries, b.entries, c.entries

    def off(t):
        return (t[0] * N + t[1]) * N + t[2]

    sums = list(product(range(N), repeat=nsum))
    out = []
    for i, j, k in product(range(N), repeat=3):
        acc = zero
        for pqr in sums:
            p, q, r = (tuple(pqr) + (0, 0, 0))[:3]
            ia, ib, ic = idx(i, j, k, p, q, r)
            acc = add(acc, mul(mul(A[off(ia)], B[off(ib)]), C[off(ic)]))
        out.append(acc)
    return Cubix(s, (N, N, N), tuple(out))


IDENTITY_NAMES = ("i1", "i2", "i3", "I")


def make_cubix_identities(N: int, semiring) -> tuple[Cubix, Cubix, Cubix, Cubix]:
    """Partial identities ``i1 = δ_ij``, ``i2 = δ_jk``, ``i3 = δ_ik`` and tridentity ``I = δ_ijk``."""
    if N < 1:
        raise InputError("N must be positive")
    one, zero = semiring.one, semiring.zero

    def d(cond):
        return one if cond else zero

    return (
        Cubix.build(semiring, N, lambda i, j, k: d(i == j)),
        Cubix.build(semiring, N, lambda i, j, k: d(j == k)),
        Cubix.build(semiring, N, lambda i, j, k: d(i == k)),
        Cubix.build(semiring, N, lambda i, j, k: d(i == j == k)),
    )


def identities_by_name(N: int, semiring) -> dict:
    return dict(zip(IDENTITY_NAMES, make_cubix_identities(N, semiring)))
