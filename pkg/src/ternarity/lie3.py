"""Ternary brackets over the rationals: skew-symmetry and the fundamental identity.

Elements are tuples of :class:`fractions.Fraction` (vectors) or tuples of
such tuples (square matrices).  Every check is exact.  Because the brackets
are trilinear, a law that is multilinear in its arguments holds everywhere
iff it holds on basis elements; the checks therefore sweep the basis first
(when it is small enough) and then draw seeded random samples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable

from ternarity.errors import InputError, SizeMismatch
from ternarity.verdict import Verdict

# -- vectors and matrices ---------------------------------------------------


def vec(*xs) -> tuple:
    return tuple(Fraction(x) for x in xs)


def basis(dim: int, i: int) -> tuple:
    return tuple(Fraction(int(j == i)) for j in range(dim))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vscale(c, v):
    return tuple(c * a for a in v)


def mat(rows) -> tuple:
    rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
    if any(len(r) != len(rows) for r in rows):
        raise SizeMismatch("matrix must be square")
    return rows


def madd(A, B):
    return tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(A, B))


def msub(A, B):
    return tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(A, B))


def mscale(c, A):
    return tuple(tuple(c * a for a in r) for r in A)


def mmul(A, B):
    n = len(A)
    if len(B) != n:
        raise SizeMismatch(f"{n}x{n} times {len(B)}x{len(B)}")
    return tuple(tuple(sum((A[i][t] * B[t][j] for t in range(n)), Fraction(0)) for j in range(n)) for i in range(n))


def trace(A):
    return sum((A[i][i] for i in range(len(A))), Fraction(0))


def commutator(A, B):
    return msub(mmul(A, B), mmul(B, A))


def identity_matrix(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def cross(u, v):
    if len(u) != 3 or len(v) != 3:
        raise SizeMismatch("cross product needs 3-vectors")
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-20, 20), rng.randint(1, 10))


# -- brackets ---------------------------------------------------------------


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def euclidean_bracket(a, b, c):
    """Formal 4x4 determinant with the basis in the first row, expanded along that row."""
    for x in (a, b, c):
        if len(x) != 4:
            raise SizeMismatch("the euclidean bracket acts on 4-vectors")
    rows = (a, b, c)
    out = []
    for col in range(4):
        minor = [[r[j] for j in range(4) if j != col] for r in rows]
        sign = 1 if col % 2 == 0 else -1
        out.append(sign * _det3(minor))
    return tuple(out)


def trace_bracket(A, B, C):
    """``tr(A)[B,C] + tr(B)[C,A] + tr(C)[A,B]``."""
    if not len(A) == len(B) == len(C):
        raise SizeMismatch("matrices must have equal size")
    return madd(
        madd(mscale(trace(A), commutator(B, C)), mscale(trace(B), commutator(C, A))),
        mscale(trace(C), commutator(A, B)),
    )


NESTED_ORDERS = ("left", "right")


def nested_bracket(alg: str, a, b, c, order: str = "left"):
    """Nested binary brackets in ``so3`` (cross product) or ``gl`` (commutator).

    ``order="left"`` is ``[[a,b],c]``, which satisfies the fundamental identity;
    ``order="right"`` is ``[a,[b,c]]``, which does not.
    """
    op = _binary(alg)
    if order == "left":
        return op(op(a, b), c)
    if order == "right":
        return op(a, op(b, c))
    raise InputError(f"order must be one of {NESTED_ORDERS}")


def _binary(alg: str):
    if alg == "so3":
        return cross
    if alg == "gl":
        return commutator
    raise InputError(f"unknown binary Lie algebra {alg!r}; expected 'so3' or 'gl'")


# -- handles ----------------------------------------------------------------


@dataclass(frozen=True)
class BracketHandle:
    """A named trilinear bracket with its carrier."""

    name: str
    kind: str                 # "vector" or "matrix"
    dim: int                  # vector length or matrix size
    fn: Callable

    def __call__(self, a, b, c):
        return self.fn(a, b, c)

    def add(self, x, y):
        return vadd(x, y) if self.kind == "vector" else madd(x, y)

    def scale(self, c, x):
        return vscale(c, x) if self.kind == "vector" else mscale(c, x)

    def zero(self):
        return self.scale(Fraction(0), self.basis()[0])

    def basis(self) -> list:
        if self.kind == "vector":
            return [basis(self.dim, i) for i in range(self.dim)]
        n = self.dim
        return [tuple(tuple(Fraction(int((r, s) == (i, j))) for s in range(n)) for r in range(n))
                for i in range(n) for j in range(n)]

    def random(self, rng: random.Random):
        if self.kind == "vector":
            return tuple(random_fraction(rng) for _ in range(self.dim))
        return tuple(tuple(random_fraction(rng) for _ in range(self.dim)) for _ in range(self.dim))

    def encode(self, x):
        if self.kind == "vector":
            return [_enc(v) for v in x]
        return [[_enc(v) for v in r] for r in x]


def _enc(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def euclidean4() -> BracketHandle:
    return BracketHandle("euclidean4", "vector", 4, euclidean_bracket)


def trace_matrix(N: int) -> BracketHandle:
    if N < 1:
        raise InputError("matrix size must be positive")
    return BracketHandle(f"trace:{N}", "matrix", N, trace_bracket)


def nested(alg: str, N: int = 2, order: str = "left") -> BracketHandle:
    if order not in NESTED_ORDERS:
        raise InputError(f"order must be one of {NESTED_ORDERS}")
    suffix = "" if order == "left" else ":right"
    if alg == "so3":
        return BracketHandle(f"nested:so3{suffix}", "vector", 3, lambda a, b, c: nested_bracket("so3", a, b, c, order))
    if alg == "gl":
        return BracketHandle(f"nested:gl:{N}{suffix}", "matrix", N, lambda a, b, c: nested_bracket("gl", a, b, c, order))
    raise InputError(f"unknown binary Lie algebra {alg!r}")


def parse_bracket(spec: str) -> BracketHandle:
    """``euclidean4``, ``trace:N``, ``nested:so3``, ``nested:gl:N``; append ``:right`` for ``[a,[b,c]]``."""
    parts = spec.split(":")
    order = "left"
    if parts[-1] == "right":
        order = "right"
        parts = parts[:-1]
    try:
        if parts == ["euclidean4"]:
            return euclidean4()
        if parts[0] == "trace" and len(parts) == 2:
            return trace_matrix(int(parts[1]))
        if parts[:2] == ["nested", "so3"] and len(parts) == 2:
            return nested("so3", order=order)
        if parts[:2] == ["nested", "gl"] and len(parts) == 3:
            return nested("gl", int(parts[2]), order=order)
    except ValueError:
        pass
    raise InputError(f"unknown bracket {spec!r}")


# -- checks -----------------------------------------------------------------

TRANSPOSITIONS = ((0, 1), (1, 2), (0, 2))


def _samples(handle, arity, trials, seed, sweep):
    """Basis tuples (if ``sweep`` and small enough) followed by ``trials`` random tuples."""
    B = handle.basis()
    if sweep and len(B) ** arity <= 20000:
        for t in product(B, repeat=arity):
            yield "basis", t
    for i in range(trials):
        rng = random.Random(f"{seed}:{i}")
        yield "random", tuple(handle.random(rng) for _ in range(arity))


def check_skew(handle: BracketHandle, trials: int = 200, seed: int = 0, sweep: bool = True) -> Verdict:
    """Total skew-symmetry: each transposition of arguments flips the sign."""
    if trials < 1:
        raise InputError("trials must be at least 1")
    law = f"{handle.name} skew-symmetric"
    for source, args in _samples(handle, 3, trials, seed, sweep):
        val = handle(*args)
        for i, j in TRANSPOSITIONS:
            sw = list(args)
            sw[i], sw[j] = sw[j], sw[i]
            other = handle(*sw)
            if handle.add(val, other) != handle.zero():
                return Verdict(law, False, trials, {
                    "source": source,
                    "args": [handle.encode(x) for x in args],
                    "swap": [i + 1, j + 1],
                    "value": handle.encode(val),
                    "swapped_value": handle.encode(other),
                })
    return Verdict(law, True, trials, detail={"method": "basis sweep + seeded random samples (evidence, not proof)"})


def fundamental_defect(handle: BracketHandle, x, y, a, b, c):
    """``[x,y,[a,b,c]] - [[x,y,a],b,c] - [a,[x,y,b],c] - [a,b,[x,y,c]]``."""
    br = handle
    lhs = br(x, y, br(a, b, c))
    rhs = br.add(br.add(br(br(x, y, a), b, c), br(a, br(x, y, b), c)), br(a, b, br(x, y, c)))
    return br.add(lhs, br.scale(Fraction(-1), rhs))


def check_fundamental(handle: BracketHandle, trials: int = 200, seed: int = 0, sweep: bool = True) -> Verdict:
    if trials < 1:
        raise InputError("trials must be at least 1")
    law = f"{handle.name} fundamental identity"
    zero = handle.zero()
    for source, args in _samples(handle, 5, trials, seed, sweep):
        d = fundamental_defect(handle, *args)
        if d != zero:
            return Verdict(law, False, trials, {
                "source": source,
                "args": dict(zip(("x", "y", "a", "b", "c"), (handle.encode(v) for v in args))),
                "defect": handle.encode(d),
            })
    return Verdict(law, True, trials, detail={"method": "basis sweep + seeded random samples (evidence, not proof)"})


def check_trilinear(handle: BracketHandle, trials: int = 20, seed: int = 0) -> Verdict:
    """Additivity and homogeneity in each argument on random rational inputs."""
    law = f"{handle.name} trilinear"
    rng = random.Random(seed)
    for _ in range(trials):
        args = [handle.random(rng) for _ in range(3)]
        extra = handle.random(rng)
        lam = random_fraction(rng)
        base = handle(*args)
        for pos in range(3):
            moved = list(args)
            moved[pos] = handle.add(args[pos], extra)
            other = list(args)
            other[pos] = extra
            if handle(*moved) != handle.add(base, handle(*other)):
                return Verdict(law, False, trials, {"position": pos + 1, "property": "additive"})
            scaled = list(args)
            scaled[pos] = handle.scale(lam, args[pos])
            if handle(*scaled) != handle.scale(lam, base):
                return Verdict(law, False, trials, {"position": pos + 1, "property": "homogeneous"})
    return Verdict(law, True, trials)
