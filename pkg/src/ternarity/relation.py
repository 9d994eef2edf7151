"""Ternary relations over finite sets and their arity-preserving compositions.

Every composition is read off the index pattern of the matching cubix
multiplication: a summed index becomes an existentially quantified element,
a free index a shared variable of the output triple.  The four named
compositions also have hand-written comprehensions, which the tests compare
against the pattern-derived engine.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import product

from ternarity.errors import FrameError, InputError
from ternarity.ndmatrix.array import Cubix
from ternarity.ndmatrix.products import SCHEMES, SHAPE_OF, resolve_kind
from ternarity.ndmatrix.semiring import BOOL
from ternarity.ndmatrix.splice import SpliceScheme

COMPOSITION_KINDS = {
    "cone": "p1", "blades": "p2", "triforce": "p3", "fish": "p4",
    "boat_1": "p5_1", "boat_2": "p5_2",
    "clamp_1": "p6_1", "clamp_2": "p6_2", "clamp_3": "p6_3",
    "cone_2": "p7",
}

# Alternative triforce reading, with T on (x, z, c).  It disagrees with p3 and is
# kept only so the two readings can be compared.
TRIFORCE_ALT_SCHEME = SpliceScheme.parse("ipq,pjr,prk->ijk")


@dataclass(frozen=True)
class FinSet:
    """The set ``{0, ..., n-1}``; ``name`` is a label only."""

    n: int
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise InputError(f"cardinality must be a non-negative integer, got {self.n!r}")

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(range(self.n))


def _fs(x) -> FinSet:
    return x if isinstance(x, FinSet) else FinSet(int(x))


@dataclass(frozen=True)
class TernaryRelation:
    frame: tuple          # (A, B, C) as FinSets
    triples: frozenset

    def __post_init__(self):
        if len(self.frame) != 3:
            raise FrameError("a ternary relation needs a frame of three sets")
        for t in self.triples:
            if len(t) != 3 or any(not (0 <= x < s.n) for x, s in zip(t, self.frame)):
                raise FrameError(f"triple {t} lies outside the frame {self.sizes}")

    @classmethod
    def make(cls, frame, triples=()) -> "TernaryRelation":
        frame = tuple(_fs(s) for s in frame)
        return cls(frame, frozenset(tuple(int(x) for x in t) for t in triples))

    @classmethod
    def full(cls, frame) -> "TernaryRelation":
        frame = tuple(_fs(s) for s in frame)
        return cls(frame, frozenset(product(*(range(s.n) for s in frame))))

    @classmethod
    def random(cls, frame, rng: random.Random, density: float = 0.5) -> "TernaryRelation":
        frame = tuple(_fs(s) for s in frame)
        return cls(frame, frozenset(t for t in product(*(range(s.n) for s in frame)) if rng.random() < density))

    @property
    def sizes(self) -> tuple:
        return tuple(s.n for s in self.frame)

    def __contains__(self, t):
        return tuple(t) in self.triples

    def __len__(self):
        return len(self.triples)

    def __le__(self, other):
        return self.sizes == other.sizes and self.triples <= other.triples

    def sorted_triples(self) -> list:
        return sorted(self.triples)

    def to_json(self) -> dict:
        a, b, c = self.sizes
        return {"frame": {"A": a, "B": b, "C": c}, "triples": [list(t) for t in self.sorted_triples()]}

    @classmethod
    def from_json(cls, data) -> "TernaryRelation":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        try:
            f = data["frame"]
            frame = (FinSet(int(f["A"]), "A"), FinSet(int(f["B"]), "B"), FinSet(int(f["C"]), "C"))
            return cls.make(frame, data["triples"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed relation JSON: {exc}") from exc


def resolve_composition(kind: str) -> str:
    """Composition name for a composition or multiplication name."""
    if kind in COMPOSITION_KINDS:
        return kind
    try:
        p = resolve_kind(kind)
    except InputError:
        raise InputError(f"unknown composition {kind!r}; expected one of {', '.join(COMPOSITION_KINDS)}") from None
    return next(name for name, q in COMPOSITION_KINDS.items() if q == p)


def _bind_frames(scheme: SpliceScheme, rels) -> dict:
    sizes = {}
    for r, slot in zip(rels, scheme.slots):
        for v, s in zip(slot, r.frame):
            if v in sizes and sizes[v].n != s.n:
                raise FrameError(
                    f"shared set {v!r} has {sizes[v].n} elements in one argument and {s.n} in another"
                )
            sizes.setdefault(v, s)
    return sizes


def compose_by_scheme(scheme: SpliceScheme, R, S, T) -> TernaryRelation:
    """Existential join following a splice scheme: summed index -> exists, free index -> shared."""
    rels = (R, S, T)
    sizes = _bind_frames(scheme, rels)
    out = set()

    def walk(slot_no, env):
        if slot_no == 3:
            out.add(tuple(env[v] for v in scheme.output_order))
            return
        slot = scheme.slots[slot_no]
        rel = rels[slot_no]
        if all(v in env for v in slot):
            if tuple(env[v] for v in slot) in rel.triples:
                walk(slot_no + 1, env)
            return
        for t in rel.triples:
            new = dict(env)
            ok = True
            for v, x in zip(slot, t):
                if new.setdefault(v, x) != x:
                    ok = False
                    break
            if ok:
                walk(slot_no + 1, new)

    walk(0, {})
    frame = tuple(sizes[v] for v in scheme.output_order)
    return TernaryRelation(frame, frozenset(out))


def _exists(*ranges):
    return product(*(range(n) for n in ranges))


def _cone(R, S, T):
    A, B, X = R.sizes
    C = S.sizes[2]
    return {(a, b, c) for a, b, c in _exists(A, B, C)
            if any((a, b, x) in R.triples and (a, x, c) in S.triples and (x, b, c) in T.triples for x in range(X))}


def _blades(R, S, T):
    A, X, Y = R.sizes
    B, C = S.sizes[1], T.sizes[2]
    return {(a, b, c) for a, b, c in _exists(A, B, C)
            if any((a, x, y) in R.triples and (x, b, y) in S.triples and (y, x, c) in T.triples
                   for x, y in _exists(X, Y))}


def _triforce(R, S, T):
    A, X, Y = R.sizes
    B, Z = S.sizes[1], S.sizes[2]
    C = T.sizes[2]
    return {(a, b, c) for a, b, c in _exists(A, B, C)
            if any((a, x, y) in R.triples and (x, b, z) in S.triples and (y, z, c) in T.triples
                   for x, y, z in _exists(X, Y, Z))}


def _fish(R, S, T):
    A, B, X = R.sizes
    Y, Z = S.sizes[1], S.sizes[2]
    C = T.sizes[2]
    return {(a, b, c) for a, b, c in _exists(A, B, C)
            if any((a, b, x) in R.triples and (x, y, z) in S.triples and (y, z, c) in T.triples
                   for x, y, z in _exists(X, Y, Z))}


_EXPLICIT = {"cone": _cone, "blades": _blades, "triforce": _triforce, "fish": _fish}


def compose(kind: str, R: TernaryRelation, S: TernaryRelation, T: TernaryRelation, *, explicit: bool = False) -> TernaryRelation:
    """Compose three ternary relations along the sharing pattern of ``kind``.

    With ``explicit=True`` the four named compositions use their hand-written
    comprehensions instead of the join engine (same result, slower).
    """
    name = resolve_composition(kind)
    scheme = SCHEMES[COMPOSITION_KINDS[name]]
    if explicit and name in _EXPLICIT:
        sizes = _bind_frames(scheme, (R, S, T))
        frame = tuple(sizes[v] for v in scheme.output_order)
        return TernaryRelation(frame, frozenset(_EXPLICIT[name](R, S, T)))
    return compose_by_scheme(scheme, R, S, T)


def compose_triforce_alt(R, S, T) -> TernaryRelation:
    return compose_by_scheme(TRIFORCE_ALT_SCHEME, R, S, T)


def shape_of(kind: str) -> str:
    return SHAPE_OF[COMPOSITION_KINDS[resolve_composition(kind)]]


def partial_identity_rel(A, B) -> TernaryRelation:
    """``{(a, a, b)}`` inside ``A x A x B``."""
    A, B = _fs(A), _fs(B)
    return TernaryRelation((A, A, B), frozenset((a, a, b) for a in range(A.n) for b in range(B.n)))


def tridentity_rel(A) -> TernaryRelation:
    """The diagonal ``{(a, a, a)}``."""
    A = _fs(A)
    return TernaryRelation((A, A, A), frozenset((a, a, a) for a in range(A.n)))


def to_boolean_cubix(R: TernaryRelation) -> Cubix:
    a, b, c = R.sizes
    if not a == b == c:
        raise FrameError(f"a cubix needs a square frame, got {R.sizes}")
    return Cubix.build(BOOL, a, lambda i, j, k: (i, j, k) in R.triples)


def from_boolean_cubix(c: Cubix, frame=None) -> TernaryRelation:
    if c.semiring != BOOL:
        raise InputError("expected a Boolean cubix")
    N = c.size
    frame = tuple(_fs(s) for s in frame) if frame is not None else (FinSet(N, "A"), FinSet(N, "B"), FinSet(N, "C"))
    if tuple(s.n for s in frame) != (N, N, N):
        raise FrameError(f"frame {tuple(s.n for s in frame)} does not match cubix size {N}")
    return TernaryRelation(frame, frozenset(ix for ix in c.indices() if c[ix]))
