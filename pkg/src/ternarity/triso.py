"""Trisomorphisms between finite sets and their cone, blades and triforce compositions.

A trisomorphism ``(f, g, h)`` is a triangle of bijections ``A -f-> B -g-> C -h-> A``
whose every cyclic composite is an identity.  Composition preconditions
(equal parallel arrows, commuting inner triangles) are checked element by
element and violations raise :class:`ComposabilityError`.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from ternarity.errors import ComposabilityError, FrameError, InputError
from ternarity.relation import FinSet


class NotATrisomorphism(InputError):
    """A triangle of bijections whose round trip is not the identity."""

    def __init__(self, message, obj=None, element=None):
        super().__init__(message)
        self.obj = obj
        self.element = element


@dataclass(frozen=True)
class FinBijection:
    domain: FinSet
    codomain: FinSet
    images: tuple

    def __post_init__(self):
        if self.domain.n != self.codomain.n:
            raise InputError(f"no bijection between sets of sizes {self.domain.n} and {self.codomain.n}")
        if len(self.images) != self.domain.n or sorted(self.images) != list(range(self.codomain.n)):
            raise InputError(f"images {self.images} do not define a bijection onto {self.codomain.n} elements")

    @classmethod
    def of(cls, images, domain=None, codomain=None) -> "FinBijection":
        images = tuple(int(x) for x in images)
        n = len(images)
        return cls(domain or FinSet(n), codomain or FinSet(n), images)

    @classmethod
    def identity(cls, A: FinSet) -> "FinBijection":
        return cls(A, A, tuple(range(A.n)))

    @classmethod
    def random(cls, A: FinSet, B: FinSet, rng: random.Random) -> "FinBijection":
        images = list(range(B.n))
        rng.shuffle(images)
        return cls(A, B, tuple(images))

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __matmul__(self, other: "FinBijection") -> "FinBijection":
        """``self @ other`` is ``self`` after ``other``."""
        if other.codomain != self.domain:
            raise FrameError(f"cannot compose {self.domain.name or self.domain.n} with {other.codomain.name or other.codomain.n}")
        return FinBijection(other.domain, self.codomain, tuple(self.images[x] for x in other.images))

    def inverse(self) -> "FinBijection":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return FinBijection(self.codomain, self.domain, tuple(inv))

    def is_identity(self) -> bool:
        return self.domain == self.codomain and all(x == y for x, y in enumerate(self.images))

    def first_moved(self):
        return next((x for x, y in enumerate(self.images) if x != y), None)

    def to_json(self) -> dict:
        return {"domain": self.domain.n, "codomain": self.codomain.n, "map": list(self.images)}

    @classmethod
    def from_json(cls, data, domain=None, codomain=None) -> "FinBijection":
        try:
            dom = domain or FinSet(int(data["domain"]))
            cod = codomain or FinSet(int(data["codomain"]))
            if dom.n != int(data["domain"]) or cod.n != int(data["codomain"]):
                raise FrameError("bijection frame disagrees with the supplied sets")
            return cls(dom, cod, tuple(int(x) for x in data["map"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed bijection JSON: {exc}") from exc


@dataclass(frozen=True)
class Trisomorphism:
    f: FinBijection
    g: FinBijection
    h: FinBijection

    @property
    def objects(self) -> tuple:
        return (self.f.domain, self.g.domain, self.h.domain)

    def cycles(self) -> tuple:
        """``h g f``, ``f h g`` and ``g f h``: all identities for a valid trisomorphism."""
        f, g, h = self.f, self.g, self.h
        return (h @ g @ f, f @ h @ g, g @ f @ h)

    def to_json(self) -> dict:
        return {"f": self.f.to_json(), "g": self.g.to_json(), "h": self.h.to_json()}


def make_triso(f: FinBijection, g: FinBijection, h: FinBijection) -> Trisomorphism:
    """Validate ``A -f-> B -g-> C -h-> A``; the error names the first object and element that fail."""
    if f.codomain != g.domain or g.codomain != h.domain or h.codomain != f.domain:
        raise FrameError("arrows do not form a triangle A -> B -> C -> A")
    t = Trisomorphism(f, g, h)
    for label, cyc in zip("ABC", t.cycles()):
        x = cyc.first_moved()
        if x is not None:
            raise NotATrisomorphism(
                f"round trip at {label} sends {x} to {cyc(x)}", obj=label, element=x
            )
    return t


def tridentity(A: FinSet) -> Trisomorphism:
    one = FinBijection.identity(A)
    return make_triso(one, one, one)


def partial_identity(f: FinBijection) -> Trisomorphism:
    """``(1_A, f, f^-1)`` for a bijection ``f: A -> B``."""
    return make_triso(FinBijection.identity(f.domain), f, f.inverse())


def _require_equal(name, x: FinBijection, y: FinBijection):
    if x.domain != y.domain or x.codomain != y.codomain:
        raise ComposabilityError(f"{name}: arrows connect different objects")
    if x.images != y.images:
        e = next(i for i, (a, b) in enumerate(zip(x.images, y.images)) if a != b)
        raise ComposabilityError(f"{name}: arrows differ at element {e} ({x(e)} vs {y(e)})")


def compose_cone(t1: Trisomorphism, t2: Trisomorphism, t3: Trisomorphism) -> Trisomorphism:
    """Cone: ``t1 = (A->B, B->X, X->A)``, ``t2 = (B->C, C->X, X->B)``, ``t3 = (C->A, A->X, X->C)``.

    The two arrows joining each outer object to ``X`` must be mutually inverse;
    the result is ``(f1, f2, f3)``.
    """
    _require_equal("g1 vs h2^-1", t1.g, t2.h.inverse())
    _require_equal("g2 vs h3^-1", t2.g, t3.h.inverse())
    _require_equal("g3 vs h1^-1", t3.g, t1.h.inverse())
    return make_triso(t1.f, t2.f, t3.f)


def compose_blades(t1: Trisomorphism, t2: Trisomorphism, t3: Trisomorphism) -> Trisomorphism:
    """Blades: ``ti = (outer_i -> X, X -> Y, Y -> outer_{i-1})`` sharing one ``z = g1 = g2 = g3``.

    Outer arrows are ``h2 z f1``, ``h3 z f2`` and ``h1 z f3``.
    """
    _require_equal("g1 vs g2", t1.g, t2.g)
    _require_equal("g2 vs g3", t2.g, t3.g)
    z = t1.g
    return make_triso(t2.h @ z @ t1.f, t3.h @ z @ t2.f, t1.h @ z @ t3.f)


def compose_triforce(t1: Trisomorphism, t2: Trisomorphism, t3: Trisomorphism) -> Trisomorphism:
    """Triforce: ``t1 = (A->X, X->Y, Y->A)``, ``t2 = (B->Z, Z->X, X->B)``, ``t3 = (C->Y, Y->Z, Z->C)``.

    The inner triangle ``X -g1-> Y -g3-> Z -g2-> X`` must itself be a
    trisomorphism; outer arrows are ``h2 f1``, ``h3 f2`` and ``h1 f3``.
    """
    try:
        make_triso(t1.g, t3.g, t2.g)
    except NotATrisomorphism as exc:
        raise ComposabilityError(f"inner triangle (g1, g3, g2) is not a trisomorphism: {exc}") from exc
    except FrameError as exc:
        raise ComposabilityError(f"inner arrows do not form a triangle: {exc}") from exc
    return make_triso(t2.h @ t1.f, t3.h @ t2.f, t1.h @ t3.f)


COMPOSITIONS = {"cone": compose_cone, "blades": compose_blades, "triforce": compose_triforce}


def _random_triso(A, B, C, rng):
    f = FinBijection.random(A, B, rng)
    g = FinBijection.random(B, C, rng)
    return make_triso(f, g, (g @ f).inverse())


def random_instance(kind: str, n: int, rng: random.Random) -> tuple:
    """Three trisomorphisms on ``n``-element sets satisfying the composability condition of ``kind``."""
    A, B, C, X, Y, Z = (FinSet(n, s) for s in "ABCXYZ")
    rnd = lambda a, b: FinBijection.random(a, b, rng)  # noqa: E731
    if kind == "cone":
        # outer triangle first, then the arrows into X from A; the rest are forced
        f1, f2 = rnd(A, B), rnd(B, C)
        f3 = (f2 @ f1).inverse()
        g3 = rnd(A, X)
        h1 = g3.inverse()
        g1 = g3 @ f1.inverse()
        h2 = g1.inverse()
        g2 = g1 @ f2.inverse()
        h3 = g2.inverse()
        return make_triso(f1, g1, h1), make_triso(f2, g2, h2), make_triso(f3, g3, h3)
    if kind == "blades":
        z = rnd(X, Y)
        return tuple(make_triso(f, z, (z @ f).inverse()) for f in (rnd(A, X), rnd(B, X), rnd(C, X)))
    if kind == "triforce":
        inner = _random_triso(X, Y, Z, rng)
        g1, g3, g2 = inner.f, inner.g, inner.h
        f1, f2, f3 = rnd(A, X), rnd(B, Z), rnd(C, Y)
        return (
            make_triso(f1, g1, (g1 @ f1).inverse()),
            make_triso(f2, g2, (g2 @ f2).inverse()),
            make_triso(f3, g3, (g3 @ f3).inverse()),
        )
    raise InputError(f"unknown trisomorphism composition {kind!r}")


def trisos_from_json(data) -> list:
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    try:
        return [
            make_triso(*(FinBijection.from_json(t[key]) for key in "fgh"))
            for t in data
        ]
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed trisomorphism JSON: {exc}") from exc
