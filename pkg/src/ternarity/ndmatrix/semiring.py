"""Exact scalar semirings: Boolean, prime fields and rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ternarity.errors import InputError


@dataclass(frozen=True)
class Boolean:
    zero = 0
    one = 1

    @property
    def tag(self) -> str:
        return "bool"

    def add(self, a, b):
        return a | b

    def mul(self, a, b):
        return a & b

    def neg(self, a):
        raise InputError("the Boolean semiring has no additive inverses")

    def coerce(self, x):
        if x in (0, 1, True, False):
            return int(bool(x))
        raise InputError(f"not a Boolean value: {x!r}")

    def random(self, rng):
        return rng.randrange(2)

    def encode(self, x):
        return int(x)

    def decode(self, x):
        return self.coerce(x)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and self.p < 2**31 and _is_prime(self.p)):
            raise InputError(f"field characteristic must be a prime below 2^31, got {self.p!r}")

    zero = 0
    one = 1

    @property
    def tag(self) -> str:
        return f"fp:{self.p}"

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def coerce(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise InputError(f"not an integer: {x!r}")
        return x % self.p

    def random(self, rng):
        return rng.randrange(self.p)

    def encode(self, x):
        return int(x)

    def decode(self, x):
        return self.coerce(x)


@dataclass(frozen=True)
class Rational:
    zero = Fraction(0)
    one = Fraction(1)

    @property
    def tag(self) -> str:
        return "rational"

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def coerce(self, x):
        if isinstance(x, float):
            raise InputError("floating point values are not accepted")
        try:
            return Fraction(x)
        except (TypeError, ValueError) as exc:
            raise InputError(f"not a rational: {x!r}") from exc

    def random(self, rng, num=20, den=10):
        return Fraction(rng.randint(-num, num), rng.randint(1, den))

    def encode(self, x):
        return f"{x.numerator}/{x.denominator}"

    def decode(self, x):
        return self.coerce(x)


BOOL = Boolean()
RATIONAL = Rational()


def parse_semiring(tag: str):
    """``"bool"``, ``"fp:<p>"`` or ``"rational"``."""
    if tag == "bool":
        return BOOL
    if tag == "rational":
        return RATIONAL
    if tag.startswith("fp:"):
        try:
            return PrimeField(int(tag[3:]))
        except ValueError as exc:
            raise InputError(f"bad field tag {tag!r}") from exc
    raise InputError(f"unknown semiring {tag!r}")
