"""Dense multi-index arrays over an exact semiring."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from math import prod

from ternarity.errors import InputError, SemiringMismatch, SizeMismatch
from ternarity.ndmatrix.semiring import parse_semiring


@dataclass(frozen=True)
class MultiArray:
    """Row-major array ``a[i1, ..., in]``; a 0-dimensional array holds one scalar."""

    semiring: object
    shape: tuple
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != prod(self.shape):
            raise SizeMismatch(f"{len(self.entries)} entries for shape {self.shape}")

    @property
    def dimension(self) -> int:
        return len(self.shape)

    def offset(self, index) -> int:
        off = 0
        for i, n in zip(index, self.shape):
            off = off * n + i
        return off

    def __getitem__(self, index):
        if not isinstance(index, tuple):
            index = (index,)
        return self.entries[self.offset(index)]

    def indices(self):
        return product(*(range(n) for n in self.shape))

    @classmethod
    def from_function(cls, semiring, shape, fn) -> "MultiArray":
        shape = tuple(shape)
        return cls(semiring, shape, tuple(semiring.coerce(fn(*ix)) for ix in product(*(range(n) for n in shape))))

    @classmethod
    def zeros(cls, semiring, shape) -> "MultiArray":
        return cls(semiring, tuple(shape), (semiring.zero,) * prod(shape))

    @classmethod
    def random(cls, semiring, shape, rng) -> "MultiArray":
        return cls(semiring, tuple(shape), tuple(semiring.random(rng) for _ in range(prod(shape))))

    def _check_same(self, other):
        if self.semiring != other.semiring:
            raise SemiringMismatch(f"{self.semiring.tag} vs {other.semiring.tag}")
        if self.shape != other.shape:
            raise SizeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        add = self.semiring.add
        return type(self)(self.semiring, self.shape, tuple(add(a, b) for a, b in zip(self.entries, other.entries)))

    def scale(self, c):
        mul = self.semiring.mul
        c = self.semiring.coerce(c)
        return type(self)(self.semiring, self.shape, tuple(mul(c, a) for a in self.entries))

    def nested(self):
        """Entries as nested lists, outermost index first."""
        def build(level, off):
            if level == len(self.shape):
                return self.entries[off]
            stride = prod(self.shape[level + 1:])
            return [build(level + 1, off + i * stride) for i in range(self.shape[level])]
        return build(0, 0)


class Cubix(MultiArray):
    """A regular 3-index array: ``a[i, j, k]`` with all indices in ``range(N)``."""

    def __post_init__(self):
        super().__post_init__()
        if len(self.shape) != 3 or len(set(self.shape)) != 1:
            raise SizeMismatch(f"a cubix needs shape (N, N, N), got {self.shape}")

    @property
    def size(self) -> int:
        return self.shape[0]

    @classmethod
    def build(cls, semiring, N, fn) -> "Cubix":
        return cls.from_function(semiring, (N, N, N), fn)

    @classmethod
    def of(cls, semiring, N, entries) -> "Cubix":
        return cls(semiring, (N, N, N), tuple(semiring.coerce(x) for x in entries))

    @classmethod
    def random_cubix(cls, semiring, N, rng) -> "Cubix":
        return cls.random(semiring, (N, N, N), rng)

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "semiring": self.semiring.tag,
            "entries": [self.semiring.encode(x) for x in self.entries],
        }

    @classmethod
    def from_json(cls, data) -> "Cubix":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        try:
            N = int(data["size"])
            s = parse_semiring(data["semiring"])
            entries = [s.decode(x) for x in data["entries"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed cubix JSON: {exc}") from exc
        return cls(s, (N, N, N), tuple(entries))


def as_cubix(a: MultiArray) -> Cubix:
    return Cubix(a.semiring, a.shape, a.entries)
