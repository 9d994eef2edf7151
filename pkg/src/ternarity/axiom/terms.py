"""Multilinear terms built from one ternary operation.

A term is a ternary tree whose leaves are the variables ``1..n``, each used
exactly once.  Trees are nested tuples: an ``int`` is a leaf, a 3-tuple is an
application of the operation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from ternarity.errors import InputError

SUPPORTED_VARIABLE_COUNTS = (3, 5, 7)


def _leaves(tree):
    if isinstance(tree, int):
        return (tree,)
    return tuple(x for child in tree for x in _leaves(child))


def _fill(tree, values):
    it = iter(values)

    def go(t):
        if isinstance(t, int):
            return next(it)
        return tuple(go(c) for c in t)

    return go(tree)


def _serialize(tree) -> str:
    if isinstance(tree, int):
        return f"x{tree}"
    return "(op " + " ".join(_serialize(c) for c in tree) + ")"


@dataclass(frozen=True, order=True)
class Term:
    tree: object

    @property
    def leaves(self) -> tuple:
        return _leaves(self.tree)

    @property
    def variables(self) -> frozenset:
        return frozenset(self.leaves)

    @property
    def applications(self) -> int:
        return (len(self.leaves) - 1) // 2

    @property
    def shape(self):
        """The tree with every leaf replaced by 0."""
        return _fill(self.tree, [0] * len(self.leaves))

    def rename(self, mapping: dict) -> "Term":
        return Term(_fill(self.tree, [mapping[x] for x in self.leaves]))

    def normalizer(self) -> dict:
        """Renaming that lists this term's leaves as ``1, 2, ..., n`` from left to right."""
        return {x: i + 1 for i, x in enumerate(self.leaves)}

    def is_normal(self) -> bool:
        return self.leaves == tuple(range(1, len(self.leaves) + 1))

    def __str__(self):
        return _serialize(self.tree)

    @classmethod
    def parse(cls, text: str) -> "Term":
        """Inverse of ``str``: ``"(op (op x1 x2 x3) x4 x5)"``."""
        tokens = re.findall(r"\(|\)|op|x\d+", text)
        if "".join(tokens) != re.sub(r"\s+", "", text):
            raise InputError(f"cannot parse term {text!r}")
        pos = 0

        def go():
            nonlocal pos
            if pos >= len(tokens):
                raise InputError(f"truncated term {text!r}")
            tok = tokens[pos]
            pos += 1
            if tok.startswith("x"):
                return int(tok[1:])
            if tok != "(" or pos >= len(tokens) or tokens[pos] != "op":
                raise InputError(f"expected '(op' in {text!r}")
            pos += 1
            kids = (go(), go(), go())
            if pos >= len(tokens) or tokens[pos] != ")":
                raise InputError(f"expected ')' in {text!r}")
            pos += 1
            return kids

        tree = go()
        if pos != len(tokens):
            raise InputError(f"trailing input in {text!r}")
        t = cls(tree)
        if sorted(t.leaves) != list(range(1, len(t.leaves) + 1)):
            raise InputError(f"term {text!r} is not multilinear in x1..x{len(t.leaves)}")
        return t


@lru_cache(maxsize=None)
def shapes(applications: int) -> tuple:
    """All ternary tree shapes with the given number of internal nodes (leaves are 0)."""
    if applications == 0:
        return (0,)
    out = []
    for a in range(applications):
        for b in range(applications - a):
            c = applications - 1 - a - b
            for x, y, z in product(shapes(a), shapes(b), shapes(c)):
                out.append((x, y, z))
    return tuple(out)


def enumerate_terms(num_vars: int) -> list[Term]:
    """Every multilinear term in ``x1..x_num_vars``: shapes times variable orders."""
    if num_vars not in SUPPORTED_VARIABLE_COUNTS:
        raise InputError(f"unsupported variable count {num_vars}; expected one of {SUPPORTED_VARIABLE_COUNTS}")
    apps = (num_vars - 1) // 2
    return [
        Term(_fill(shape, perm))
        for shape in shapes(apps)
        for perm in permutations(range(1, num_vars + 1))
    ]


def naive_associativity_terms() -> tuple[Term, Term, Term]:
    """``((abc)de)``, ``(a(bcd)e)`` and ``(ab(cde))``."""
    return (
        Term(((1, 2, 3), 4, 5)),
        Term((1, (2, 3, 4), 5)),
        Term((1, 2, (3, 4, 5))),
    )


def heap_terms() -> tuple[Term, Term, Term]:
    """``((abc)de)``, ``(a(dcb)e)`` and ``(ab(cde))``."""
    return (
        Term(((1, 2, 3), 4, 5)),
        Term((1, (4, 3, 2), 5)),
        Term((1, 2, (3, 4, 5))),
    )
