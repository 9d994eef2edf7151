"""General incidence/contraction splicing of multi-index arrays.

A :class:`SpliceScheme` places each argument array on a hyperedge whose
vertices name its indices.  A vertex marked ``output`` survives into the
result (incidence when shared); a vertex marked ``contract`` is summed over
(contraction when shared, a trace-out otherwise).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

from ternarity.errors import InputError, SemiringMismatch, SizeMismatch
from ternarity.hypergraph.core import Hypergraph
from ternarity.ndmatrix.array import MultiArray

OUTPUT = "output"
CONTRACT = "contract"


@dataclass(frozen=True)
class SpliceScheme:
    slots: tuple            # per argument: vertex name for each index position
    roles: tuple            # sorted (vertex, role) pairs
    output_order: tuple

    def __post_init__(self):
        verts = {v for slot in self.slots for v in slot}
        role = dict(self.roles)
        if set(role) != verts:
            raise InputError("every slot vertex needs exactly one role")
        if any(r not in (OUTPUT, CONTRACT) for r in role.values()):
            raise InputError("roles must be 'output' or 'contract'")
        outs = {v for v, r in role.items() if r == OUTPUT}
        if set(self.output_order) != outs or len(self.output_order) != len(outs):
            raise InputError("output order must list each output vertex once")
        for slot in self.slots:
            if len(set(slot)) != len(slot):
                raise InputError(f"slot {slot} repeats a vertex")

    @classmethod
    def parse(cls, spec: str) -> "SpliceScheme":
        """Einsum-like notation with one-letter vertices, e.g. ``"ij,jk->ik"``."""
        try:
            lhs, rhs = spec.replace(" ", "").split("->")
        except ValueError as exc:
            raise InputError(f"bad scheme {spec!r}") from exc
        slots = tuple(tuple(s) for s in lhs.split(","))
        verts = sorted({v for s in slots for v in s})
        roles = tuple((v, OUTPUT if v in rhs else CONTRACT) for v in verts)
        return cls(slots, roles, tuple(rhs))

    def role(self, v) -> str:
        return dict(self.roles)[v]

    @property
    def dimension(self) -> int:
        return len(self.output_order)

    @property
    def contracted(self) -> tuple:
        return tuple(v for v, r in self.roles if r == CONTRACT)

    def shape(self) -> Hypergraph:
        """The underlying hypergraph; only defined when all slots have equal arity."""
        return Hypergraph.from_edges(len(self.slots[0]), self.slots)

    def __str__(self):
        return ",".join("".join(map(str, s)) for s in self.slots) + "->" + "".join(map(str, self.output_order))


def splice(scheme: SpliceScheme, args) -> MultiArray:
    """Entry = sum over contracted assignments of the product of slot entries."""
    args = list(args)
    if len(args) != len(scheme.slots):
        raise InputError(f"scheme has {len(scheme.slots)} slots, got {len(args)} arguments")
    s = args[0].semiring
    if any(a.semiring != s for a in args):
        raise SemiringMismatch("arguments live in different semirings")
    ranges = {}
    for a, slot in zip(args, scheme.slots):
        if a.dimension != len(slot):
            raise SizeMismatch(f"slot {slot} needs a {len(slot)}-index array, got dimension {a.dimension}")
        for v, n in zip(slot, a.shape):
            if ranges.setdefault(v, n) != n:
                raise SizeMismatch(f"index {v!r} ranges over {ranges[v]} and {n}")

    outs = scheme.output_order
    sums = scheme.contracted
    pos = {v: i for i, v in enumerate(outs + sums)}
    plans = []
    for a, slot in zip(args, scheme.slots):
        strides = []
        st = 1
        for n in reversed(a.shape):
            strides.append(st)
            st *= n
        strides.reverse()
        plans.append((a.entries, tuple((pos[v], strides[t]) for t, v in enumerate(slot))))

    add, mul, zero = s.add, s.mul, s.zero
    sum_space = list(product(*(range(ranges[v]) for v in sums)))
    out_shape = tuple(ranges[v] for v in outs)
    entries = []
    for o in product(*(range(n) for n in out_shape)):
        acc = zero
        for c in sum_space:
            ix = o + c
            term = None
            for ent, plan in plans:
                x = ent[sum(ix[p] * st for p, st in plan)]
                term = x if term is None else mul(term, x)
            acc = add(acc, term)
        entries.append(acc)
    assert len(entries) == prod(out_shape)
    return MultiArray(s, out_shape, tuple(entries))
