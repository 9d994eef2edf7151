"""Uniform simple hypergraphs and their elementary invariants."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Iterable

from ternarity.errors import InputError, PreconditionError, SimplicityError


@dataclass(frozen=True)
class Hypergraph:
    """A ``k``-uniform simple hypergraph without isolated vertices.

    Edges are frozensets of vertex identifiers.  Connectivity is not enforced
    here because intermediate construction states may be disconnected; use
    :func:`is_connected` where a ``k``-graph is required.
    """

    k: int
    vertices: tuple
    edges: frozenset

    def __post_init__(self):
        if self.k < 1:
            raise InputError(f"uniformity must be positive, got {self.k}")
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("duplicate vertex identifiers")
        vset = set(self.vertices)
        covered = set()
        for e in self.edges:
            if len(e) != self.k:
                raise InputError(f"edge {sorted(map(str, e))} does not have {self.k} distinct vertices")
            if not e <= vset:
                raise InputError(f"edge {sorted(map(str, e))} uses unknown vertices")
            covered |= e
        if covered != vset:
            isolated = sorted(map(str, vset - covered))
            raise InputError(f"isolated vertices: {isolated}")

    @classmethod
    def from_edges(cls, k: int, edges: Iterable[Iterable[Hashable]], vertices=None) -> "Hypergraph":
        """Build from an edge list; vertex order defaults to first appearance."""
        edges = [tuple(e) for e in edges]
        fs = []
        for e in edges:
            s = frozenset(e)
            if len(s) != len(e):
                raise InputError(f"edge {e} repeats a vertex")
            fs.append(s)
        edge_set = frozenset(fs)
        if len(edge_set) != len(fs):
            raise SimplicityError("duplicate edge")
        if vertices is None:
            seen = {}
            for e in edges:
                for v in e:
                    seen.setdefault(v, None)
            vertices = tuple(seen)
        return cls(k, tuple(vertices), edge_set)

    @property
    def size(self) -> int:
        return len(self.edges)

    def degrees(self) -> dict:
        deg = Counter(v for e in self.edges for v in e)
        return {v: deg[v] for v in self.vertices}

    def sorted_edges(self) -> list[tuple]:
        order = {v: i for i, v in enumerate(self.vertices)}
        return sorted(tuple(sorted(e, key=order.__getitem__)) for e in self.edges)

    def relabel(self, mapping) -> "Hypergraph":
        """Apply a vertex bijection given as a dict or callable."""
        f = mapping.__getitem__ if isinstance(mapping, dict) else mapping
        verts = tuple(f(v) for v in self.vertices)
        return Hypergraph(self.k, verts, frozenset(frozenset(f(v) for v in e) for e in self.edges))

    def edge_subgraph(self, edges) -> "Hypergraph":
        edges = frozenset(edges)
        covered = set().union(*edges) if edges else set()
        verts = tuple(v for v in self.vertices if v in covered)
        return Hypergraph(self.k, verts, edges)

    def integer_form(self) -> tuple[int, list[tuple[int, ...]]]:
        """Vertices as ``0..n-1`` in listed order, edges as sorted int tuples."""
        order = {v: i for i, v in enumerate(self.vertices)}
        edges = sorted(tuple(sorted(order[v] for v in e)) for e in self.edges)
        return len(self.vertices), edges

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "vertices": [str(v) for v in self.vertices],
            "edges": [sorted(str(v) for v in e) for e in self.sorted_edges()],
        }

    @classmethod
    def from_json(cls, data) -> "Hypergraph":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        try:
            k = int(data["k"])
            vertices = [str(v) for v in data["vertices"]]
            edges = [[str(v) for v in e] for e in data["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed hypergraph JSON: {exc}") from exc
        return cls.from_edges(k, edges, vertices=vertices)


@dataclass(frozen=True)
class ExternalityReport:
    external: frozenset
    internal: frozenset

    @property
    def externality(self) -> int:
        return len(self.external)


def externality(h: Hypergraph) -> ExternalityReport:
    """Split vertices into external (minimum degree) and internal ones.

    A single edge has all vertices external; otherwise a degree-regular
    hypergraph has no external vertices at all.
    """
    if not h.edges:
        raise InputError("externality of an empty hypergraph is undefined")
    deg = h.degrees()
    allv = frozenset(h.vertices)
    if len(h.edges) == 1:
        return ExternalityReport(allv, frozenset())
    lo = min(deg.values())
    if lo == max(deg.values()):
        return ExternalityReport(frozenset(), allv)
    ext = frozenset(v for v, d in deg.items() if d == lo)
    return ExternalityReport(ext, allv - ext)


def is_connected(h: Hypergraph) -> bool:
    if not h.vertices:
        return True
    adj = {v: set() for v in h.vertices}
    for e in h.edges:
        for v in e:
            adj[v] |= e
    start = h.vertices[0]
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(h.vertices)


def splice_hypergraphs(parts, gluing) -> Hypergraph:
    """Glue hypergraphs along pairs of external vertices.

    ``gluing`` is an iterable of pairs ``((i, u), (j, v))`` identifying vertex
    ``u`` of ``parts[i]`` with vertex ``v`` of ``parts[j]``.  Merged vertices
    are named by joining the sorted ``"i.u"`` tags with ``"="``.
    """
    parts = list(parts)
    if not parts:
        raise InputError("nothing to splice")
    k = parts[0].k
    if any(p.k != k for p in parts):
        raise InputError("parts have different uniformity")

    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ext_cache = {}
    for pair in gluing:
        (i, u), (j, v) = pair
        for idx, vert in ((i, u), (j, v)):
            if not 0 <= idx < len(parts) or vert not in parts[idx].vertices:
                raise InputError(f"unknown vertex {vert!r} in part {idx}")
            if idx not in ext_cache:
                ext_cache[idx] = externality(parts[idx]).external
            if vert not in ext_cache[idx]:
                raise PreconditionError(f"vertex {vert!r} of part {idx} is internal")
        ra, rb = find((i, u)), find((j, v))
        if ra != rb:
            parent[max(ra, rb, key=_tag)] = min(ra, rb, key=_tag)

    members = {}
    for i, p in enumerate(parts):
        for v in p.vertices:
            members.setdefault(find((i, v)), []).append((i, v))
    names = {}
    for root, group in members.items():
        name = "=".join(sorted(_tag(x) for x in group))
        for x in group:
            names[x] = name

    vertices = []
    seen = set()
    edges = []
    for i, p in enumerate(parts):
        for v in p.vertices:
            n = names[(i, v)]
            if n not in seen:
                seen.add(n)
                vertices.append(n)
        for e in p.sorted_edges():
            merged = frozenset(names[(i, v)] for v in e)
            if len(merged) != k:
                raise InputError(f"gluing collapses edge {e} of part {i}")
            edges.append(merged)
    if len(set(edges)) != len(edges):
        raise SimplicityError("gluing creates a duplicate edge")
    return Hypergraph(k, tuple(vertices), frozenset(edges))


def _tag(x) -> str:
    return f"{x[0]}.{x[1]}"
