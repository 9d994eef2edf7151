"""Canonical forms, automorphism orbits and isomorphism tests.

The search kernel is compiled with Cython when the extension is available;
set ``TERNARITY_PURE_PYTHON=1`` to force the pure-Python kernel.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from ternarity.hypergraph import _canon_py
from ternarity.hypergraph.core import Hypergraph

_kernel = _canon_py
if not os.environ.get("TERNARITY_PURE_PYTHON"):
    try:
        from ternarity.hypergraph import _canon_cy as _kernel  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover - depends on build
        _kernel = _canon_py

BACKEND = _kernel.BACKEND
ALGORITHM_VERSION = "ir-edges-1"


def kernels():
    """All importable kernels, keyed by backend name."""
    out = {"python": _canon_py}
    try:
        from ternarity.hypergraph import _canon_cy
        out["cython"] = _canon_cy
    except ImportError:  # pragma: no cover
        pass
    return out


def encode_certificate(k: int, cert) -> bytes:
    colors, masks = cert
    body = f"{k}:{len(colors)}:" + ",".join(format(x, "x") for x in masks)
    if any(colors):
        body += ";" + ",".join(str(c) for c in colors)
    return body.encode("ascii")


@dataclass(frozen=True)
class CanonicalForm:
    bytes: bytes
    orbits: tuple | None = None

    def hex(self) -> str:
        return self.bytes.hex()

    def __eq__(self, other):
        return isinstance(other, CanonicalForm) and self.bytes == other.bytes

    def __hash__(self):
        return hash(self.bytes)


@dataclass(frozen=True)
class Labeling:
    """Full output of a canonical labeling run on an integer hypergraph."""

    k: int
    n: int
    edges: tuple        # input edges, as given
    cert: tuple
    order: tuple        # input edge indices in canonical order
    generators: tuple   # edge permutations

    @property
    def key(self) -> bytes:
        return encode_certificate(self.k, self.cert)

    def edge_orbits(self) -> list[int]:
        """Orbit representative (smallest index) for every edge."""
        m = len(self.edges)
        parent = list(range(m))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for g in self.generators:
            for a in range(m):
                ra, rb = find(a), find(g[a])
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        return [find(a) for a in range(m)]

    def vertex_masks(self) -> list[int]:
        masks = [0] * self.n
        for r, e in enumerate(self.order):
            for v in self.edges[e]:
                masks[v] |= 1 << r
        return masks

    def vertex_generators(self) -> list[tuple]:
        """Vertex permutations generating the automorphism group.

        Edge generators are lifted through membership masks; transpositions of
        twin vertices (identical masks) are added since they fix every edge.
        """
        m = len(self.edges)
        base = [0] * self.n
        for e, verts in enumerate(self.edges):
            for v in verts:
                base[v] |= 1 << e
        by_mask = {}
        for v, mk in enumerate(base):
            by_mask.setdefault(mk, []).append(v)
        gens = []
        for g in self.generators:
            perm = [0] * self.n
            for mk, vs in by_mask.items():
                img = 0
                for e in range(m):
                    if mk >> e & 1:
                        img |= 1 << g[e]
                for v, w in zip(vs, by_mask[img]):
                    perm[v] = w
            gens.append(tuple(perm))
        for vs in by_mask.values():
            for a, b in zip(vs, vs[1:]):
                perm = list(range(self.n))
                perm[a], perm[b] = b, a
                gens.append(tuple(perm))
        return gens

    def vertex_orbits(self) -> list[int]:
        parent = list(range(self.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for g in self.vertex_generators():
            for a in range(self.n):
                ra, rb = find(a), find(g[a])
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        return [find(a) for a in range(self.n)]

    def canonical_edges(self) -> list[tuple[int, ...]]:
        """Edges of the canonical representative on vertices ``0..n-1``."""
        masks = self.cert[1]
        m = len(self.order)
        return sorted(
            tuple(v for v, mk in enumerate(masks) if mk >> r & 1) for r in range(m)
        )

    def vertex_map(self) -> list[int]:
        """Original vertex index to canonical vertex index."""
        masks = self.vertex_masks()
        slots = {}
        for i, mk in enumerate(self.cert[1]):
            slots.setdefault(mk, []).append(i)
        out = [0] * self.n
        for v in range(self.n):
            out[v] = slots[masks[v]].pop(0)
        return out


def label(k: int, n: int, edges, colors=None, kernel=None) -> Labeling:
    edges = tuple(tuple(e) for e in edges)
    kern = kernel or _kernel
    cert, order, gens = kern.canonical_label(n, list(edges), None if colors is None else list(colors))
    return Labeling(k, n, edges, cert, tuple(order), tuple(tuple(g) for g in gens))


def label_hypergraph(h: Hypergraph, kernel=None) -> Labeling:
    n, edges = h.integer_form()
    return label(h.k, n, edges, kernel=kernel)


def canonical_form(h: Hypergraph, with_orbits: bool = False) -> CanonicalForm:
    lab = label_hypergraph(h)
    orbits = None
    if with_orbits:
        reps = lab.vertex_orbits()
        groups = {}
        for v, r in enumerate(reps):
            groups.setdefault(r, []).append(h.vertices[v])
        orbits = tuple(frozenset(g) for _, g in sorted(groups.items()))
    return CanonicalForm(lab.key, orbits)


def canonical_hypergraph(h: Hypergraph) -> Hypergraph:
    """The canonical representative, on integer vertices ``0..n-1``."""
    lab = label_hypergraph(h)
    return Hypergraph.from_edges(h.k, lab.canonical_edges(), vertices=range(lab.n))


def is_isomorphic(g: Hypergraph, h: Hypergraph) -> bool:
    if g.k != h.k or len(g.edges) != len(h.edges) or len(g.vertices) != len(h.vertices):
        return False
    return canonical_form(g).bytes == canonical_form(h).bytes
