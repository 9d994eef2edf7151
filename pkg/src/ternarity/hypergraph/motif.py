"""Motif embeddings and motif-adjacency hypergraphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from ternarity.errors import PreconditionError
from ternarity.hypergraph.core import Hypergraph, externality, is_connected


@dataclass(frozen=True)
class Embedding:
    """An injective vertex map carrying motif edges onto distinct host edges.

    ``external`` holds the external vertices of the image subhypergraph,
    recomputed inside that subhypergraph.
    """

    vertex_map: tuple          # (motif vertex, host vertex) pairs in motif vertex order
    edges: frozenset           # image edges in the host
    external: frozenset


def _edge_order(m: Hypergraph) -> list[frozenset]:
    # each edge after the first meets an earlier one, so partial maps stay anchored
    edges = sorted(m.edges, key=lambda e: sorted(map(str, e)))
    order = [edges.pop(0)]
    covered = set(order[0])
    while edges:
        for i, e in enumerate(edges):
            if covered & e:
                break
        else:
            i = 0
        e = edges.pop(i)
        order.append(e)
        covered |= e
    return order


def find_motif_embeddings(h: Hypergraph, m: Hypergraph) -> list[Embedding]:
    """Every vertex map embedding ``m`` into ``h``, automorphic copies included."""
    if m.k != h.k:
        return []
    morder = _edge_order(m)
    hedges = sorted(h.edges, key=lambda e: sorted(map(str, e)))
    out = []
    fwd: dict = {}
    used_vertices: set = set()
    used_edges: list = []

    def extend(i):
        if i == len(morder):
            s = h.edge_subgraph(used_edges)
            vm = tuple((v, fwd[v]) for v in m.vertices)
            out.append(Embedding(vm, frozenset(used_edges), externality(s).external))
            return
        f = morder[i]
        mapped = [v for v in f if v in fwd]
        free = sorted((v for v in f if v not in fwd), key=str)
        for e in hedges:
            if e in used_edges:
                continue
            if any(fwd[v] not in e for v in mapped):
                continue
            targets = [w for w in e if w not in used_vertices]
            if len(targets) != len(free):
                continue
            for perm in permutations(sorted(targets, key=str)):
                for v, w in zip(free, perm):
                    fwd[v] = w
                    used_vertices.add(w)
                used_edges.append(e)
                extend(i + 1)
                used_edges.pop()
                for v, w in zip(free, perm):
                    del fwd[v]
                    used_vertices.discard(w)

    extend(0)
    return out


def automorphism_count(m: Hypergraph) -> int:
    return len(find_motif_embeddings(m, m))


def motif_adjacency(h: Hypergraph, m: Hypergraph) -> Hypergraph:
    """The ``m``-uniform hypergraph of external-vertex sets of embedded motifs.

    Duplicate vertex sets collapse to one hyperedge.  Vertices of ``h`` that
    end up in no hyperedge are dropped, keeping the result free of isolated
    vertices.
    """
    if not is_connected(m):
        raise PreconditionError("motif must be connected")
    ext = externality(m).externality
    if ext < 2:
        raise PreconditionError(f"motif externality must be at least 2, got {ext}")
    hyperedges = {emb.external for emb in find_motif_embeddings(h, m)}
    covered = set().union(*hyperedges) if hyperedges else set()
    verts = tuple(v for v in h.vertices if v in covered)
    return Hypergraph(ext, verts, frozenset(hyperedges))
