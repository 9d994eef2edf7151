import random
from itertools import combinations, permutations

import pytest
from hypothesis import settings, strategies as st

from ternarity.hypergraph.core import Hypergraph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def random_hypergraph(rng: random.Random, k: int, n: int, m: int) -> Hypergraph:
    """Up to ``m`` distinct random ``k``-edges on ``n`` vertices (no isolated vertices)."""
    pool = list(combinations(range(n), k))
    edges = rng.sample(pool, min(m, len(pool)))
    return Hypergraph.from_edges(k, edges)


@st.composite
def hypergraphs(draw, k=None, max_vertices=7, max_edges=6):
    k = draw(st.integers(2, 3)) if k is None else k
    n = draw(st.integers(k, max_vertices))
    pool = list(combinations(range(n), k))
    edges = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=max_edges, unique=True))
    return Hypergraph.from_edges(k, edges)


def brute_isomorphic(g: Hypergraph, h: Hypergraph) -> bool:
    """Try every vertex bijection; fine up to 7 vertices."""
    if g.k != h.k or len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return False
    target = h.edges
    for perm in permutations(h.vertices):
        f = dict(zip(g.vertices, perm))
        if frozenset(frozenset(f[v] for v in e) for e in g.edges) == target:
            return True
    return False


@pytest.fixture
def rng():
    return random.Random(12345)
