"""Named small hypergraphs used throughout the package.

Vertex names follow the ternary-composition reading: ``a, b, c`` are the
outer vertices and ``x, y, z`` (or ``p, q``) the shared inner ones.
"""

from ternarity.hypergraph.core import Hypergraph


def edge(k: int = 3) -> Hypergraph:
    return Hypergraph.from_edges(k, [tuple(f"v{i}" for i in range(k))])


def path(num_vertices: int) -> Hypergraph:
    """The 2-graph P_n: ``n`` vertices in a chain of ``n - 1`` edges."""
    return Hypergraph.from_edges(2, [(f"v{i}", f"v{i + 1}") for i in range(num_vertices - 1)])


def vee() -> Hypergraph:
    return Hypergraph.from_edges(2, [("a", "x"), ("x", "b")])


def triangle() -> Hypergraph:
    return Hypergraph.from_edges(2, [("a", "b"), ("b", "c"), ("c", "a")])


def star(leaves: int) -> Hypergraph:
    """K(1, leaves); the claw is ``star(3)``."""
    return Hypergraph.from_edges(2, [("hub", f"l{i}") for i in range(leaves)])


def claw() -> Hypergraph:
    return star(3)


def diamond() -> Hypergraph:
    return Hypergraph.from_edges(3, [("a", "x", "y"), ("x", "y", "b")])


def cone() -> Hypergraph:
    return Hypergraph.from_edges(3, [("a", "b", "x"), ("a", "x", "c"), ("x", "b", "c")])


def blades() -> Hypergraph:
    return Hypergraph.from_edges(3, [("a", "x", "y"), ("x", "b", "y"), ("x", "y", "c")])


def triforce() -> Hypergraph:
    return Hypergraph.from_edges(3, [("a", "x", "y"), ("x", "b", "z"), ("y", "z", "c")])


def fish() -> Hypergraph:
    return Hypergraph.from_edges(3, [("a", "b", "x"), ("x", "y", "z"), ("y", "z", "c")])


def boat() -> Hypergraph:
    """Shape of the boat multiplications: three edges fanned around one vertex."""
    return Hypergraph.from_edges(3, [("i", "j", "p"), ("p", "j", "q"), ("q", "j", "k")])


def clamp() -> Hypergraph:
    """Shape of the clamp multiplications."""
    return Hypergraph.from_edges(3, [("i", "j", "p"), ("i", "j", "q"), ("p", "q", "k")])


SIZE3_NAMED = {
    "cone": cone,
    "blades": blades,
    "triforce": triforce,
    "fish": fish,
    "boat": boat,
    "clamp": clamp,
}
