"""k-uniform hypergraphs: canonical forms, enumeration, splicing, motifs."""

from ternarity.hypergraph.canon import (
    CanonicalForm,
    canonical_form,
    canonical_hypergraph,
    is_isomorphic,
)
from ternarity.hypergraph.core import (
    ExternalityReport,
    Hypergraph,
    externality,
    is_connected,
    splice_hypergraphs,
)
from ternarity.hypergraph.enumerate import enumerate_classes, enumerate_compositions
from ternarity.hypergraph.motif import Embedding, find_motif_embeddings, motif_adjacency

__all__ = [
    "CanonicalForm",
    "Embedding",
    "ExternalityReport",
    "Hypergraph",
    "canonical_form",
    "canonical_hypergraph",
    "enumerate_classes",
    "enumerate_compositions",
    "externality",
    "find_motif_embeddings",
    "is_connected",
    "is_isomorphic",
    "motif_adjacency",
    "splice_hypergraphs",
]
