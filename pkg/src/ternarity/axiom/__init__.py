"""Multilinear ternary terms and a randomized exact search for identities among them."""

from ternarity.axiom.search import (
    CONFIRM_CONFIGS,
    FINGERPRINT_CONFIGS,
    HELD_OUT_CONFIG,
    CandidateIdentity,
    SearchReport,
    check_candidate,
    identity_key,
    naive_candidates,
    replay_witness,
    search_identities,
)
from ternarity.axiom.terms import Term, enumerate_terms, heap_terms, naive_associativity_terms, shapes

__all__ = [
    "CONFIRM_CONFIGS", "FINGERPRINT_CONFIGS", "HELD_OUT_CONFIG",
    "CandidateIdentity", "SearchReport", "Term",
    "check_candidate", "enumerate_terms", "heap_terms", "identity_key", "naive_associativity_terms",
    "naive_candidates", "replay_witness", "search_identities", "shapes",
]
