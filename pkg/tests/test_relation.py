import json
import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from ternarity.errors import FrameError
from ternarity.ndmatrix import BOOL, Cubix, multiply
from ternarity.ndmatrix.products import make_cubix_identities
from ternarity.relation import (
    COMPOSITION_KINDS,
    FinSet,
    TernaryRelation,
    compose,
    compose_triforce_alt,
    from_boolean_cubix,
    partial_identity_rel,
    to_boolean_cubix,
    tridentity_rel,
)


def bridge_holds(kind, R, S, T):
    lhs = to_boolean_cubix(compose(kind, R, S, T))
    rhs = multiply(kind, to_boolean_cubix(R), to_boolean_cubix(S), to_boolean_cubix(T))
    return lhs == rhs


@pytest.mark.parametrize("kind", COMPOSITION_KINDS)
def test_bridge_exhaustive_on_singletons(kind):
    for bits in product((0, 1), repeat=3):
        R, S, T = (TernaryRelation.make((1, 1, 1), [(0, 0, 0)] if b else []) for b in bits)
        assert bridge_holds(kind, R, S, T)


@pytest.mark.parametrize("kind", COMPOSITION_KINDS)
def test_bridge_random(kind):
    rng = random.Random(kind)
    for _ in range(60):
        n = rng.choice((2, 3))
        R, S, T = (TernaryRelation.random((n, n, n), rng, rng.random()) for _ in range(3))
        assert bridge_holds(kind, R, S, T)


@pytest.mark.parametrize("kind", ["cone", "blades", "triforce", "fish"])
def test_join_engine_matches_comprehension(kind):
    rng = random.Random(1)
    for _ in range(40):
        R, S, T = (TernaryRelation.random((3, 3, 3), rng) for _ in range(3))
        assert compose(kind, R, S, T) == compose(kind, R, S, T, explicit=True)


def test_cone_example():
    R = TernaryRelation.make((2, 2, 2), [(0, 0, 0)])
    S = TernaryRelation.make((2, 2, 2), [(0, 0, 1)])
    T = TernaryRelation.make((2, 2, 2), [(0, 0, 1)])
    assert compose("cone", R, S, T).sorted_triples() == [(0, 0, 1)]


@pytest.mark.parametrize("kind", COMPOSITION_KINDS)
def test_empty_and_full(kind):
    full = TernaryRelation.full((2, 2, 2))
    empty = TernaryRelation.make((2, 2, 2))
    assert len(compose(kind, empty, full, full)) == 0
    assert compose(kind, full, full, full) == full


def test_alternative_triforce_differs_from_bridge():
    rng = random.Random(2)
    diffs = 0
    for _ in range(50):
        R, S, T = (TernaryRelation.random((3, 3, 3), rng) for _ in range(3))
        diffs += compose_triforce_alt(R, S, T) != compose("triforce", R, S, T)
    assert diffs > 0


def test_mixed_frames():
    R = TernaryRelation.full((2, 3, 4))      # A x B x X
    S = TernaryRelation.full((2, 4, 5))      # A x X x C
    T = TernaryRelation.full((4, 3, 5))      # X x B x C
    out = compose("cone", R, S, T)
    assert out.sizes == (2, 3, 5) and len(out) == 30
    with pytest.raises(FrameError):
        compose("cone", R, S, TernaryRelation.full((3, 3, 5)))


def test_identity_relations():
    assert partial_identity_rel(2, 1).sorted_triples() == [(0, 0, 0), (1, 1, 0)]
    assert tridentity_rel(2).sorted_triples() == [(0, 0, 0), (1, 1, 1)]
    assert len(tridentity_rel(0)) == 0


def _permuted(R, perm):
    frame = tuple(R.frame[i] for i in perm)
    return TernaryRelation(frame, frozenset(tuple(t[i] for i in perm) for t in R.triples))


def test_cone_with_two_partial_identities_returns_argument():
    # Boolean image of p1(a, i2, i3) = a
    rng = random.Random(3)
    for _ in range(30):
        a = TernaryRelation.random((3, 3, 3), rng)
        i2 = _permuted(partial_identity_rel(3, 3), (2, 0, 1))     # {(b, a, a)}
        i3 = _permuted(partial_identity_rel(3, 3), (0, 2, 1))     # {(a, b, a)}
        assert to_boolean_cubix(i2) == make_cubix_identities(3, BOOL)[1]
        assert to_boolean_cubix(i3) == make_cubix_identities(3, BOOL)[2]
        assert compose("cone", a, i2, i3) == a


def test_triforce_with_partial_identity_and_tridentity_returns_argument():
    rng = random.Random(4)
    for _ in range(30):
        a = TernaryRelation.random((3, 3, 3), rng)
        assert compose("triforce", a, partial_identity_rel(3, 3), tridentity_rel(3)) == a


def test_monotone():
    rng = random.Random(5)
    for kind in COMPOSITION_KINDS:
        R, S, T = (TernaryRelation.random((3, 3, 3), rng, 0.3) for _ in range(3))
        bigger = TernaryRelation(R.frame, R.triples | TernaryRelation.random((3, 3, 3), rng, 0.3).triples)
        assert compose(kind, R, S, T) <= compose(kind, bigger, S, T)


@given(st.sets(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))))
def test_cubix_roundtrip(triples):
    R = TernaryRelation.make((3, 3, 3), triples)
    assert from_boolean_cubix(to_boolean_cubix(R)) == R
    assert to_boolean_cubix(tridentity_rel(3)) == make_cubix_identities(3, BOOL)[3]


def test_non_square_frame_rejected():
    with pytest.raises(FrameError):
        to_boolean_cubix(TernaryRelation.full((2, 2, 3)))


def test_json_roundtrip_and_order():
    R = TernaryRelation.make((2, 3, 2), [(1, 2, 0), (0, 0, 1)])
    data = R.to_json()
    assert data == {"frame": {"A": 2, "B": 3, "C": 2}, "triples": [[0, 0, 1], [1, 2, 0]]}
    assert TernaryRelation.from_json(json.dumps(data)).triples == R.triples


def test_out_of_frame_triple_rejected():
    with pytest.raises(FrameError):
        TernaryRelation.make((1, 1, 1), [(0, 1, 0)])
