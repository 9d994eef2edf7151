import random
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ternarity.errors import InputError, SemiringMismatch, SizeMismatch
from ternarity.ndmatrix import (
    BOOL,
    KINDS,
    RATIONAL,
    SCHEMES,
    Cubix,
    MultiArray,
    PrimeField,
    SpliceScheme,
    all_curried,
    curry,
    identity_subalgebra_scan,
    make_cubix_identities,
    multiply,
    parse_semiring,
    probe_binary,
    splice,
    verify_identity_catalogue,
)
from ternarity.ndmatrix.catalogue import CATALOGUE, heap_equalities
from ternarity.ndmatrix.products import BLADES_ALT_SCHEME, SCHEME_SPECS

F101 = PrimeField(101)


# -- semirings --------------------------------------------------------------


@given(st.integers(0, 100), st.integers(0, 100), st.integers(0, 100))
def test_prime_field_axioms(a, b, c):
    F = F101
    assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == F.zero


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50))
def test_rational_encode_roundtrip(a, b):
    x = RATIONAL.add(a, b)
    assert RATIONAL.decode(RATIONAL.encode(x)) == x


def test_boolean_is_or_and():
    assert [BOOL.add(a, b) for a, b in product((0, 1), repeat=2)] == [0, 1, 1, 1]
    assert [BOOL.mul(a, b) for a, b in product((0, 1), repeat=2)] == [0, 0, 0, 1]


def test_parse_semiring():
    assert parse_semiring("fp:7") == PrimeField(7)
    assert parse_semiring("bool") == BOOL
    with pytest.raises(InputError):
        parse_semiring("fp:8")
    with pytest.raises(InputError):
        parse_semiring("reals")


# -- arrays and splicing ----------------------------------------------------


def test_cubix_offset_and_json():
    c = Cubix.build(F101, 3, lambda i, j, k: 9 * i + 3 * j + k)
    assert c.entries == tuple(range(27))
    assert c[1, 2, 0] == 15
    assert Cubix.from_json(c.to_json()) == c


def test_cubix_rejects_non_cube():
    with pytest.raises(SizeMismatch):
        Cubix(F101, (2, 2, 3), (0,) * 12)


def _np(c):
    return np.array(c.entries, dtype=object).reshape(c.shape)


@pytest.mark.parametrize("spec", [
    "ij,jk->ik", "ijk,k->ij", "ij,ij->ij", "ijk->", "ij,jk,kl->il", "ijp,ipk,pjk->ijk", "ab,bc->ca",
])
def test_splice_matches_numpy_einsum(spec):
    rng = random.Random(spec)
    scheme = SpliceScheme.parse(spec)
    ranges = {}
    for slot in scheme.slots:
        for v in slot:
            ranges.setdefault(v, rng.randint(1, 3))
    args = [MultiArray.random(F101, [ranges[v] for v in slot], rng) for slot in scheme.slots]
    got = splice(scheme, args)
    want = np.einsum(spec, *[_np(a) for a in args]) % 101
    assert list(got.entries) == list(np.asarray(want).reshape(-1))


def test_splice_checks_sizes_and_semirings():
    s = SpliceScheme.parse("ij,jk->ik")
    a = MultiArray.zeros(F101, (2, 3))
    with pytest.raises(SizeMismatch):
        splice(s, [a, MultiArray.zeros(F101, (2, 2))])
    with pytest.raises(SemiringMismatch):
        splice(s, [a, MultiArray.zeros(RATIONAL, (3, 2))])


def test_scheme_shape_is_the_composition_hypergraph():
    from ternarity.hypergraph import is_isomorphic, shapes
    assert is_isomorphic(SCHEMES["p1"].shape(), shapes.cone())
    assert is_isomorphic(SCHEMES["p4"].shape(), shapes.fish())
    assert is_isomorphic(SCHEMES["p6_1"].shape(), shapes.clamp())


# -- multiplications --------------------------------------------------------


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("semiring", [F101, RATIONAL, BOOL], ids=["fp", "q", "bool"])
def test_explicit_formula_matches_splice_engine(kind, semiring):
    rng = random.Random(kind)
    for N in (1, 2, 3):
        a, b, c = (Cubix.random_cubix(semiring, N, rng) for _ in range(3))
        assert multiply(kind, a, b, c).entries == splice(SCHEMES[kind], [a, b, c]).entries


@pytest.mark.parametrize("kind", KINDS)
def test_multiplication_is_trilinear(kind):
    rng = random.Random(1)
    a, a2, b, c = (Cubix.random_cubix(RATIONAL, 2, rng) for _ in range(4))
    lam = Fraction(3, 7)
    assert multiply(kind, a + a2, b, c) == multiply(kind, a, b, c) + multiply(kind, a2, b, c)
    assert multiply(kind, b, c.scale(lam), a) == multiply(kind, b, c, a).scale(lam)


def test_p1_entry_by_hand():
    # N = 2: p1(a,b,c)[0,1,1] = sum_p a[0,1,p] b[0,p,1] c[p,1,1]
    rng = random.Random(2)
    a, b, c = (Cubix.random_cubix(RATIONAL, 2, rng) for _ in range(3))
    want = sum(a[0, 1, p] * b[0, p, 1] * c[p, 1, 1] for p in range(2))
    assert multiply("cone", a, b, c)[0, 1, 1] == want


def test_identities_definition():
    i1, i2, i3, I = make_cubix_identities(2, F101)
    assert i1[0, 0, 1] == 1 and i1[0, 1, 0] == 0
    assert i2[1, 0, 0] == 1 and i2[0, 0, 1] == 0
    assert i3[1, 0, 1] == 1 and i3[0, 1, 1] == 0
    assert sum(I.entries) == 2


def test_argument_validation():
    a = Cubix.random_cubix(F101, 2, random.Random(0))
    with pytest.raises(SizeMismatch):
        multiply("p1", a, a, Cubix.random_cubix(F101, 3, random.Random(0)))
    with pytest.raises(SemiringMismatch):
        multiply("p1", a, a, Cubix.random_cubix(RATIONAL, 2, random.Random(0)))
    with pytest.raises(InputError):
        multiply("p9", a, a, a)


# -- catalogue --------------------------------------------------------------


@pytest.mark.parametrize("kind", ["p1", "p2", "p3", "p4"])
def test_catalogue_holds(kind):
    for N in (2, 3):
        report = verify_identity_catalogue(kind, N, F101, trials=10, seed=N)
        assert report.all_passed, report.to_json()


def test_catalogue_sizes():
    assert [len(CATALOGUE[k]) for k in ("p1", "p2", "p3", "p4")] == [3, 3, 6, 5]


def test_blades_other_index_order_breaks_its_laws():
    # with c[p,q,k] the third factor is read the other way round and the laws fail
    rng = random.Random(4)
    i1, i2, i3, I = make_cubix_identities(2, F101)
    a = Cubix.random_cubix(F101, 2, rng)
    alt = splice(BLADES_ALT_SCHEME, [a, i1, i3])
    assert alt.entries != a.entries
    assert multiply("p2", a, i1, i3) == a


def test_catalogue_reports_counterexample_when_law_is_false():
    from ternarity.ndmatrix.catalogue import Equation, CatalogueReport
    eq = Equation("p1", ("a", "i1", "i1"))
    i = dict(zip(("i1", "i2", "i3", "I"), make_cubix_identities(2, F101)))
    lhs, rhs = eq.evaluate(Cubix.random_cubix(F101, 2, random.Random(0)), i)
    assert lhs != rhs


def test_degenerate_size_warns():
    report = verify_identity_catalogue("cone", 1, F101, trials=5)
    assert report.all_passed and report.warnings


@pytest.mark.parametrize("kind, count", [("p1", 63), ("p2", 52), ("p3", 31), ("p4", 28)])
def test_scan_counts(kind, count):
    a = identity_subalgebra_scan(kind, 2, F101)
    b = identity_subalgebra_scan(kind, 3, F101)
    assert a.count == count and a.quadruples == b.quadruples


def test_scan_contains_examples():
    assert ("i2", "i1", "i3", "I") in identity_subalgebra_scan("p1", 2, F101).quadruples
    assert ("I", "I", "I", "I") in identity_subalgebra_scan("p3", 2, F101).quadruples


def test_scan_rejects_degenerate_size():
    with pytest.raises(InputError):
        identity_subalgebra_scan("p1", 1, F101)


def test_twelve_curried_operations():
    ops = all_curried("cone")
    assert len(ops) == 12 and len({op.name for op in ops}) == 12


def test_curried_cone_is_associative_with_right_unit_only():
    op = curry("p1", 2, "i3")
    assert probe_binary(op, "associative", 2, F101, trials=10).holds
    v = probe_binary(op, "unital", 2, F101, trials=10)
    assert v.detail["right_units"] == ["i2"] and v.detail["left_units"] == []
    assert not v.holds


def test_curried_triforce_middle_tridentity_is_a_slicewise_matrix_product():
    # p3(x, I, y)[i,j,k] = sum_q x[i,j,q] y[q,j,k]: one matrix product per j,
    # hence associative with unit i3
    rng = random.Random(8)
    op = curry("p3", 1, "I")
    x, y = (Cubix.random_cubix(F101, 3, rng) for _ in range(2))
    want = Cubix.build(F101, 3, lambda i, j, k: sum(x[i, j, q] * y[q, j, k] for q in range(3)))
    assert op(x, y) == want
    assert probe_binary(op, "associative", 2, F101, trials=10).holds
    assert probe_binary(op, "unital", 2, F101, trials=10).detail["unit"] == "i3"


def test_non_associative_curried_operation_has_witness():
    op = curry("p3", 1, "i3")
    v = probe_binary(op, "associative", 2, F101, trials=10)
    assert not v.holds
    x, y, z = (Cubix.from_json(v.witness[n]) for n in "xyz")
    assert op(op(x, y), z) != op(x, op(y, z))


def test_heap_literal_and_reversed():
    rng = random.Random(9)
    args = [Cubix.random_cubix(F101, 2, rng) for _ in range(5)]
    assert heap_equalities(*args) == {"(1)=(2)": False, "(2)=(3)": False, "(1)=(3)": True}
    assert all(heap_equalities(*args, reversal=True).values())
