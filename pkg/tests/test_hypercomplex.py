from fractions import Fraction
import json
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from lgr import lgr_catalog as catalog
from lgr.lgr_algebra import LieAlgebra, Vector
from lgr.lgr_errors import InvalidInput
from lgr.lgr_field import EXACT, FLOAT
from lgr.lgr_geometry import InnerProduct
from lgr.lgr_hypercomplex import (
    Endomorphism,
    is_hyper_hermitian,
    load_triple,
    nijenhuis,
    quaternion_product,
    standard_triple,
    triple_to_document,
    verify_triple,
)

X, Y, Z, W = range(4)
rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)
vectors = st.lists(rationals, min_size=4, max_size=4).map(Vector)

J1 = [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
J2 = [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]
J3 = [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]


def test_standard_triple_matrices():
    t = standard_triple()
    assert [list(row) for row in t.j1.matrix] == J1
    assert [list(row) for row in t.j2.matrix] == J2
    assert [list(row) for row in t.j3.matrix] == J3


def test_quaternion_product():
    i, j, k = (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    assert quaternion_product(i, j) == k
    assert quaternion_product(j, i) == (0, 0, 0, -1)
    assert quaternion_product(k, k) == (-1, 0, 0, 0)


@pytest.mark.parametrize("field", [EXACT, FLOAT])
def test_standard_triple_on_abelian(field):
    alg = catalog.get("abelian", field).algebra
    assert verify_triple(alg, standard_triple(field)).ok


def test_case1_nijenhuis_values():
    alg = catalog.get("case1").algebra
    J = standard_triple().j1
    e = [alg.basis(i) for i in range(4)]
    assert nijenhuis(alg, J, e[Z], e[W]).is_zero(EXACT)
    assert nijenhuis(alg, J, e[Y], e[Z]).is_zero(EXACT)


def test_non_integrable_structure():
    # h3 + R with [X,Z] = Y
    alg = LieAlgebra.from_brackets(4, {(X, Z): {Y: 1}}, catalog.BASIS)
    J = standard_triple().j1
    e = [alg.basis(i) for i in range(4)]
    assert nijenhuis(alg, J, e[X], e[Z]) == -e[Y]
    report = verify_triple(alg, standard_triple())
    assert "nijenhuis" in report.kinds()


@settings(max_examples=30, deadline=None)
@given(u=vectors, v=vectors)
def test_nijenhuis_antisymmetric(u, v):
    alg = catalog.get("case2").algebra
    J = standard_triple().j2
    assert nijenhuis(alg, J, u, v) == -nijenhuis(alg, J, v, u)


def test_broken_quaternion_relations():
    t = standard_triple()
    report = verify_triple(catalog.get("abelian").algebra, t.replace(2, t.j1))
    assert "quaternion" in report.kinds()
    assert "square" not in report.kinds()
    report = verify_triple(catalog.get("abelian").algebra, t.replace(0, -t.j1))
    assert "quaternion" in report.kinds()


def test_dimension_mismatch_is_reported():
    alg = LieAlgebra.from_brackets(3, {})
    report = verify_triple(alg, standard_triple())
    assert report.kinds() == {"dimension"}


def test_hyper_hermitian():
    t = standard_triple()
    assert is_hyper_hermitian(InnerProduct.identity(4, EXACT), t).ok
    assert is_hyper_hermitian(InnerProduct.identity(4, EXACT).scaled(3), t).ok
    g = InnerProduct([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 4]], EXACT)
    report = is_hyper_hermitian(g, t)
    assert not report.ok
    assert report.kinds() == {"hermitian"}


def test_endomorphism_composition():
    t = standard_triple()
    assert (t.j1 @ t.j2).matrix == t.j3.matrix
    v = Vector([1, 2, 3, 4])
    assert t.j1(t.j1(v)) == -v
    assert isinstance(Endomorphism(J1, FLOAT).matrix[0][1], float)


def test_triple_documents():
    t = standard_triple()
    again = load_triple(json.dumps(triple_to_document(t)))
    assert verify_triple(catalog.get("abelian").algebra, again).ok
    with pytest.raises(InvalidInput):
        load_triple('{"j1": []}')
    with pytest.raises(InvalidInput):
        load_triple("nope")


def test_single_entry_corruptions_are_detected():
    alg = catalog.get("abelian").algebra
    t = standard_triple()
    rng = np.random.default_rng(47)
    for _ in range(30):
        index = int(rng.integers(0, 3))
        a, b = (int(x) for x in rng.integers(0, 4, size=2))
        delta = Fraction(int(rng.integers(1, 4)), int(rng.integers(1, 4)))
        J = list(t)[index]
        matrix = [list(row) for row in J.matrix]
        matrix[a][b] += delta
        corrupted = t.replace(index, Endomorphism(matrix))
        assert not verify_triple(alg, corrupted).ok


def test_standard_triple_preserves_identity_metric():
    g = InnerProduct.identity(4, EXACT)
    rng = np.random.default_rng(79)
    for _ in range(100):
        u, v = (Vector(Fraction(int(x), 5) for x in rng.integers(-10, 11, size=4)) for _ in range(2))
        for J in standard_triple():
            assert g(J(u), J(v)) == g(u, v)


@pytest.mark.parametrize("name", ["case1", "case2"])
def test_nijenhuis_is_bilinear(name):
    alg = catalog.get(name).algebra
    e = [alg.basis(i) for i in range(4)]
    rng = np.random.default_rng(83)
    for J in standard_triple():
        table = [[nijenhuis(alg, J, e[i], e[j]) for j in range(4)] for i in range(4)]
        for _ in range(50):
            u, v = (Vector(Fraction(int(x), 3) for x in rng.integers(-6, 7, size=4)) for _ in range(2))
            expected = Vector([0, 0, 0, 0])
            for i in range(4):
                for j in range(4):
                    expected = expected + table[i][j].scale(u[i] * v[j])
            assert nijenhuis(alg, J, u, v) == expected
