import numpy as np
import pytest

from albertdiag.algebra import COMPACT, SPLIT, Octonion, Quaternion
from albertdiag.errors import HermiticityViolation, MismatchedAlgebra, SplitUnsupported
from albertdiag.jordan import (
    JordanElement,
    PairElement,
    det,
    freudenthal_cross,
    from_pair,
    inner_product,
    inner_product_via_trace,
    jordan_product,
    pair_cross,
    random_element,
    sigma,
    to_pair,
    trace,
    unit_E,
)

from conftest import e


def diag(*v, mu=COMPACT):
    return JordanElement.diagonal(v, mu)


def test_unit_is_jordan_identity(rng):
    X = random_element(rng)
    assert jordan_product(X, unit_E()).allclose(X, atol=1e-15)


def test_diagonal_product():
    assert jordan_product(diag(1, 2, 3), diag(4, 5, 6)).allclose(diag(4, 10, 18), atol=0)


def test_square_with_e4_entry():
    # X^2 for x1 = e4: (2,2) = x1 conj(x1) = 1, (3,3) = conj(x1) x1 = 1
    X = JordanElement.from_entries(x1=e(4))
    assert jordan_product(X, X).allclose(diag(0, 1, 1), atol=0)


def test_expansion_is_hermitian(rng):
    X = random_element(rng)
    m = X.matrix()
    conjT = np.swapaxes(m, 0, 1) * np.array([1.0] + [-1.0] * 7)
    assert np.array_equal(m, conjT)
    assert JordanElement.from_matrix(m).allclose(X, atol=0)


def test_non_hermitian_matrix_rejected(rng):
    m = random_element(rng).matrix()
    m[0, 1, 3] += 1e-6
    with pytest.raises(HermiticityViolation):
        JordanElement.from_matrix(m)


def test_trace_and_unit():
    assert trace(unit_E()) == 3.0
    assert trace(diag(1, 2, 3)) == 6.0
    assert np.array_equal(unit_E().off, np.zeros((3, 8)))


def test_inner_product_values():
    assert inner_product(unit_E(), unit_E()) == 3.0
    assert inner_product(JordanElement.from_entries(x1=e(1)), JordanElement.from_entries(x1=e(1))) == 2.0


@pytest.mark.parametrize("mu", [COMPACT, SPLIT])
def test_inner_closed_form_matches_trace(mu, rng):
    for _ in range(100):
        X, Y = random_element(rng, mu), random_element(rng, mu)
        assert abs(inner_product(X, Y) - inner_product_via_trace(X, Y)) <= 1e-11


def test_inner_definiteness(rng):
    for _ in range(50):
        X = random_element(rng)
        assert inner_product(X, X) > 0
    split_values = [inner_product(X, X) for X in (random_element(rng, SPLIT) for _ in range(200))]
    assert min(split_values) < 0 < max(split_values)


@pytest.mark.parametrize("mu", [COMPACT, SPLIT])
def test_bilinear_symmetric(mu, rng):
    for _ in range(30):
        X, Y, Z = (random_element(rng, mu) for _ in range(3))
        s, t = rng.normal(size=2)
        for prod in (jordan_product, freudenthal_cross):
            assert prod(X, Y).allclose(prod(Y, X), atol=1e-11)
            lhs = prod(s * X + t * Y, Z)
            rhs = s * prod(X, Z) + t * prod(Y, Z)
            assert lhs.allclose(rhs, atol=1e-11)
        assert abs(inner_product(X, Y) - inner_product(Y, X)) <= 1e-11
        assert abs(inner_product(s * X + t * Y, Z) - s * inner_product(X, Z) - t * inner_product(Y, Z)) <= 1e-11


def test_cross_examples():
    assert freudenthal_cross(unit_E(), unit_E()).allclose(unit_E(), atol=0)
    a, b, c = 1.5, -2.0, 0.25
    X = diag(a, b, c)
    assert freudenthal_cross(X, X).allclose(diag(b * c, c * a, a * b), atol=1e-15)
    assert inner_product(freudenthal_cross(unit_E(), unit_E()), unit_E()) == 3.0


def test_det_sigma():
    assert det(diag(1, 2, 3)) == pytest.approx(6.0, abs=1e-15)
    assert sigma(unit_E()) == 3.0
    assert det(unit_E()) == 1.0


def test_det_sigma_on_diagonals(rng):
    for _ in range(100):
        a, b, c = rng.uniform(-3, 3, 3)
        X = diag(a, b, c)
        assert abs(sigma(X) - (a * b + b * c + c * a)) <= 1e-12 * max(1, abs(a * b) + abs(b * c) + abs(c * a))
        assert abs(det(X) - a * b * c) <= 1e-12 * max(1, abs(a * b * c))


def test_split_X0_invariants():
    # X0 x X0 = diag(1, 0, 0) by hand expansion, so sigma = 1, det = (diag(1,0,0), X0)/3 = 0
    X0 = JordanElement.from_entries(x1=e(4, SPLIT), mu=SPLIT)
    assert freudenthal_cross(X0, X0).allclose(diag(1, 0, 0, mu=SPLIT), atol=0)
    assert sigma(X0) == 1.0
    assert det(X0) == 0.0


def test_mismatched_algebra():
    with pytest.raises(MismatchedAlgebra):
        jordan_product(unit_E(), unit_E(SPLIT))
    with pytest.raises(MismatchedAlgebra):
        JordanElement.from_entries(x1=e(1, SPLIT))


def test_to_pair_examples():
    P = to_pair(unit_E())
    assert np.array_equal(P.diag, [1, 1, 1]) and not P.m.any() and not P.a.any()
    X = JordanElement.from_entries(x1=e(2) + e(5))
    P = to_pair(X)
    assert np.array_equal(P.m[0], Quaternion.basis(2).coeffs)
    assert np.array_equal(P.a[0], Quaternion.basis(1).coeffs)  # e5 = e1 e4


def test_pair_round_trip(rng):
    for _ in range(50):
        X = random_element(rng)
        assert from_pair(to_pair(X)).allclose(X, atol=0)


def test_pair_model_compact_only():
    with pytest.raises(SplitUnsupported):
        to_pair(unit_E(SPLIT))


def test_pair_cross_examples():
    P = to_pair(unit_E())
    assert from_pair(pair_cross(P, P)).allclose(unit_E(), atol=0)
    # a = (1, 0, 0): -(a*a) = -diag(1, 0, 0), row part -(a 0 + a 0)/2 = 0
    a = np.zeros((3, 4))
    a[0, 0] = 1.0
    Q = PairElement(np.zeros(3), np.zeros((3, 4)), a)
    R = pair_cross(Q, Q)
    assert np.array_equal(R.diag, [-1, 0, 0]) and not R.m.any() and not R.a.any()
    # same element on the octonion side: x1 = e4
    X = from_pair(Q)
    assert X.allclose(JordanElement.from_entries(x1=e(4)), atol=0)
    assert freudenthal_cross(X, X).allclose(from_pair(R), atol=0)


def test_pair_correspondence(rng):
    for _ in range(200):
        X, Y = random_element(rng), random_element(rng)
        got = pair_cross(to_pair(X), to_pair(Y))
        assert got.max_abs_diff(to_pair(freudenthal_cross(X, Y))) <= 1e-10


def test_json_round_trip(rng):
    X = random_element(rng, SPLIT)
    data = X.to_json()
    assert set(data) == {"algebra", "diag", "x1", "x2", "x3"}
    assert JordanElement.from_json(data).allclose(X, atol=0)


def test_entries_accessors():
    X = JordanElement.from_entries((1, 2, 3), x1=e(1), x2=e(2), x3=e(3))
    assert (X.xi1, X.xi2, X.xi3) == (1.0, 2.0, 3.0)
    assert X.x1.allclose(e(1)) and X.x2.allclose(e(2)) and X.x3.allclose(e(3))
    assert isinstance(X.x1, Octonion)
