import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rbf_fock.core import (L2Sig, fourier_l2, fourier_quadrature, gauss_hermite, hermite_expand, hermite_fit,
                           hermite_fn, hermite_functions, l2_inner, position_matrix, translate)
from rbf_fock.errors import ContextError, ParameterDomainError


def test_psi_zero_at_origin():
    assert hermite_fn(0, 1.0, 0.0) == pytest.approx(0.7511255, abs=1e-7)


@pytest.mark.parametrize("alpha", [0.5, 2.0, 8.0])
def test_hermite_functions_orthonormal(alpha):
    rule = gauss_hermite(40, alpha)
    polys = hermite_functions(20, alpha, rule.nodes, weighted=False)
    gram = (polys * rule.weights) @ polys.T
    np.testing.assert_allclose(gram, np.eye(20), atol=1e-12)


def test_hermite_functions_high_order_stay_finite():
    table = hermite_functions(400, 1.0, np.linspace(-30, 30, 101))
    assert np.all(np.isfinite(table))
    assert np.max(np.abs(table)) < 1.0


def test_hermite_fn_matches_closed_form():
    x = np.linspace(-2, 2, 9)
    alpha = 2.0
    expected = (alpha / math.pi) ** 0.25 * math.sqrt(2.0) * math.sqrt(alpha) * x * np.exp(-alpha * x ** 2 / 2)
    np.testing.assert_allclose(hermite_fn(1, alpha, x), expected, atol=1e-14)


@pytest.mark.parametrize("n", [0, 3, 10])
def test_hermite_expand_recovers_basis(n):
    alpha = 2.0
    sig = hermite_expand(lambda x: hermite_fn(n, alpha, x), alpha, 16)
    expected = np.zeros(16)
    expected[n] = 1.0
    np.testing.assert_allclose(sig.coeffs, expected, atol=1e-12)


def test_hermite_expand_rejects_wrong_rule():
    with pytest.raises(ParameterDomainError):
        hermite_expand(lambda x: np.ones_like(x), 2.0, 8, gauss_hermite(32, 1.0))


def test_hermite_fit_from_samples():
    x = np.linspace(-6.0, 6.0, 200)
    sig = hermite_fit(x, hermite_fn(0, 1.0, x), 1.0, 16)
    expected = np.zeros(16)
    expected[0] = 1.0
    np.testing.assert_allclose(sig.coeffs, expected, atol=1e-10)


def test_hermite_fit_needs_enough_samples():
    with pytest.raises(ParameterDomainError):
        hermite_fit([0.0, 1.0], [1.0, 1.0], 1.0, 8)


def test_signal_evaluate_and_norm():
    sig = L2Sig(alpha=2.0, coeffs=[0.6, 0.8j])
    x = np.array([-0.3, 0.0, 0.7])
    expected = 0.6 * hermite_fn(0, 2.0, x) + 0.8j * hermite_fn(1, 2.0, x)
    np.testing.assert_allclose(sig.evaluate(x), expected, atol=1e-15)
    assert sig.norm == pytest.approx(1.0)


def test_l2_inner_is_conjugate_linear_in_first_argument():
    a = L2Sig(alpha=1.0, coeffs=[1j, 0.0])
    b = L2Sig(alpha=1.0, coeffs=[1.0, 2.0, 3.0])
    assert l2_inner(a, b) == pytest.approx(-1j)


def test_l2_inner_rejects_mixed_alpha():
    with pytest.raises(ContextError):
        l2_inner(L2Sig(alpha=1.0, coeffs=[1.0]), L2Sig(alpha=2.0, coeffs=[1.0]))


@pytest.mark.parametrize("alpha", [0.5, 2.0])
def test_position_matrix_entries(alpha):
    x = position_matrix(6, alpha)
    np.testing.assert_allclose(x, x.T)
    for k in range(5):
        assert x[k + 1, k] == pytest.approx(math.sqrt((k + 1) / (2 * alpha)))
    assert np.all(np.diag(x) == 0)


def test_fourier_l2_phases_and_period():
    sig = L2Sig(alpha=1.0, coeffs=np.arange(1, 9) * (1 + 0.5j))
    once = fourier_l2(sig)
    np.testing.assert_array_equal(once.coeffs[:4], sig.coeffs[:4] * np.array([1, -1j, -1, 1j]))
    four = fourier_l2(fourier_l2(fourier_l2(once)))
    np.testing.assert_array_equal(four.coeffs, sig.coeffs)


@given(n=st.integers(0, 8), alpha=st.sampled_from([0.5, 1.0, 2.0, 8.0]))
def test_fourier_quadrature_matches_eigenvalues(n, alpha):
    lam = np.linspace(-2.0, 2.0, 7)
    sig = L2Sig.basis(n, alpha, 12)
    expected = (-1j) ** n * hermite_fn(n, alpha, lam)
    np.testing.assert_allclose(fourier_quadrature(sig, lam), expected, atol=1e-10)


def test_translate_gaussian():
    alpha, a = 1.0, 0.3
    shifted = translate(L2Sig.basis(0, alpha, 32), a)
    x = np.linspace(-3, 3, 13)
    np.testing.assert_allclose(shifted.evaluate(x), hermite_fn(0, alpha, x - a), atol=1e-10)


def test_translate_rejects_non_finite_shift():
    with pytest.raises(ParameterDomainError):
        translate(L2Sig.basis(0, 1.0, 4), math.inf)


@pytest.mark.parametrize("alpha", [0.5, 2.0, 8.0])
def test_hermite_functions_parity(alpha):
    x = np.linspace(0.0, 4.0, 41)
    table = hermite_functions(30, alpha, x)
    mirrored = hermite_functions(30, alpha, -x)
    signs = (-1.0) ** np.arange(30)
    np.testing.assert_array_equal(mirrored, signs[:, None] * table)


def test_hermite_expand_of_x_psi_zero():
    sig = hermite_expand(lambda x: x * hermite_fn(0, 2.0, x), 2.0, 12)
    expected = np.zeros(12)
    expected[1] = 0.5
    np.testing.assert_allclose(sig.coeffs, expected, atol=1e-13)


@pytest.mark.parametrize("alpha", [0.5, 2.0])
def test_position_matrix_columns_expand_x_psi(alpha):
    n = 12
    matrix = position_matrix(n, alpha)
    for k in range(n - 1):
        column = hermite_expand(lambda x, k=k: x * hermite_fn(k, alpha, x), alpha, n).coeffs
        np.testing.assert_allclose(column, matrix[:, k], atol=1e-12)
