import math

import numpy as np
import pytest
from scipy.special import gamma as gamma_fn

from rbf_fock.core import gauss_hermite, gauss_hermite_2d, integrate_c, integrate_r, log_basis_coeff
from rbf_fock.errors import EvaluationError, ParameterDomainError


@pytest.mark.parametrize("n", [1, 2, 7, 20, 64])
@pytest.mark.parametrize("s", [0.5, 1.0, 2.0, 8.0])
def test_gauss_hermite_symmetry_and_mass(n, s):
    rule = gauss_hermite(n, s)
    assert rule.order == n
    assert np.all(np.diff(rule.nodes) > 0)
    np.testing.assert_allclose(rule.nodes, -rule.nodes[::-1], atol=1e-14 * max(1.0, rule.nodes.max()))
    assert np.all(rule.weights > 0)
    assert math.isclose(rule.weights.sum(), math.sqrt(math.pi / s), rel_tol=1e-12)


@pytest.mark.parametrize("s", [0.5, 2.0])
def test_gauss_hermite_even_moments(s):
    n = 20
    rule = gauss_hermite(n, s)
    for k in range(n):
        exact = gamma_fn(k + 0.5) / s ** (k + 0.5)
        got = integrate_r(lambda t: t ** (2 * k), rule)
        assert abs(got - exact) / exact < 1e-10


def test_gauss_hermite_single_node():
    rule = gauss_hermite(1, 1.0)
    assert rule.nodes.tolist() == [0.0]
    assert math.isclose(rule.weights[0], math.sqrt(math.pi))


def test_gauss_hermite_is_cached():
    assert gauss_hermite(10, 2.0) is gauss_hermite(10, 2.0)


@pytest.mark.parametrize("n, s", [(0, 1.0), (-3, 1.0), (4, 0.0), (4, -1.0)])
def test_gauss_hermite_rejects_bad_parameters(n, s):
    with pytest.raises(ParameterDomainError):
        gauss_hermite(n, s)


def test_integrate_r_constant():
    assert integrate_r(lambda t: np.ones_like(t), gauss_hermite(16, 1.0)) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


@pytest.mark.parametrize("alpha", [0.5, 2.0, 8.0])
def test_integrate_c_constant_is_pi_over_alpha(alpha):
    value = integrate_c(lambda z: np.ones(z.shape), gauss_hermite_2d(48, alpha))
    assert value == pytest.approx(math.pi / alpha, rel=1e-12)


def test_integrate_c_radial_moment():
    # int |z|^2 exp(-|z|^2) dA = pi
    value = integrate_c(lambda z: np.abs(z) ** 2, gauss_hermite_2d(12, 1.0))
    assert value == pytest.approx(math.pi, rel=1e-12)


def test_integrate_c_vector_valued():
    values = integrate_c(lambda z: np.stack([np.ones(z.shape), z.real ** 2], axis=-1), gauss_hermite_2d(8, 1.0))
    np.testing.assert_allclose(values, [math.pi, math.pi / 2], rtol=1e-12)


def test_integrate_r_reports_non_finite_node():
    rule = gauss_hermite(5, 1.0)
    with pytest.raises(EvaluationError) as info:
        integrate_r(lambda t: 1.0 / t, rule)
    assert info.value.node == 0.0


def test_log_basis_coeff_values():
    assert log_basis_coeff(0, 1.3) == 0.0
    # u_2(1) at alpha = 2 is sqrt(2^2 / 2!) = sqrt(2)
    assert math.exp(log_basis_coeff(2, 1.0)) == pytest.approx(1.4142136, abs=1e-7)
    values = log_basis_coeff(np.arange(6), 2.0)
    assert values.shape == (6,)


def test_log_basis_coeff_large_n_is_finite():
    assert math.isfinite(log_basis_coeff(1000, 0.1))
    assert math.isfinite(log_basis_coeff(1000, 10.0))


def test_log_basis_coeff_rejects_negative_n():
    with pytest.raises(ParameterDomainError):
        log_basis_coeff(-1, 1.0)
