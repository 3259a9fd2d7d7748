import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rbf_fock.core import (Convention, KernelParams, factorization_residual, fock_kernel, gauss_hermite_2d, gram,
                           integrate_c, mercer_partial, normalized_fock_state, phi_norm, rbf_kernel, rbf_sb_kernel,
                           sb_kernel)
from rbf_fock.errors import ParameterDomainError


gammas = st.sampled_from([0.5, 1.0, 2.0])
coords = st.floats(min_value=-1.4, max_value=1.4, allow_nan=False, allow_infinity=False)
points = st.builds(complex, coords, coords)
small = st.floats(min_value=-1.06, max_value=1.06, allow_nan=False, allow_infinity=False)
near = st.builds(complex, small, small)


def test_fock_kernel_examples():
    assert fock_kernel(2.0, 0.0, 3 + 4j) == 1.0
    value = fock_kernel(2.0, 1.0, 1j)
    assert value.real == pytest.approx(-0.4161468, abs=1e-7)
    assert value.imag == pytest.approx(-0.9092974, abs=1e-7)
    assert fock_kernel(1.0, 1 + 1j, 1 + 1j) == pytest.approx(math.exp(2.0))


def test_fock_kernel_broadcasts():
    z = np.array([0.0, 1.0, 1j])
    values = fock_kernel(1.0, z[:, None], z[None, :])
    assert values.shape == (3, 3)
    np.testing.assert_allclose(values, values.conj().T)


def test_normalized_fock_state_examples():
    assert normalized_fock_state(2.0, 0.0, 1.7 - 0.2j) == 1.0
    assert normalized_fock_state(2.0, 1.0, 1.0) == pytest.approx(math.e)


def test_normalized_fock_state_has_unit_norm():
    alpha, w = 2.0, 0.7 + 0.3j
    value = alpha / math.pi * integrate_c(
        lambda z: np.abs(normalized_fock_state(alpha, w, z)) ** 2, gauss_hermite_2d(48, alpha)
    )
    assert value.real == pytest.approx(1.0, abs=1e-8)


def test_rbf_kernel_examples():
    assert rbf_kernel(1.0, 0.0, 1.0) == pytest.approx(0.3678794, abs=1e-7)
    assert rbf_kernel(0.7, 0.4 + 0.2j, 0.4 - 0.2j) == 1.0


@given(x=coords, y=coords, gamma=gammas)
def test_rbf_kernel_restricts_to_real_rbf(x, y, gamma):
    assert rbf_kernel(gamma, x, y) == pytest.approx(math.exp(-((x - y) ** 2) / gamma ** 2), rel=1e-14, abs=1e-300)


@given(z=points, w=points, gamma=gammas)
def test_rbf_kernel_hermitian(z, w, gamma):
    assert rbf_kernel(gamma, z, w) == pytest.approx(np.conj(rbf_kernel(gamma, w, z)), rel=1e-14)


def test_factorization_residual_random(rng):
    for gamma in (0.5, 1.0, 2.0):
        r = 2.0 * np.sqrt(rng.uniform(size=1000))
        z = r * np.exp(2j * math.pi * rng.uniform(size=1000))
        w = r[::-1] * np.exp(2j * math.pi * rng.uniform(size=1000))
        assert factorization_residual(gamma, z, w) < 1e-12


def test_sb_kernel_maps_hermite_ground_state_to_one():
    # int A_SB(z, x) psi_0(x) dx = u_0(z) = 1
    alpha = 2.0
    x = np.linspace(-8, 8, 4001)
    psi_0 = (alpha / math.pi) ** 0.25 * np.exp(-alpha * x ** 2 / 2)
    for z in (0.0, 0.3 - 0.4j, 1.0j):
        value = np.trapezoid(sb_kernel(alpha, z, x) * psi_0, x)
        assert value == pytest.approx(1.0, abs=1e-10)


@given(z=points, x=coords, gamma=gammas)
def test_rbf_sb_kernel_factor(z, x, gamma):
    alpha = 2.0 / gamma ** 2
    expected = cmath.exp(-(z ** 2) / gamma ** 2) * sb_kernel(alpha, z, x)
    assert rbf_sb_kernel(gamma, z, x) == pytest.approx(expected, rel=1e-12, abs=1e-300)


def test_unnormalized_kernels_drop_prefactor():
    alpha = 2.0
    ratio = sb_kernel(alpha, 0.2, 0.1) / sb_kernel(alpha, 0.2, 0.1, Convention.UNNORMALIZED)
    assert ratio == pytest.approx((alpha / math.pi) ** 0.25)


def test_phi_norm_examples():
    assert phi_norm(1.0, 1j, Convention.UNNORMALIZED) == pytest.approx(8.2730, abs=1e-3)
    assert phi_norm(1.0, 1j) == pytest.approx(math.e ** 2)
    assert phi_norm(1.3, 0.8) == 1.0


def test_mercer_partial_examples():
    assert mercer_partial(1.0, 0.0, 0.0, 1) == 1.0
    assert mercer_partial(1.0, 0.0, 0.7j, 1) == pytest.approx(rbf_kernel(1.0, 0.0, 0.7j))


@given(z=near, w=near, gamma=st.sampled_from([1.0, 2.0]))
def test_mercer_partial_converges(z, w, gamma):
    exact = rbf_kernel(gamma, z, w)
    assert abs(mercer_partial(gamma, z, w, 40) - exact) <= 1e-8 * max(1.0, abs(exact))


def test_mercer_error_decreases_with_terms():
    z, w = 0.9 + 0.4j, -0.5 + 0.8j
    exact = rbf_kernel(1.0, z, w)
    errors = [abs(mercer_partial(1.0, z, w, n) - exact) for n in (5, 10, 20, 30)]
    assert errors == sorted(errors, reverse=True)


@pytest.mark.parametrize("gamma", [0.5, 1.0, 2.0])
def test_mercer_partial_matches_exactly_rounded_sum(gamma):
    alpha = 2.0 / gamma ** 2
    z, w = (1.2 + 0.5j) * min(1.0, gamma), (0.9 - 0.7j) * min(1.0, gamma)
    product = alpha * z * w.conjugate()
    terms = [product ** k / math.factorial(k) for k in range(60)]
    reference = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    reference *= cmath.exp(-(z ** 2 + w.conjugate() ** 2) / gamma ** 2)
    assert abs(mercer_partial(gamma, z, w, 60) - reference) <= 1e-13 * abs(reference)


def test_mercer_partial_rejects_zero_terms():
    with pytest.raises(ParameterDomainError):
        mercer_partial(1.0, 0.1, 0.2, 0)


def test_gram_two_points():
    report = gram(1.0, [0.0, 1.0])
    np.testing.assert_allclose(report.matrix, [[1.0, math.exp(-1)], [math.exp(-1), 1.0]])
    assert report.min_eigenvalue == pytest.approx(1 - math.exp(-1))
    assert report.rank == 2


@pytest.mark.parametrize("gamma", [0.5, 1.0, 2.0])
def test_gram_is_positive_semidefinite(gamma, rng):
    report = gram(gamma, rng.uniform(-2, 2, size=20))
    assert report.min_eigenvalue >= -1e-10


def test_gram_duplicate_points_are_rank_deficient():
    report = gram(1.0, [0.3, 0.3, -0.5])
    assert report.rank == 2
    assert report.min_eigenvalue == pytest.approx(0.0, abs=1e-12)


def test_gram_mercer_truncation_close_to_exact():
    pts = [0.2 + 0.1j, -0.4j, 0.7]
    np.testing.assert_allclose(gram(1.0, pts, 40).matrix, gram(1.0, pts).matrix, atol=1e-12)


def test_gram_rejects_empty():
    with pytest.raises(ParameterDomainError):
        gram(1.0, [])


def test_kernel_params_binding():
    params = KernelParams.from_gamma(2.0)
    assert params.alpha == 0.5
    assert KernelParams.from_alpha(2.0).gamma == pytest.approx(1.0)
    with pytest.raises(ParameterDomainError):
        KernelParams(gamma=1.0, alpha=1.0)
