"""
alpha-weighted normalized Hermite functions

    psi_n(x) = (alpha/pi)^(1/4) (2^n n!)^(-1/2) H_n(sqrt(alpha) x) exp(-alpha x^2 / 2)

and the L^2(R) side of the transforms: expansion of pointwise signals, the position
operator matrix and the Fourier transform

    F_alpha(phi)(lam) = sqrt(alpha / 2pi) int exp(-i alpha lam x) phi(x) dx,

whose eigenfunctions are psi_n with eigenvalues (-i)^n.

Values always come from the three-term recurrence on the normalized functions,
never from raw Hermite polynomials, so large n neither overflows nor loses digits.
"""

# Standard library:
from __future__ import annotations
from dataclasses import dataclass, field
from typing import Callable
import logging
import math

# Third party:
import numpy as np
from numpy.typing import ArrayLike

# Local:
from ..errors import ContextError, ParameterDomainError
from .common import (
    ComplexArray,
    RealArray,
    as_complex_vector,
    require_nonnegative_int,
    require_positive,
    require_positive_int,
    tail_mass,
)
from .numerics import Quad1D, gauss_hermite, integrate_r


logger = logging.getLogger(__name__)

DEFAULT_TRUNCATION = 32

# exact powers of -i, indexed by n % 4
_MINUS_I_POWERS = np.array([1.0, -1.0j, -1.0, 1.0j], dtype=np.complex128)

Sampler = Callable[[RealArray], ArrayLike]


@dataclass(frozen=True)
class L2Sig:
    """An element of L^2(R) held as coefficients against psi_0 .. psi_{N-1}."""
    alpha: float
    coeffs: ComplexArray
    sampler: Sampler | None = field(default=None, compare=False)
    warnings: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", require_positive("alpha", self.alpha))
        object.__setattr__(self, "coeffs", as_complex_vector(self.coeffs))

    @property
    def size(self) -> int:
        return int(self.coeffs.size)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    @property
    def tail_mass(self) -> float:
        return tail_mass(self.coeffs)

    def evaluate(self, x: ArrayLike) -> ComplexArray:
        """Pointwise value of sum_n c_n psi_n(x)."""
        x_arr = np.asarray(x, dtype=np.float64)
        table = hermite_functions(self.size, self.alpha, x_arr)
        return np.tensordot(self.coeffs, table, axes=(0, 0))

    @classmethod
    def basis(cls, n: int, alpha: float, size: int = DEFAULT_TRUNCATION) -> L2Sig:
        """psi_n as a signal with `size` coefficients."""
        coeffs = np.zeros(max(size, n + 1), dtype=np.complex128)
        coeffs[n] = 1.0
        return cls(alpha=alpha, coeffs=coeffs)


def l2_inner(left: L2Sig, right: L2Sig) -> complex:
    """<left, right> = int conj(left) right dx, computed on coefficients."""
    if not math.isclose(left.alpha, right.alpha, rel_tol=1e-15):
        raise ContextError(f"alpha mismatch: {left.alpha} vs {right.alpha}")
    size = max(left.size, right.size)
    a = np.zeros(size, dtype=np.complex128)
    b = np.zeros(size, dtype=np.complex128)
    a[: left.size] = left.coeffs
    b[: right.size] = right.coeffs
    return complex(np.vdot(a, b))


def hermite_functions(count: int, alpha: float, x: ArrayLike, weighted: bool = True) -> RealArray:
    """
    psi_0 .. psi_{count-1} at every point of x, shape (count, *x.shape).

    With weighted=False the factor exp(-alpha x^2 / 2) is left out, which gives the
    orthonormal polynomials for the weight exp(-alpha x^2). Quadrature code uses
    that form so the Gaussian factor is handled by the rule weights.

    Recursion:
        psi_m = sqrt(2/m) t psi_{m-1} - sqrt((m-1)/m) psi_{m-2},  t = sqrt(alpha) x
    """
    count = require_positive_int("count", count)
    alpha = require_positive("alpha", alpha)
    x_arr = np.asarray(x, dtype=np.float64)
    t = math.sqrt(alpha) * x_arr

    table = np.empty((count,) + x_arr.shape, dtype=np.float64)
    psi_0 = np.full(x_arr.shape, (alpha / math.pi) ** 0.25)
    if weighted:
        psi_0 = psi_0 * np.exp(-0.5 * t * t)
    table[0] = psi_0
    if count == 1:
        return table

    table[1] = math.sqrt(2.0) * t * table[0]
    for m in range(2, count):
        table[m] = math.sqrt(2.0 / m) * t * table[m - 1] - math.sqrt((m - 1) / m) * table[m - 2]
    return table


def hermite_fn(n: int, alpha: float, x: ArrayLike) -> float | RealArray:
    """psi_n^alpha(x)."""
    n = require_nonnegative_int("n", n)
    values = hermite_functions(n + 1, alpha, x)[n]
    if values.ndim == 0:
        return float(values)
    return values


def hermite_expand(f: Sampler, alpha: float, n: int = DEFAULT_TRUNCATION, rule: Quad1D | None = None) -> L2Sig:
    """
    Coefficients c_k = int psi_k(x) f(x) dx for k < n.

    The rule must carry the weight exp(-alpha x^2): both f and psi_k lose their
    exp(-alpha x^2 / 2) factor, which the weights put back.

    Raises:
        ParameterDomainError: rule scale differs from alpha
        EvaluationError: f is non-finite at a node
    """
    alpha = require_positive("alpha", alpha)
    n = require_positive_int("n", n)
    rule = rule or gauss_hermite(64, alpha)
    if not math.isclose(rule.scale, alpha, rel_tol=1e-12):
        raise ParameterDomainError("rule.scale", rule.scale, f"must equal alpha={alpha}")

    def integrand(x: RealArray) -> ComplexArray:
        samples = np.asarray(f(x), dtype=np.complex128) * np.exp(0.5 * alpha * x * x)
        return samples[:, None] * hermite_functions(n, alpha, x, weighted=False).T

    coeffs = integrate_r(integrand, rule)
    sig = L2Sig(alpha=alpha, coeffs=coeffs, sampler=f)
    logger.debug("expanded signal on %d functions, tail mass %.2e", n, sig.tail_mass)
    return sig


def hermite_fit(x: ArrayLike, values: ArrayLike, alpha: float, n: int = DEFAULT_TRUNCATION) -> L2Sig:
    """
    Least-squares coefficients on psi_0 .. psi_{n-1} from samples on a grid.

    Raises:
        ParameterDomainError: fewer samples than coefficients, or x and values differ in length
    """
    x_arr = np.asarray(x, dtype=np.float64).reshape(-1)
    v_arr = np.asarray(values, dtype=np.complex128).reshape(-1)
    n = require_positive_int("n", n)
    if x_arr.size != v_arr.size:
        raise ParameterDomainError("values", v_arr.size, f"must have one value per abscissa ({x_arr.size})")
    if x_arr.size < n:
        raise ParameterDomainError("samples", x_arr.size, f"need at least n={n} samples")

    design = hermite_functions(n, alpha, x_arr).T
    coeffs, _, rank, _ = np.linalg.lstsq(design, v_arr, rcond=None)
    if rank < n:
        logger.warning("sample grid resolves only %d of %d Hermite functions", rank, n)
    return L2Sig(alpha=alpha, coeffs=coeffs)


def position_matrix(n: int, alpha: float) -> RealArray:
    """
    Matrix of X: phi -> x phi on psi_0 .. psi_{n-1}.

    x psi_k = sqrt((k+1)/(2 alpha)) psi_{k+1} + sqrt(k/(2 alpha)) psi_{k-1}; the last
    column misses its psi_n component and is untrusted.
    """
    n = require_positive_int("n", n)
    alpha = require_positive("alpha", alpha)
    off = np.sqrt(np.arange(1, n) / (2.0 * alpha))
    return np.diag(off, 1) + np.diag(off, -1)


def fourier_l2(sig: L2Sig) -> L2Sig:
    """F_alpha on coefficients: c_n -> (-i)^n c_n."""
    phases = _MINUS_I_POWERS[np.arange(sig.size) % 4]
    return L2Sig(alpha=sig.alpha, coeffs=phases * sig.coeffs, warnings=sig.warnings)


def fourier_quadrature(sig: L2Sig, lam: ArrayLike, rule: Quad1D | None = None) -> ComplexArray:
    """
    F_alpha(sig)(lam) from the defining integral, by quadrature.

    The rule carries exp(-alpha x^2 / 2), the Gaussian factor of the signal itself.
    """
    alpha = sig.alpha
    rule = rule or gauss_hermite(96, alpha / 2.0)
    if not math.isclose(rule.scale, alpha / 2.0, rel_tol=1e-12):
        raise ParameterDomainError("rule.scale", rule.scale, f"must equal alpha/2={alpha / 2.0}")
    lam_arr = np.atleast_1d(np.asarray(lam, dtype=np.float64))

    def integrand(x: RealArray) -> ComplexArray:
        polys = np.tensordot(sig.coeffs, hermite_functions(sig.size, alpha, x, weighted=False), axes=(0, 0))
        return polys[:, None] * np.exp(-1j * alpha * x[:, None] * lam_arr[None, :])

    values = math.sqrt(alpha / (2.0 * math.pi)) * integrate_r(integrand, rule)
    return values.reshape(np.shape(lam)) if np.ndim(lam) else values[0]


def translate(sig: L2Sig, a: float, rule: Quad1D | None = None) -> L2Sig:
    """tau_a: phi(x) -> phi(x - a), re-expanded on the same number of functions."""
    if not math.isfinite(a):
        raise ParameterDomainError("a", a, "must be finite")

    def shifted(x: RealArray) -> ComplexArray:
        return sig.evaluate(x - a)

    return hermite_expand(shifted, sig.alpha, sig.size, rule)
