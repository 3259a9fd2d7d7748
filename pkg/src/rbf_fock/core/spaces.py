"""
Elements of the RBF space H_gamma and the Fock space F_alpha, alpha = 2 / gamma^2.

A HoloFun is a finite coefficient vector in one of three bases:

    taylor      f(z) = sum a_n z^n                     (an element of H_gamma)
    rbf-onb     f(z) = sum c_n e_n(z)                  (an element of H_gamma)
    fock-onb    g(z) = sum c_n u_n(z)                  (an element of F_alpha)

where u_n(z) = sqrt(alpha^n / n!) z^n and e_n(z) = u_n(z) exp(-z^2 / gamma^2). The
isomorphism M: H_gamma -> F_alpha, f -> exp(z^2 / gamma^2) f, sends e_n to u_n, so
rbf-onb and fock-onb vectors of corresponding elements are identical; a fock-onb
HoloFun stands for the Fock image of the H_gamma element it represents.

Quadrature inner products never discretize the RBF weight exp((z - conj z)^2 / gamma^2)
by itself. They combine it with exp(alpha |z|^2) into exp(alpha (x^2 - y^2)) against a
Gauss-Hermite rule of scale alpha, which equals the Fock-side integrand exactly.
"""

# Standard library:
from __future__ import annotations
from dataclasses import dataclass
from typing import Callable, Literal, NamedTuple
import logging
import math

# Third party:
import numpy as np
from numpy.typing import ArrayLike
from scipy.special import gammaln

# Local:
from ..errors import ContextError, ParameterDomainError
from .common import (
    Basis,
    ComplexArray,
    alpha_of,
    as_complex_vector,
    require_positive,
    require_positive_int,
    tail_mass,
)
from .numerics import DEFAULT_QUAD_2D, Quad2D, gauss_hermite_2d, integrate_c, log_basis_coeff


logger = logging.getLogger(__name__)

DEFAULT_SIZE = 32

# relative tail above which a projection is flagged as truncated
PROJECTION_TAIL_LIMIT = 1e-4

# Cauchy-product residue above which a basis conversion is flagged
CONVERSION_RESIDUE_LIMIT = 1e-10

EntireFn = Callable[[ComplexArray], ArrayLike]
InnerRoute = Literal["coefficient", "quadrature"]


@dataclass(frozen=True)
class HoloFun:
    """An entire function held as coefficients c_0 .. c_{N-1} in a declared basis."""
    gamma: float
    basis: Basis
    coeffs: ComplexArray
    warnings: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "gamma", require_positive("gamma", self.gamma))
        object.__setattr__(self, "basis", Basis(self.basis))
        object.__setattr__(self, "coeffs", as_complex_vector(self.coeffs))
        if not np.all(np.isfinite(self.coeffs)):
            raise ParameterDomainError("coeffs", self.coeffs, "must be finite")

    @property
    def alpha(self) -> float:
        return alpha_of(self.gamma)

    @property
    def size(self) -> int:
        return int(self.coeffs.size)

    @property
    def norm(self) -> float:
        """H_gamma norm through the orthonormal coefficients."""
        return float(np.linalg.norm(to_rbf(self).coeffs))

    def with_warning(self, message: str) -> HoloFun:
        logger.warning(message)
        return HoloFun(self.gamma, self.basis, self.coeffs, self.warnings + (message,))

    @classmethod
    def basis_function(cls, n: int, gamma: float, size: int = DEFAULT_SIZE, basis: Basis = Basis.RBF) -> HoloFun:
        """e_n (rbf-onb) or u_n (fock-onb) as a unit coefficient vector."""
        if Basis(basis) is Basis.TAYLOR:
            raise ParameterDomainError("basis", basis, "must be an orthonormal basis")
        coeffs = np.zeros(max(size, n + 1), dtype=np.complex128)
        coeffs[n] = 1.0
        return cls(gamma=gamma, basis=basis, coeffs=coeffs)


class SequentialNorm(NamedTuple):
    """Truncated sequential norm with its tail diagnostic and membership verdict."""
    norm: float
    tail: float
    floor: float
    member: bool


class BoundCheck(NamedTuple):
    """|f(z)| against the reproducing-kernel bound exp(2 y^2 / gamma^2) ||f||."""
    lhs: float
    rhs: float

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs * (1.0 + 1e-10)


#############################
# ~ Bases and conversions ~ #
#############################


def _check_same_gamma(f: HoloFun, g: HoloFun) -> None:

    if not math.isclose(f.gamma, g.gamma, rel_tol=1e-15):
        raise ContextError(f"gamma mismatch: {f.gamma} vs {g.gamma}")


def _onb_scale(size: int, gamma: float) -> np.ndarray:
    """sqrt(alpha^n / n!) for n < size, the u_n (and e_n) monomial constants."""
    return np.exp(log_basis_coeff(np.arange(size), gamma))


def _exp_square_series(s: float, size: int) -> np.ndarray:
    """Taylor coefficients of exp(s z^2) up to degree size - 1."""
    series = np.zeros(size, dtype=np.float64)
    j = np.arange((size + 1) // 2)
    series[0::2] = np.sign(s) ** j * np.exp(j * math.log(abs(s)) - gammaln(j + 1.0))
    return series


def _cauchy_exp_square(coeffs: ComplexArray, s: float) -> tuple[ComplexArray, float]:
    """
    Taylor coefficients of exp(s z^2) * sum coeffs[n] z^n, truncated to len(coeffs).

    Also returns the l2 mass of the dropped part of the product relative to the kept
    part, the truncation residue of the conversion.
    """
    size = coeffs.size
    full = np.convolve(coeffs, _exp_square_series(s, size))
    kept = full[:size]
    residue = float(np.linalg.norm(full[size:]) / max(1.0, np.linalg.norm(kept)))
    return kept, residue


def fock_basis_table(count: int, alpha: float, z: ArrayLike) -> ComplexArray:
    """u_0 .. u_{count-1} at every point of z, shape (count, *z.shape)."""
    count = require_positive_int("count", count)
    alpha = require_positive("alpha", alpha)
    z_arr = np.asarray(z, dtype=np.complex128)
    table = np.empty((count,) + z_arr.shape, dtype=np.complex128)
    table[0] = 1.0
    for k in range(1, count):
        table[k] = table[k - 1] * z_arr * math.sqrt(alpha / k)
    return table


def to_taylor(f: HoloFun) -> HoloFun:
    """Taylor coefficients of the H_gamma element f represents."""
    if f.basis is Basis.TAYLOR:
        return f
    monomial = f.coeffs * _onb_scale(f.size, f.gamma)
    coeffs, residue = _cauchy_exp_square(monomial, -1.0 / f.gamma ** 2)
    out = HoloFun(f.gamma, Basis.TAYLOR, coeffs, f.warnings)
    if residue > CONVERSION_RESIDUE_LIMIT:
        out = out.with_warning(f"taylor conversion dropped relative residue {residue:.2e}")
    return out


def to_fock(f: HoloFun) -> HoloFun:
    """M f = exp(z^2 / gamma^2) f in fock-onb; the identity on rbf-onb vectors."""
    if f.basis is Basis.FOCK:
        return f
    if f.basis is Basis.RBF:
        return HoloFun(f.gamma, Basis.FOCK, f.coeffs, f.warnings)

    monomial, residue = _cauchy_exp_square(f.coeffs, 1.0 / f.gamma ** 2)
    out = HoloFun(f.gamma, Basis.FOCK, monomial / _onb_scale(f.size, f.gamma), f.warnings)
    if residue > CONVERSION_RESIDUE_LIMIT:
        out = out.with_warning(f"fock conversion dropped relative residue {residue:.2e}")
    return out


def to_rbf(g: HoloFun) -> HoloFun:
    """Inverse (and adjoint) of to_fock, landing in rbf-onb."""
    if g.basis is Basis.RBF:
        return g
    fock = to_fock(g)
    return HoloFun(fock.gamma, Basis.RBF, fock.coeffs, fock.warnings)


def convert(f: HoloFun, basis: Basis) -> HoloFun:

    match Basis(basis):
        case Basis.TAYLOR:
            return to_taylor(f)
        case Basis.FOCK:
            return to_fock(f)
        case Basis.RBF:
            return to_rbf(f)


def evaluate(f: HoloFun, z: ArrayLike) -> complex | ComplexArray:
    """
    Pointwise value of f. For fock-onb input this is the Fock function g itself.

    Polynomial parts go through Horner's scheme; rbf-onb values multiply by
    exp(-z^2 / gamma^2) once at the end.
    """
    z_arr = np.asarray(z, dtype=np.complex128)
    if f.basis is Basis.TAYLOR:
        values = np.polynomial.polynomial.polyval(z_arr, f.coeffs)
    else:
        values = np.polynomial.polynomial.polyval(z_arr, f.coeffs * _onb_scale(f.size, f.gamma))
        if f.basis is Basis.RBF:
            values = values * np.exp(-(z_arr ** 2) / f.gamma ** 2)
    return complex(values) if np.ndim(values) == 0 else values


#############
# ~ Norms ~ #
#############


def norm_sequential(a: ArrayLike, gamma: float, kmax: int, tolerance: float = 1e-10) -> SequentialNorm:
    """
    Norm of f = sum a_n z^n from its Taylor coefficients alone:

        ||f||^2 = sum_k (k! gamma^(2k) / 2^k) |b_k|^2,
        b_k = sum_{j <= k/2} a_{k-2j} / (gamma^(2j) j!)

    summed through k = kmax. `a` is taken as exact: missing coefficients are zero,
    so a truncated Taylor series needs at least kmax + 1 terms. Weights and the
    inner coefficients are formed in log space. f is judged a member of H_gamma at
    this truncation when the last five terms carry less than `tolerance` above their
    rounding floor.

    The floor matters for inputs like the Taylor series of e_n: the b_k then vanish
    through cancellation, and the weights amplify what rounding leaves behind.
    """
    kmax = require_positive_int("kmax", kmax)
    gamma = require_positive("gamma", gamma)
    coeffs = np.zeros(kmax + 1, dtype=np.complex128)
    given = np.asarray(a, dtype=np.complex128).reshape(-1)[: kmax + 1]
    coeffs[: given.size] = given

    log_gamma = math.log(gamma)
    b = np.zeros(kmax + 1, dtype=np.complex128)
    spread = np.zeros(kmax + 1, dtype=np.float64)
    for k in range(kmax + 1):
        j = np.arange(k // 2 + 1)
        summands = coeffs[k - 2 * j] * np.exp(-2.0 * j * log_gamma - gammaln(j + 1.0))
        b[k] = np.sum(summands)
        spread[k] = np.sum(np.abs(summands))

    k = np.arange(kmax + 1)
    weight = np.exp(-log_basis_coeff(k, gamma))
    terms = np.abs(b * weight) ** 2
    rounding = ((k + 8) * np.finfo(np.float64).eps * spread * weight) ** 2
    tail = float(math.sqrt(np.sum(terms[-5:])))
    floor = float(math.sqrt(np.sum(rounding[-5:])))
    norm = float(math.sqrt(np.sum(terms)))
    member = tail < tolerance + floor
    if not member:
        logger.info("sequential norm tail %.2e at kmax=%d: not in H_gamma at this truncation", tail, kmax)
    return SequentialNorm(norm=norm, tail=tail, floor=floor, member=member)


def _rbf_weight_factor(z: ComplexArray, gamma: float) -> ComplexArray:
    """exp((z - conj z)^2 / gamma^2) exp(alpha |z|^2) = exp(alpha (x^2 - y^2))."""
    alpha = alpha_of(gamma)
    return np.exp(alpha * (z.real ** 2 - z.imag ** 2))


def inner(f: HoloFun, g: HoloFun, route: InnerRoute = "coefficient", rule: Quad2D | None = None) -> complex:
    """
    <f, g> in H_gamma, conjugate-linear in f.

    The coefficient route takes the l2 product of orthonormal coefficients. The
    quadrature route integrates conj(f) g exp((z - conj z)^2 / gamma^2) over the plane
    with the normalization 2 / (pi gamma^2); it is exact for coefficient vectors
    supported well inside the rule's polynomial degree.

    Raises:
        ContextError: f and g have different gamma
    """
    _check_same_gamma(f, g)
    if route == "coefficient":
        left, right = to_rbf(f).coeffs, to_rbf(g).coeffs
        size = max(left.size, right.size)
        return complex(np.vdot(np.pad(left, (0, size - left.size)), np.pad(right, (0, size - right.size))))

    if route != "quadrature":
        raise ParameterDomainError("route", route, "must be 'coefficient' or 'quadrature'")
    alpha = f.alpha
    rule = rule or gauss_hermite_2d(DEFAULT_QUAD_2D, alpha)
    _check_rule(rule, alpha)
    f_rbf, g_rbf = to_rbf(f), to_rbf(g)

    def integrand(z: ComplexArray) -> ComplexArray:
        return np.conj(evaluate(f_rbf, z)) * evaluate(g_rbf, z) * _rbf_weight_factor(z, f.gamma)

    return complex(alpha / math.pi * integrate_c(integrand, rule))


def fock_norm(g: HoloFun, rule: Quad2D | None = None) -> float:
    """Fock norm of g (fock-onb) by quadrature of |g|^2 exp(-alpha |z|^2)."""
    fock = to_fock(g)
    alpha = fock.alpha
    rule = rule or gauss_hermite_2d(DEFAULT_QUAD_2D, alpha)
    _check_rule(rule, alpha)
    value = alpha / math.pi * integrate_c(lambda z: np.abs(evaluate(fock, z)) ** 2, rule)
    return math.sqrt(max(value.real, 0.0))


def _check_rule(rule: Quad2D, alpha: float) -> None:

    if not math.isclose(rule.scale, alpha, rel_tol=1e-12):
        raise ParameterDomainError("rule.scale", rule.scale, f"must equal alpha={alpha}")


##################
# ~ Projection ~ #
##################


def project_fock(fn: EntireFn, alpha: float, n: int, rule: Quad2D | None = None, gamma: float | None = None) -> HoloFun:
    """
    Coefficients <u_k, fn>_F for k < n of a pointwise Fock function.

    A relative tail mass above PROJECTION_TAIL_LIMIT is attached as a warning.
    """
    alpha = require_positive("alpha", alpha)
    n = require_positive_int("n", n)
    rule = rule or gauss_hermite_2d(DEFAULT_QUAD_2D, alpha)
    _check_rule(rule, alpha)

    def integrand(z: ComplexArray) -> ComplexArray:
        values = np.asarray(fn(z), dtype=np.complex128)
        return np.conj(np.moveaxis(fock_basis_table(n, alpha, z), 0, -1)) * values[..., None]

    coeffs = alpha / math.pi * integrate_c(integrand, rule)
    out = HoloFun(gamma if gamma is not None else math.sqrt(2.0 / alpha), Basis.FOCK, coeffs)
    norm = np.linalg.norm(coeffs)
    relative_tail = tail_mass(out.coeffs) / norm if norm > 0 else 0.0
    if relative_tail > PROJECTION_TAIL_LIMIT:
        out = out.with_warning(f"projection onto {n} functions leaves relative tail {relative_tail:.2e}")
    return out


def project(fn: EntireFn, gamma: float, n: int, rule: Quad2D | None = None) -> HoloFun:
    """Coefficients <e_k, fn> for k < n of a pointwise H_gamma function, in rbf-onb."""
    gamma = require_positive("gamma", gamma)

    def lifted(z: ComplexArray) -> ComplexArray:
        return np.exp(z ** 2 / gamma ** 2) * np.asarray(fn(z), dtype=np.complex128)

    return to_rbf(project_fock(lifted, alpha_of(gamma), n, rule, gamma=gamma))


#####################################
# ~ Reproducing kernel identities ~ #
#####################################


def reproduce(f: HoloFun, w: complex, rule: Quad2D | None = None) -> complex:
    """
    f(w) recovered from the reproducing integral

        f(w) = (2 / (pi gamma^2)) int f(z) conj(K_gamma(z, w)) exp((z - conj z)^2 / gamma^2) dA(z),

    evaluated on the Fock side, where the integrand is M f(z) exp(alpha conj(z) w)
    against exp(-alpha |z|^2), scaled by exp(-w^2 / gamma^2).
    """
    fock = to_fock(f)
    alpha, w = fock.alpha, complex(w)
    rule = rule or gauss_hermite_2d(DEFAULT_QUAD_2D, alpha)
    _check_rule(rule, alpha)

    def integrand(z: ComplexArray) -> ComplexArray:
        return evaluate(fock, z) * np.exp(alpha * np.conj(z) * w)

    fock_value = alpha / math.pi * integrate_c(integrand, rule)
    return complex(np.exp(-(w ** 2) / f.gamma ** 2) * fock_value)


def coherent_coeffs(gamma: float, w: complex, n: int) -> HoloFun:
    """K_gamma(., w) = sum_k e_k(conj w) e_k in rbf-onb, truncated to n terms."""
    n = require_positive_int("n", n)
    gamma = require_positive("gamma", gamma)
    w_bar = complex(w).conjugate()
    coeffs = fock_basis_table(n, alpha_of(gamma), w_bar) * np.exp(-(w_bar ** 2) / gamma ** 2)
    return HoloFun(gamma, Basis.RBF, coeffs)


def bound_check(f: HoloFun, z: complex) -> BoundCheck:
    z = complex(z)
    lhs = abs(evaluate(f, z))
    rhs = math.exp(2.0 * z.imag ** 2 / f.gamma ** 2) * f.norm
    return BoundCheck(lhs=float(lhs), rhs=float(rhs))
