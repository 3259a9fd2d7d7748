# Standard library:
from __future__ import annotations
from dataclasses import dataclass
from typing import Literal
import cmath
import logging
import math

# Third party:
import numpy as np
from numpy.typing import ArrayLike
from scipy.special import eval_genlaguerre, gammaln

# Local:
from ..errors import ContextError, ParameterDomainError
from .common import (
    Basis,
    ComplexArray,
    RealArray,
    alpha_of,
    require_positive,
    require_positive_int,
)
from .hermite import position_matrix, translate
from .kernels import normalized_fock_state
from .numerics import Quad1D, Quad2D
from .spaces import HoloFun, evaluate, project, project_fock, to_fock, to_rbf
from .transforms import TransformContext, rbf_bargmann, rbf_bargmann_inverse


logger = logging.getLogger(__name__)

WeylRoute = Literal["explicit", "diagram"]
TranslationRoute = Literal["weyl", "conjugation"]
Direction = Literal["lower", "raise"]


@dataclass(frozen=True)
class WeylParam:
    """Displacement a of a Weyl operator on H_gamma."""
    a: complex
    gamma: float

    def __post_init__(self) -> None:
        a = complex(self.a)
        if not cmath.isfinite(a):
            raise ParameterDomainError("a", self.a, "must be finite")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "gamma", require_positive("gamma", self.gamma))

    @property
    def alpha(self) -> float:
        return alpha_of(self.gamma)

    @property
    def is_real(self) -> bool:
        return self.a.imag == 0.0


def _check_gamma(f: HoloFun, gamma: float) -> None:

    if not math.isclose(f.gamma, gamma, rel_tol=1e-15):
        raise ContextError(f"function gamma {f.gamma} does not match operator gamma {gamma}")


######################
# ~ Weyl operators ~ #
######################


def weyl_fock(alpha: float, a: complex, g: HoloFun, rule: Quad2D | None = None) -> HoloFun:
    """
    W_a g(z) = g(z - a) f_a(z) on F_alpha, with f_a the normalized Fock kernel at a.

    Evaluated pointwise and projected back onto u_0 .. u_{N-1}; a displacement that
    pushes mass past the truncation attaches a warning.
    """
    alpha = require_positive("alpha", alpha)
    fock = to_fock(g)
    if not math.isclose(fock.alpha, alpha, rel_tol=1e-12):
        raise ContextError(f"function alpha {fock.alpha} does not match operator alpha {alpha}")
    a = WeylParam(a, fock.gamma).a

    def displaced(z: ComplexArray) -> ComplexArray:
        return evaluate(fock, z - a) * normalized_fock_state(alpha, a, z)

    projected = project_fock(displaced, alpha, fock.size, rule, gamma=fock.gamma)
    return HoloFun(fock.gamma, Basis.FOCK, projected.coeffs, fock.warnings + projected.warnings)


def displacement_matrix(alpha: float, a: complex, n: int) -> ComplexArray:
    """
    Matrix of W_a on u_0 .. u_{n-1} in closed form.

    W_a is the displacement D(beta) with beta = sqrt(alpha) conj(a), whose entries are,
    for m >= k,

        <u_m, D u_k> = sqrt(k!/m!) beta^(m-k) exp(-|beta|^2 / 2) L_k^(m-k)(|beta|^2)

    and for m < k the same with m, k swapped and beta replaced by -conj(beta).
    """
    alpha = require_positive("alpha", alpha)
    n = require_positive_int("n", n)
    beta = math.sqrt(alpha) * complex(a).conjugate()
    r2 = abs(beta) ** 2

    m, k = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    low, high = np.minimum(m, k), np.maximum(m, k)
    base = np.where(m >= k, beta, -beta.conjugate())
    gap = high - low
    magnitude = np.exp(0.5 * (gammaln(low + 1.0) - gammaln(high + 1.0)) - 0.5 * r2)
    return magnitude * base ** gap * eval_genlaguerre(low, gap, r2)


def weyl_rbf_pointwise(gamma: float, a: complex, f: HoloFun, z: ArrayLike) -> complex | ComplexArray:
    """exp((a^2 - |a|^2) / gamma^2 + 2 z (conj a - a) / gamma^2) f(z - a)."""
    param = WeylParam(a, gamma)
    _check_gamma(f, param.gamma)
    a, g2 = param.a, param.gamma ** 2
    z_arr = np.asarray(z, dtype=np.complex128)
    factor = np.exp((a * a - abs(a) ** 2) / g2 + 2.0 * z_arr * (a.conjugate() - a) / g2)
    values = factor * evaluate(f, z_arr - a)
    return complex(values) if np.ndim(values) == 0 else values


def weyl_rbf(gamma: float, a: complex, f: HoloFun, route: WeylRoute = "explicit", rule: Quad2D | None = None) -> HoloFun:
    """
    The RBF-Weyl operator M^{-1} W_a M on H_gamma, in rbf-onb.

    explicit   the closed-form factor times f(z - a), projected back
    diagram    to_fock, weyl_fock, to_rbf
    For real a the factor is 1 and the operator is the translation f(z - a).
    """
    param = WeylParam(a, gamma)
    _check_gamma(f, param.gamma)
    rbf = to_rbf(f)

    if route == "diagram":
        return to_rbf(weyl_fock(param.alpha, param.a, to_fock(rbf), rule))
    if route != "explicit":
        raise ParameterDomainError("route", route, "must be 'explicit' or 'diagram'")

    projected = project(lambda z: weyl_rbf_pointwise(gamma, param.a, rbf, z), param.gamma, rbf.size, rule)
    return HoloFun(param.gamma, Basis.RBF, projected.coeffs, rbf.warnings + projected.warnings)


def weyl_semigroup_phase(gamma: float, a: complex, b: complex) -> complex:
    """Phase in W_a W_b = exp(-(2i / gamma^2) Im(a conj b)) W_{a+b}."""
    gamma = require_positive("gamma", gamma)
    a, b = complex(a), complex(b)
    return cmath.exp(-2j * (a * b.conjugate()).imag / gamma ** 2)


def translation_rbf(gamma: float, a: float, f: HoloFun, route: TranslationRoute = "weyl", ctx: TransformContext | None = None, rule: Quad1D | None = None) -> HoloFun:
    """
    L_a = Bg tau_a Bg^-1, the translation of L^2(R) carried to H_gamma.

    The kernel pairs x with sqrt(2) z, so a shift of the signal by a moves the
    variable z by a / sqrt(2). The weyl route returns the RBF-Weyl operator at
    the real displacement a / sqrt(2). The conjugation route
    inverts the transform, shifts the Hermite expansion and transforms back.

    Raises:
        ParameterDomainError: a is not real
    """
    param = WeylParam(a, gamma)
    if not param.is_real:
        raise ParameterDomainError("a", a, "must be real; use weyl_rbf for complex displacements")
    a = param.a.real
    _check_gamma(f, gamma)

    if route == "weyl":
        return weyl_rbf(gamma, a / math.sqrt(2.0), f, "explicit")
    if route != "conjugation":
        raise ParameterDomainError("route", route, "must be 'weyl' or 'conjugation'")

    ctx = ctx or TransformContext(gamma, truncation=f.size)
    shifted = translate(rbf_bargmann_inverse(f, ctx), a, rule)
    return rbf_bargmann(shifted, ctx)


#####################################
# ~ Position and ladder operators ~ #
#####################################


def _fock_derivative(n: int, alpha: float) -> RealArray:
    """d/dz on u_0 .. u_{n-1}: u_k' = sqrt(k alpha) u_{k-1}."""
    return np.diag(np.sqrt(np.arange(1, n) * alpha), 1)


def _fock_multiplication(n: int, alpha: float) -> RealArray:
    """M_z on u_0 .. u_{n-1}: z u_k = sqrt((k+1)/alpha) u_{k+1}; u_n is dropped."""
    return np.diag(np.sqrt(np.arange(1, n) / alpha), -1)


def _rbf_derivative(n: int, gamma: float) -> RealArray:
    """d/dz on e_0 .. e_{n-1}, with the chain term of exp(-z^2 / gamma^2)."""
    alpha = alpha_of(gamma)
    return _fock_derivative(n, alpha) - (2.0 / gamma ** 2) * _fock_multiplication(n, alpha)


def position_rbf_matrix(gamma: float, n: int) -> RealArray:
    """
    Matrix of A = (gamma^2 / (2 sqrt 2)) d/dz + sqrt(2) M_z on e_0 .. e_{n-1}.

    A is the position operator carried to H_gamma by the RBF Segal-Bargmann
    transform, so it matches position_matrix(n, 2 / gamma^2) away from the last
    row and column.
    """
    gamma = require_positive("gamma", gamma)
    n = require_positive_int("n", n)
    if n < 2:
        raise ParameterDomainError("n", n, "must be at least 2")
    alpha = alpha_of(gamma)
    return gamma ** 2 / (2.0 * math.sqrt(2.0)) * _rbf_derivative(n, gamma) + math.sqrt(2.0) * _fock_multiplication(n, alpha)


def creation_identity_residual(gamma: float, n: int) -> float:
    """
    Largest entry of D - ((2 sqrt 2 / gamma^2) X - (4 / gamma^2) Z) on e_0 .. e_{n-1},
    excluding the last row and column.

    D is d/dz, Z is M_z and X the position matrix; the relation is the derivative
    side of the position conjugation.
    """
    gamma = require_positive("gamma", gamma)
    n = require_positive_int("n", n)
    alpha = alpha_of(gamma)
    lhs = _rbf_derivative(n, gamma)
    rhs = (2.0 * math.sqrt(2.0) / gamma ** 2) * position_matrix(n, alpha) - (4.0 / gamma ** 2) * _fock_multiplication(n, alpha)
    return float(np.max(np.abs(lhs - rhs)[:-1, :-1]))


def ladder_matrix(n: int, direction: Direction) -> RealArray:
    """Lowering (c_k -> sqrt(k+1) c_{k+1}) or raising matrix on n coefficients."""
    n = require_positive_int("n", n)
    lower = np.diag(np.sqrt(np.arange(1, n, dtype=np.float64)), 1)
    match direction:
        case "lower":
            return lower
        case "raise":
            return lower.T.copy()
    raise ParameterDomainError("direction", direction, "must be 'lower' or 'raise'")


def ladder(gamma: float, direction: Direction, f: HoloFun) -> HoloFun:
    """
    Annihilation or creation on H_gamma, the Fock ladder carried through M.

    Raising a vector whose last coefficient is nonzero loses that component at the
    truncation edge; the result then carries a warning.
    """
    _check_gamma(f, gamma)
    rbf = to_rbf(f)
    out = HoloFun(rbf.gamma, Basis.RBF, ladder_matrix(rbf.size, direction) @ rbf.coeffs, rbf.warnings)
    if direction == "raise" and rbf.coeffs[-1] != 0:
        out = out.with_warning(f"raise drops the component past index {rbf.size - 1}")
    return out
