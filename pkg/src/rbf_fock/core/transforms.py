"""
Transforms between L^2(R) and the holomorphic spaces.

    B        Segal-Bargmann, L^2(R) -> F_alpha, psi_n -> u_n
    Bg       RBF Segal-Bargmann, L^2(R) -> H_gamma, psi_n -> e_n, Bg = M^{-1} B
    Bg^-1    its inverse and adjoint
    S        Fourier transform carried to H_gamma, S f(z) = exp(-2 z^2 / gamma^2) f(-i z)

Each transform has a coefficient route (a diagonal map on orthonormal coefficients)
and at least one quadrature or pointwise route used to cross-check it.
"""

# Standard library:
from __future__ import annotations
from dataclasses import dataclass
from functools import cached_property
from typing import Literal
import logging
import math

# Third party:
import numpy as np
from numpy.typing import ArrayLike

# Local:
from ..errors import ContextError, InternalConsistencyError, ParameterDomainError
from .common import (
    Basis,
    ComplexArray,
    Convention,
    RealArray,
    alpha_of,
    kernel_prefactor,
    require_positive,
    require_positive_int,
)
from .hermite import DEFAULT_TRUNCATION, L2Sig, fourier_l2, hermite_expand, hermite_functions
from .kernels import KernelParams, rbf_sb_kernel, sb_kernel
from .numerics import (
    DEFAULT_QUAD_1D,
    DEFAULT_QUAD_2D,
    Quad1D,
    Quad2D,
    gauss_hermite,
    gauss_hermite_2d,
    integrate_c,
    integrate_r,
)
from .spaces import HoloFun, evaluate, project, project_fock, to_fock, to_rbf


logger = logging.getLogger(__name__)

_MINUS_I_POWERS = np.array([1.0, -1.0j, -1.0, 1.0j], dtype=np.complex128)

BargmannRoute = Literal["coefficient", "quadrature"]
RbfBargmannRoute = Literal["coefficient", "quadrature-I", "diagram-II"]
InverseRoute = Literal["coefficient", "quadrature"]
FockFourierRoute = Literal["coefficient", "pointwise"]
FourierRoute = Literal["coefficient", "pointwise", "factorized"]


@dataclass(frozen=True)
class TransformContext:
    """Width, kernel convention, truncation and quadrature orders shared by the transforms."""
    gamma: float
    convention: Convention = Convention.BARGMANN
    truncation: int = DEFAULT_TRUNCATION
    quad_1d: int = DEFAULT_QUAD_1D
    quad_2d: int = DEFAULT_QUAD_2D

    def __post_init__(self) -> None:
        object.__setattr__(self, "gamma", require_positive("gamma", self.gamma))
        object.__setattr__(self, "convention", Convention(self.convention))
        require_positive_int("truncation", self.truncation)
        require_positive_int("quad_1d", self.quad_1d)
        require_positive_int("quad_2d", self.quad_2d)

    @cached_property
    def kernel_params(self) -> KernelParams:
        """The width bound to its Fock weight, with this context's convention."""
        return KernelParams.from_gamma(self.gamma, self.convention)

    @property
    def alpha(self) -> float:
        return self.kernel_params.alpha

    @cached_property
    def rule_1d(self) -> Quad1D:
        return gauss_hermite(self.quad_1d, self.alpha)

    @cached_property
    def rule_2d(self) -> Quad2D:
        return gauss_hermite_2d(self.quad_2d, self.alpha)

    @property
    def constant_offset(self) -> float:
        """Factor separating the transform under this convention from the unitary one."""
        params = self.kernel_params
        return kernel_prefactor(params.alpha, params.convention) / kernel_prefactor(params.alpha, Convention.BARGMANN)


def _check_signal(sig: L2Sig, ctx: TransformContext) -> None:

    if not math.isclose(sig.alpha, ctx.alpha, rel_tol=1e-12):
        raise ContextError(f"signal alpha {sig.alpha} does not match 2/gamma^2 = {ctx.alpha}")


def _check_function(f: HoloFun, ctx: TransformContext) -> None:

    if not math.isclose(f.gamma, ctx.gamma, rel_tol=1e-15):
        raise ContextError(f"function gamma {f.gamma} does not match context gamma {ctx.gamma}")


def _offset_warning(ctx: TransformContext) -> tuple[str, ...]:

    if ctx.convention is Convention.BARGMANN:
        return ()
    message = f"unnormalized kernel: result carries the constant (alpha/pi)^(-1/4) = {ctx.constant_offset:.10g}"
    logger.warning(message)
    return (message,)


def _signal_polynomials(sig: L2Sig, x: RealArray) -> ComplexArray:
    """sum_n c_n psi_n(x) exp(alpha x^2 / 2), the signal with its Gaussian factor removed."""
    return np.tensordot(sig.coeffs, hermite_functions(sig.size, sig.alpha, x, weighted=False), axes=(0, 0))


######################
# ~ Segal-Bargmann ~ #
######################


def bargmann_pointwise(sig: L2Sig, z: ArrayLike, ctx: TransformContext) -> complex | ComplexArray:
    """
    B[sig](z) = int A_SB(z, x) sig(x) dx by Gauss-Hermite quadrature in x.

    Uses the kernel of the context's convention.
    """
    _check_signal(sig, ctx)
    z_arr = np.asarray(z, dtype=np.complex128)
    rule = ctx.rule_1d
    # A_SB(z, x) sig(x) exp(alpha x^2) keeps only exp(-alpha x^2 / 2) from each factor
    params = ctx.kernel_params
    kernel = sb_kernel(params.alpha, z_arr[..., None], rule.nodes, params.convention)
    values = np.asarray(kernel) * np.exp(0.5 * ctx.alpha * rule.nodes ** 2)
    result = values @ (rule.weights * _signal_polynomials(sig, rule.nodes))
    return complex(result) if np.ndim(result) == 0 else result


def bargmann(sig: L2Sig, ctx: TransformContext, route: BargmannRoute = "coefficient") -> HoloFun:
    """
    B[sig] in fock-onb.

    The coefficient route is the identity psi_n -> u_n (times the convention's constant
    offset). The quadrature route evaluates the kernel integral pointwise and projects
    onto u_0 .. u_{N-1}. An unnormalized convention attaches an offset warning.
    """
    _check_signal(sig, ctx)
    warnings = _offset_warning(ctx)

    if route == "coefficient":
        return HoloFun(ctx.gamma, Basis.FOCK, ctx.constant_offset * sig.coeffs, sig.warnings + warnings)
    if route != "quadrature":
        raise ParameterDomainError("route", route, "must be 'coefficient' or 'quadrature'")

    projected = project_fock(
        lambda z: bargmann_pointwise(sig, z, ctx), ctx.alpha, ctx.truncation, ctx.rule_2d, gamma=ctx.gamma
    )
    return HoloFun(ctx.gamma, Basis.FOCK, projected.coeffs, sig.warnings + projected.warnings + warnings)


def rbf_bargmann(sig: L2Sig, ctx: TransformContext, route: RbfBargmannRoute = "coefficient") -> HoloFun:
    """
    The RBF Segal-Bargmann transform in rbf-onb, by one of three routes:

        coefficient    psi_n -> e_n on coefficients
        quadrature-I   int A_RBF(z, x) sig(x) dx pointwise, projected onto e_0 .. e_{N-1}
        diagram-II     M^{-1} applied to the normalized Segal-Bargmann transform

    Under the bargmann convention all three agree. Under the unnormalized convention
    the first two carry (alpha/pi)^(-1/4) while diagram-II stays unitary.
    """
    _check_signal(sig, ctx)
    match route:
        case "coefficient":
            return to_rbf(bargmann(sig, ctx, "coefficient"))
        case "quadrature-I":
            return _rbf_bargmann_kernel_route(sig, ctx)
        case "diagram-II":
            unitary = TransformContext(ctx.gamma, Convention.BARGMANN, ctx.truncation, ctx.quad_1d, ctx.quad_2d)
            return to_rbf(bargmann(sig, unitary, "quadrature"))
    raise ParameterDomainError("route", route, "must be 'coefficient', 'quadrature-I' or 'diagram-II'")


def _rbf_bargmann_kernel_route(sig: L2Sig, ctx: TransformContext) -> HoloFun:

    rule = ctx.rule_1d
    weighted = rule.weights * _signal_polynomials(sig, rule.nodes)
    params = ctx.kernel_params

    def transformed(z: ComplexArray) -> ComplexArray:
        kernel = np.asarray(rbf_sb_kernel(params.gamma, z[..., None], rule.nodes, params.convention))
        return (kernel * np.exp(0.5 * params.alpha * rule.nodes ** 2)) @ weighted

    projected = project(transformed, ctx.gamma, ctx.truncation, ctx.rule_2d)
    return HoloFun(ctx.gamma, Basis.RBF, projected.coeffs, sig.warnings + projected.warnings + _offset_warning(ctx))


def compare_routes(sig: L2Sig, ctx: TransformContext, tolerance: float = 1e-7) -> float:
    """
    Largest l2 distance between the three RBF Segal-Bargmann routes.

    Raises:
        InternalConsistencyError: the distance exceeds `tolerance`
    """
    outputs = [rbf_bargmann(sig, ctx, route).coeffs for route in ("coefficient", "quadrature-I", "diagram-II")]
    width = max(v.size for v in outputs)
    outputs = [np.pad(v, (0, width - v.size)) for v in outputs]
    residual = max(
        float(np.linalg.norm(outputs[i] - outputs[j])) for i in range(3) for j in range(i + 1, 3)
    )
    logger.debug("RBF Segal-Bargmann route residual %.3e", residual)
    if residual > tolerance:
        raise InternalConsistencyError("RBF Segal-Bargmann transform", residual, tolerance)
    return residual


def rbf_bargmann_inverse(f: HoloFun, ctx: TransformContext, route: InverseRoute = "coefficient") -> L2Sig:
    """
    Inverse (and adjoint) of the unitary RBF Segal-Bargmann transform.

    The coefficient route sends e_n -> psi_n. The quadrature route samples

        Bg^-1 f(x) = (alpha/pi) int conj(A_SB(z, x)) M f(z) exp(-alpha |z|^2) dA(z)

    with the normalized kernel, then expands the samples in Hermite functions.
    """
    _check_function(f, ctx)
    fock = to_fock(f)

    if route == "coefficient":
        return L2Sig(alpha=ctx.alpha, coeffs=fock.coeffs, warnings=f.warnings)
    if route != "quadrature":
        raise ParameterDomainError("route", route, "must be 'coefficient' or 'quadrature'")

    alpha, rule = ctx.alpha, ctx.rule_2d

    def sampler(x: RealArray) -> ComplexArray:
        x_arr = np.asarray(x, dtype=np.float64)

        def integrand(z: ComplexArray) -> ComplexArray:
            kernel = np.asarray(sb_kernel(alpha, z[..., None], x_arr, Convention.BARGMANN))
            return np.conj(kernel) * np.asarray(evaluate(fock, z))[..., None]

        return alpha / math.pi * integrate_c(integrand, rule)

    sig = hermite_expand(sampler, alpha, ctx.truncation, ctx.rule_1d)
    return L2Sig(alpha=alpha, coeffs=sig.coeffs, sampler=sampler, warnings=f.warnings)


###################
# ~ Feature map ~ #
###################


def feature_inner(gamma: float, z: complex, w: complex, convention: Convention = Convention.BARGMANN, rule: Quad1D | None = None) -> complex:
    """
    <Phi(z), Phi(w)> in L^2(R) with Phi(z) = A_RBF(z, .), by quadrature.

    Equals K_gamma(w, z) under the bargmann convention and gamma sqrt(pi/2) K_gamma(w, z)
    without the prefactor.
    """
    alpha = alpha_of(gamma)
    rule = rule or gauss_hermite(DEFAULT_QUAD_1D, alpha)
    if not math.isclose(rule.scale, alpha, rel_tol=1e-12):
        raise ParameterDomainError("rule.scale", rule.scale, f"must equal alpha={alpha}")

    def integrand(x: RealArray) -> ComplexArray:
        phi_z = np.asarray(rbf_sb_kernel(gamma, z, x, convention))
        phi_w = np.asarray(rbf_sb_kernel(gamma, w, x, convention))
        return np.conj(phi_z) * phi_w * np.exp(alpha * x * x)

    return complex(integrate_r(integrand, rule))


###############
# ~ Fourier ~ #
###############


def fourier_fock(g: HoloFun, route: FockFourierRoute = "coefficient", rule: Quad2D | None = None) -> HoloFun:
    """
    C g(z) = g(-i z), the Fourier transform seen on the Fock space: B F B^-1.

    On fock-onb coefficients this is c_n -> (-i)^n c_n. The pointwise route composes
    with z -> -i z and projects onto u_0 .. u_{N-1}.
    """
    fock = to_fock(g)
    if route == "coefficient":
        phases = _MINUS_I_POWERS[np.arange(fock.size) % 4]
        return HoloFun(fock.gamma, Basis.FOCK, phases * fock.coeffs, fock.warnings)
    if route != "pointwise":
        raise ParameterDomainError("route", route, "must be 'coefficient' or 'pointwise'")

    projected = project_fock(lambda z: evaluate(fock, -1j * z), alpha_of(fock.gamma), fock.size, rule, gamma=fock.gamma)
    return HoloFun(fock.gamma, Basis.FOCK, projected.coeffs, fock.warnings + projected.warnings)


def fourier_rbf(f: HoloFun, route: FourierRoute = "coefficient", rule: Quad2D | None = None) -> HoloFun:
    """
    S f(z) = exp(-2 z^2 / gamma^2) f(-i z), the Fourier transform seen on H_gamma.

    On rbf-onb coefficients this is c_n -> (-i)^n c_n. The pointwise route applies the
    composition formula and projects back. The factorized route goes through the
    Fock space, S = M^-1 C M with C the pointwise fourier_fock.
    """
    rbf = to_rbf(f)
    if route == "coefficient":
        phases = _MINUS_I_POWERS[np.arange(rbf.size) % 4]
        return HoloFun(rbf.gamma, Basis.RBF, phases * rbf.coeffs, rbf.warnings)
    if route == "factorized":
        return to_rbf(fourier_fock(to_fock(rbf), "pointwise", rule))
    if route != "pointwise":
        raise ParameterDomainError("route", route, "must be 'coefficient', 'pointwise' or 'factorized'")

    gamma = rbf.gamma

    def composed(z: ComplexArray) -> ComplexArray:
        return np.exp(-2.0 * z ** 2 / gamma ** 2) * evaluate(rbf, -1j * z)

    projected = project(composed, gamma, rbf.size, rule)
    return HoloFun(gamma, Basis.RBF, projected.coeffs, rbf.warnings + projected.warnings)


def fourier_diagram_residual(sig: L2Sig, ctx: TransformContext) -> float:
    """
    l2 distance between S Bg sig (pointwise composition route) and Bg F_alpha sig,
    the two sides of S = Bg F_alpha Bg^-1 applied to Bg sig.
    """
    _check_signal(sig, ctx)
    size = max(sig.size, ctx.truncation)
    padded = L2Sig(alpha=sig.alpha, coeffs=np.pad(sig.coeffs, (0, size - sig.size)))
    unitary = TransformContext(ctx.gamma, Convention.BARGMANN, size, ctx.quad_1d, ctx.quad_2d)

    lhs = fourier_rbf(rbf_bargmann(padded, unitary), "pointwise", unitary.rule_2d)
    rhs = rbf_bargmann(fourier_l2(padded), unitary)
    return float(np.linalg.norm(lhs.coeffs - rhs.coeffs))
