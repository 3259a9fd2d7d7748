"""
Verification suites: every identity of the library checked numerically, once per width
in the run settings, with the residual recorded against a tolerance.

Sample radii shrink with gamma below 1 so that alpha |z|^2 stays the same as for
gamma = 1; the series and quadratures are only accurate to the stated tolerances
in that regime.
"""

# Standard library:
from __future__ import annotations
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable
import logging
import math

# Third party:
import numpy as np
import psutil

# Local:
from .config import Settings
from .core import (
    Basis,
    HoloFun,
    L2Sig,
    TransformContext,
    alpha_of,
    bargmann,
    bound_check,
    coherent_coeffs,
    compare_routes,
    creation_identity_residual,
    displacement_matrix,
    evaluate,
    factorization_residual,
    feature_inner,
    fock_kernel,
    fock_norm,
    fourier_diagram_residual,
    fourier_fock,
    fourier_l2,
    fourier_quadrature,
    fourier_rbf,
    gram,
    hermite_fn,
    hermite_functions,
    inner,
    l2_inner,
    ladder,
    ladder_matrix,
    mercer_partial,
    norm_sequential,
    phi_norm,
    position_matrix,
    position_rbf_matrix,
    rbf_bargmann,
    rbf_bargmann_inverse,
    rbf_kernel,
    rbf_sb_kernel,
    reproduce,
    sb_kernel,
    to_fock,
    to_rbf,
    to_taylor,
    translation_rbf,
    weyl_fock,
    weyl_rbf,
    weyl_rbf_pointwise,
    weyl_semigroup_phase,
)
from .core.common import Convention
from .core.spaces import fock_basis_table
from .errors import ConfigError, RbfFockError
from .report import Case, SuiteResult, VerificationReport


logger = logging.getLogger(__name__)

DEFAULT_TOLERANCES: dict[str, float] = {
    "factorization": 1e-12,
    "isometry": 1e-7,
    "reproducing": 1e-7,
    "bound": 1e-10,
    "mercer": 1e-8,
    "sequential-norm": 1e-6,
    "bargmann": 1e-7,
    "feature-map": 1e-8,
    "weyl": 1e-7,
    "fourier": 1e-9,
    "position": 1e-10,
    "gram": 1e-10,
}

# The identity each case checks, keyed by case id up to any "/route" suffix.
IDENTITIES: dict[str, str] = {
    "kernel-factorization": "K_gamma(z,w) = exp(-(z^2 + conj(w)^2)/gamma^2) K_alpha(z,w), alpha = 2/gamma^2",
    "kernel-hermitian-symmetry": "K(z,w) = conj(K(w,z)) for the RBF and Fock kernels",
    "isomorphism-quadrature-norms": "||M f||_Fock = ||f||_gamma, f times exp(z^2/gamma^2) is an isometry",
    "isomorphism-coefficient-round-trip": "M^-1 M f = f on rbf-onb coefficients",
    "isomorphism-adjoint": "<M f, g>_Fock = <f, M^-1 g>_gamma",
    "reproducing-basis-function": "<f, K_gamma(., w)>_gamma = f(w)",
    "pointwise-bound-plane": "|f(z)| <= ||f|| exp(2 Im(z)^2/gamma^2) on the plane",
    "pointwise-bound-real-line": "|f(x)| <= ||f|| for real x",
    "pointwise-bound-coherent-equality": "|f(z)| = ||f|| exp(2 Im(z)^2/gamma^2) for f = K(., z)/||K(., z)||",
    "mercer-series": "K_gamma(z,w) = sum_n e_n(z) conj(e_n(w))",
    "coherent-state-inner-product": "<K(., z), K(., w)>_gamma = K_gamma(w,z)",
    "coherent-state-evaluation": "K(., w) evaluated at z = K_gamma(z,w)",
    "sequential-norm-routes": "||f||^2 = sum_k (k! gamma^(2k)/2^k) |b_k|^2, b_k = sum_j a_(k-2j)/(gamma^(2j) j!), agrees with the coefficient and quadrature norms",
    "sequential-norm-basis": "||e_n||_gamma = 1 from the Taylor coefficients of e_n",
    "sequential-norm-polynomial-not-member": "f = 1 is not in H_gamma: the Taylor-coefficient norm series does not converge",
    "rbf-bargmann-hermite-to-basis": "Bg psi_n = e_n (times the prefactor constant when unnormalized)",
    "bargmann-hermite-to-monomial": "B psi_n = u_n = sqrt(alpha^n/n!) z^n",
    "rbf-bargmann-route-coincidence": "Bg = exp(-z^2/gamma^2) B, coefficient and quadrature routes agree",
    "rbf-bargmann-unitarity": "<Bg s, Bg t>_gamma = <s, t>_L2",
    "rbf-bargmann-inverse-basis": "Bg^-1 e_n = psi_n",
    "rbf-bargmann-inverse-round-trip": "Bg^-1 Bg s = s",
    "rbf-bargmann-adjoint": "<Bg s, f>_gamma = <s, Bg^-1 f>_L2",
    "feature-map-ratio": "<Phi(z), Phi(w)>_L2 = c K_gamma(w,z), c = gamma sqrt(pi/2) unnormalized, 1 bargmann",
    "feature-map-norm": "||Phi(z)||_L2 = sqrt(<Phi(z), Phi(z)>)",
    "rbf-sb-kernel-factor": "A_gamma(z,x) = exp(-z^2/gamma^2) A_alpha(z,x)",
    "sb-kernel-generating-function": "A_alpha(z,x) = sum_n u_n(z) psi_n(x)",
    "weyl-isometry": "||W_a f||_gamma = ||f||_gamma",
    "weyl-inverse": "W_a W_-a f = f",
    "weyl-explicit-vs-diagram": "M^-1 W_a^Fock M f = exp((a^2 - |a|^2)/gamma^2 + 2z(conj a - a)/gamma^2) f(z - a)",
    "weyl-displacement-closed-form": "<u_m, W_a u_n> by Laguerre closed form equals the pointwise Weyl operator",
    "weyl-semigroup": "W_a W_b = exp(-(2i/gamma^2) Im(a conj b)) W_(a+b)",
    "weyl-real-translation": "W_a f(z) = f(z - a) for real a",
    "weyl-semigroup-phase-real": "the semigroup phase is 1 for real a and b",
    "fourier-diagram": "Bg F Bg^-1 = S_gamma, S_gamma f(z) = exp(-2z^2/gamma^2) f(-iz)",
    "fourier-eigenphase": "S_gamma e_n = (-i)^n e_n",
    "fourier-powers": "S_gamma^2 f(z) = f(-z), S_gamma^4 = id",
    "fourier-l2-eigenvalues": "F psi_n = (-i)^n psi_n",
    "fourier-translation-conjugation": "Bg tau_a Bg^-1 = W_(a/sqrt 2) for real a",
    "fourier-factorized": "S_gamma = M^-1 C_phi M, phi(z) = -iz",
    "fourier-fock-diagram": "B F B^-1 = C_phi, C_phi g(z) = g(-iz)",
    "position-conjugation": "Bg^-1 ((gamma^2/(2 sqrt 2)) d/dz + sqrt 2 z) Bg = X",
    "position-derivative-identity": "d/dz = (2 sqrt 2/gamma^2) X - (4/gamma^2) z on H_gamma",
    "ladder-position-identity": "X = (gamma/2)(a + a*)",
    "ladder-commutator": "[a, a*] = 1, a* a e_n = n e_n",
    "gram-psd": "the Gram matrix of K_gamma at real points is positive semidefinite",
    "gram-two-point-spectrum": "min eigenvalue of Gram(0, 1) = 1 - exp(-1/gamma^2)",
    "gram-mercer-truncation": "Gram from the truncated Mercer series equals the closed-form Gram",
}


class CaseLog:
    """
    Collects the cases of one suite. A library error or a numerical failure inside
    a check becomes a failed case instead of aborting the run.
    """

    def __init__(self, suite: str, override: float | None) -> None:
        self.suite = suite
        self.override = override
        self.cases: list[Case] = []

    def check(self, case_id: str, params: dict[str, Any], compute: Callable[[], float], tolerance: float | None = None,
              identity: str | None = None) -> None:

        tol = self.override if self.override is not None else (tolerance if tolerance is not None else DEFAULT_TOLERANCES[self.suite])
        if identity is None:
            identity = IDENTITIES.get(case_id.partition("/")[0], "")
        try:
            residual, error = float(compute()), None
        except (RbfFockError, ArithmeticError, np.linalg.LinAlgError) as e:
            residual, error = float(getattr(e, "residual", math.nan)), str(e) or type(e).__name__
            logger.warning("%s/%s: %s", self.suite, case_id, error)
        case = Case(id=case_id, params=params, residual=residual, tolerance=tol, error=error, identity=identity)
        if not case.passed:
            logger.info("%s/%s failed: residual %.3e > %.3e", self.suite, case_id, residual, tol)
        self.cases.append(case)


########################
# ~ Sampling helpers ~ #
########################


def _radius(gamma: float, base: float) -> float:
    return base * min(1.0, gamma)


def _disc(rng: np.random.Generator, count: int, radius: float) -> np.ndarray:
    """Uniform points in the disc |z| <= radius."""
    r = radius * np.sqrt(rng.uniform(size=count))
    return r * np.exp(2j * math.pi * rng.uniform(size=count))


def _random_coeffs(rng: np.random.Generator, size: int, support: int) -> np.ndarray:
    """Unit-norm complex vector supported on the first `support` entries."""
    coeffs = np.zeros(size, dtype=np.complex128)
    coeffs[:support] = rng.normal(size=support) + 1j * rng.normal(size=support)
    return coeffs / np.linalg.norm(coeffs)


def _random_rbf(rng: np.random.Generator, gamma: float, size: int, support: int) -> HoloFun:
    return HoloFun(gamma, Basis.RBF, _random_coeffs(rng, size, support))


def _random_signal(rng: np.random.Generator, alpha: float, size: int, support: int) -> L2Sig:
    return L2Sig(alpha=alpha, coeffs=_random_coeffs(rng, size, support))


def _relative(lhs: Any, rhs: Any) -> float:
    """max |lhs - rhs| / max(1, |rhs|) over all entries."""
    lhs, rhs = np.asarray(lhs), np.asarray(rhs)
    return float(np.max(np.abs(lhs - rhs) / np.maximum(1.0, np.abs(rhs))))


def _distance(a: np.ndarray, b: np.ndarray) -> float:
    """l2 distance of two coefficient vectors, the shorter one zero-padded."""
    size = max(a.size, b.size)
    return float(np.linalg.norm(np.pad(a, (0, size - a.size)) - np.pad(b, (0, size - b.size))))


def _taylor_prefix(f: HoloFun, count: int) -> np.ndarray:
    """The first `count` Taylor coefficients of f, converted at twice that length."""
    padded = HoloFun(f.gamma, f.basis, np.pad(f.coeffs, (0, max(0, 2 * count - f.size))))
    return to_taylor(padded).coeffs[:count]


def _context(settings: Settings, gamma: float, convention: Convention | None = None) -> TransformContext:
    return TransformContext(
        gamma = gamma,
        convention = convention or settings.convention,
        truncation = settings.truncation,
        quad_1d = settings.quad_1d,
        quad_2d = settings.quad_2d,
    )


##############
# ~ Suites ~ #
##############


def suite_factorization(settings: Settings, rng: np.random.Generator, log: CaseLog) -> None:

    for gamma in settings.gammas:
        z, w = _disc(rng, 1000, 2.0), _disc(rng, 1000, 2.0)
        log.check("kernel-factorization", {"gamma": gamma, "samples": 1000}, lambda: factorization_residual(gamma, z, w))
        alpha = alpha_of(gamma)
        log.check(
            "kernel-hermitian-symmetry",
            {"gamma": gamma},
            lambda: max(
                _relative(rbf_kernel(gamma, z, w), np.conj(rbf_kernel(gamma, w, z))),
                _relative(fock_kernel(alpha, z, w), np.conj(fock_kernel(alpha, w, z))),
            ),
            tolerance=1e-14,
        )


def suite_isometry(settings: Settings, rng: np.random.Generator, log: CaseLog) -> None:

    size = settings.truncation
    support = max(1, size // 2)
    for gamma in settings.gammas:
        functions = [_random_rbf(rng, gamma, size, support) for _ in range(50)]
        partners = [_random_rbf(rng, gamma, size, support) for _ in range(50)]

        def quadrature_norms() -> float:
            return max(
                abs(fock_norm(to_fock(f)) - math.sqrt(inner(f, f, "quadrature").real)) for f in functions
            )

        def round_trip() -> float:
            return max(float(np.max(np.abs(to_rbf(to_fock(f)).coeffs - f.coeffs))) for f in functions)

        def adjoint() -> float:
            return max(
                abs(inner(to_fock(f), g) - inner(f, to_rbf(g))) for f, g in zip(functions, partners)
            )

        log.check("isomorphism-quadrature-norms", {"gamma": gamma, "functions": 50}, quadrature_norms)
        log.check("isomorphism-coefficient-round-trip", {"gamma": gamma}, round_trip, tolerance=1e-15)
        log.check("isomorphism-adjoint", {"gamma": gamma}, adjoint, tolerance=1e-14)


def suite_reproducing(settings: Settings, rng: np.random.Generator, log: CaseLog) -> None:

    for gamma in settings.gammas:
        points = _disc(rng, 20, _radius(gamma, 1.5))
        for n in range(11):
            e_n = HoloFun.basis_function(n, gamma, settings.truncation)
            log.check(
                "reproducing-basis-function",
                {"gamma": gamma, "n": n, "points": 20},
                lambda: max(_relative(reproduce(e_n, w), evaluate(e_n, w)) for w in points),
            )


def suite_bound(settings: Settings, rng: np.random.Generator, log: CaseLog) -> None:

    size = settings.truncation
    for gamma in settings.gammas:
        functions = [_random_rbf(rng, gamma, size, size) for _ in range(100)]
        points = _disc(rng, 100, 2.0)
        reals = rng.uniform(-3.0, 3.0, size=100)

        def excess(zs: np.ndarray) -> float:
            worst = 0.0
            for f in functions:
                for z in zs:
                    check = bound_check(f, z)
                    worst = max(worst, check.lhs / check.rhs - 1.0)
            return worst

        log.check("pointwise-bound-plane", {"gamma": gamma, "samples": 10_000}, lambda: excess(points))
        log.check("pointwise-bound-real-line", {"gamma": gamma, "samples": 10_000}, lambda: excess(reals))

        def coherent_equality() -> float:
            worst = 0.0
            for z in _disc(rng, 10, _radius(gamma, 1.5)):
                state = coherent_coeffs(gamma, z, 40)
                unit = HoloFun(gamma, Basis.RBF, state.coeffs / state.norm)
                check = bound_check(unit, z)
                worst = max(worst, abs(1.0 - check.lhs / check.rhs))
            return worst

        log.check("pointwise-bound-coherent-equality", {"gamma": gamma}, coherent_equality, tolerance=1e-8)


def suite_mercer(settings: Settings, rng: np.random.Generator, log: CaseLog) -> None:

    for gamma in settings.gammas:
        radius = _radius(gamma, 1.5)
        z, w = _disc(rng, 30, radius), _disc(rng, 30, radius)
        log.check(
            "mercer-series",
            {"gamma": gamma, "terms": 40, "radius": radius},
            lambda: max(_relative(mercer_partial(gamma, zi, wi, 40), rbf_kernel(gamma, zi, wi)) for zi, wi in zip(z, w)),
        )
        log.check(
            "coherent-state-inner-product",
            {"gamma": gamma, "terms": 40},
            lambda: max(
                _relative(inner(coherent_coeffs(gamma, wi, 40), coherent_coeffs(gamma, zi, 40)), rbf_kernel(gamma, wi, zi))
                for zi, wi in zip(z, w)
            ),
            tolerance=1e-9,
        )
        log.check(
            "coherent-state-evaluation",
            {"gamma": gamma, "terms": 40},
            lambda: max(_relative(evaluate(coherent_coeffs(gamma, wi, 40), zi), rbf_kernel(gamma, zi, wi)) for zi, wi in zip(z, w)),
            tolerance=1e-9,
        )


def suite_sequential_norm(settings: Settings, rng: np.random.Generator, log: CaseLog) -> None:

    kmax = 40
    for gamma in settings.gammas:
        functions = [_random_rbf(rng, gamma, kmax + 1, 12) for _ in range(30)]

        def route_agreement() -> float:
            worst = 0.0
            for f in functions:
                sequential = norm_sequential(_taylor_prefix(f, kmax + 1), gamma, kmax).norm
                quadrature = math.sqrt(inner(f, f, "quadrature").real)
                worst = max(worst, abs(sequential - f.norm), abs(sequential - quadrature))
            return worst

        def basis_norms() -> float:
            return max(
                abs(norm_sequential(_taylor_prefix(HoloFun.basis_function(n, gamma, kmax + 1), kmax + 1), gamma, kmax).norm - 1.0)
                for n in range(11)
            )

        log.check("sequential-norm-routes", {"gamma": gamma, "functions": 30, "kmax": kmax}, route_agreement)
        log.check("sequential-norm-basis", {"gamma": gamma, "kmax": kmax}, basis_norms, tolerance=1e-10)
        log.check(
            "sequential-norm-polynomial-not-member",
            {"gamma": gamma, "kmax": kmax},
            lambda: float(norm_sequential([1.0], gamma, kmax).member),
            tolerance=0.5,
        )


def suite_bargmann(settings: Settings, rng: np.random.Generator, log: CaseLog) -> None:

    size = settings.truncation
    for gamma in settings.gammas:
        ctx = _context(settings, gamma)
        unitary = _context(settings, gamma, Convention.BARGMANN)
        alpha = ctx.alpha

        for route in ("coefficient", "quadrature-I", "diagram-II"):
            offset = 1.0 if route == "diagram-II" else ctx.constant_offset

            def hermite_to_basis(route: str = route, offset: float = offset) -> float:
                worst = 0.0
                for n in range(min(11, size)):
                    out = rbf_bargmann(L2Sig.basis(n, alpha, size), ctx, route)
                    worst = max(worst, _distance(out.coeffs, offset * HoloFun.basis_function(n, gamma, size).coeffs))
                return worst

            log.check(f"rbf-bargmann-hermite-to-basis/{route}", {"gamma": gamma, "convention": ctx.convention.value}, hermite_to_basis)

        def fock_quadrature() -> float:
            return max(
                _distance(bargmann(L2Sig.basis(n, alpha, size), ctx, "quadrature").coeffs,
                          ctx.constant_offset * HoloFun.basis_function(n, gamma, size, Basis.FOCK).coeffs)
                for n in (0, 2)
            )

        log.check("bargmann-hermite-to-monomial", {"gamma": gamma}, fock_quadrature, tolerance=1e-8)

        signals = [_random_signal(rng, alpha, size, 12) for _ in range(4)]
        partners = [_random_signal(rng, alpha, size, 12) for _ in range(4)]
        log.check(
            "rbf-bargmann-route-coincidence",
            {"gamma": gamma},
            lambda: max(compare_routes(s, unitary, tolerance=math.inf) for s in signals),
        )

        def unitarity(route: str) -> float:
            return max(
                abs(inner(rbf_bargmann(s, unitary, route), rbf_bargmann(t, unitary, route)) - l2_inner(s, t))
                for s, t in zip(signals, partners)
            )

        log.check("rbf-bargmann-unitarity/coefficient", {"gamma": gamma}, lambda: unitarity("coefficient"), tolerance=1e-9)
        log.check("rbf-bargmann-unitarity/quadrature-I", {"gamma": gamma}, lambda: unitarity("quadrature-I"))

        def inverse_basis() -> float:
            return max(
                _distance(rbf_bargmann_inverse(HoloFun.basis_function(n, gamma, size), unitary, "quadrature").coeffs,
                          L2Sig.basis(n, alpha, size).coeffs)
                for n in range(min(9, size))
            )

        def inverse_round_trip() -> float:
            return max(
                _distance(rbf_bargmann_inverse(rbf_bargmann(s, unitary, "quadrature-I"), unitary, "quadrature").coeffs, s.coeffs)
                for s in signals
            )

        def adjoint() -> float:
            worst = 0.0
            for s in signals:
                f = _random_rbf(rng, gamma, size, 12)
                lhs = inner(rbf_bargmann(s, unitary, "quadrature-I"), f)
                rhs = l2_inner(s, rbf_bargmann_inverse(f, unitary, "quadrature"))
                worst = max(worst, abs(lhs - rhs))
            return worst

        log.check("rbf-bargmann-inverse-basis", {"gamma": gamma}, inverse_basis)
        log.check("rbf-bargmann-inverse-round-trip", {"gamma": gamma}, inverse_round_trip, tolerance=1e-8)
        log.check("rbf-bargmann-adjoint", {"gamma": gamma}, adjoint, tolerance=1e-8)


def suite_feature_map(settings: Settings, rng: np.random.Generator, log: CaseLog) -> None:

    for gamma in settings.gammas:
        alpha = alpha_of(gamma)
        radius = _radius(gamma, 1.0)
        z, w = _disc(rng, 100, radius), _disc(rng, 100, radius)
        constant = gamma * math.sqrt(math.pi / 2.0)

        def ratio(convention: Convention, expected: float) -> float:
            return max(
                abs(feature_inner(gamma, zi, wi, convention) / rbf_kernel(gamma, wi, zi) - expected) / expected
                for zi, wi in zip(z, w)
            )

        log.check("feature-map-ratio/unnormalized", {"gamma": gamma, "expected": constant},
                  lambda: ratio(Convention.UNNORMALIZED, constant))
        log.check("feature-map-ratio/bargmann", {"gamma": gamma, "expected": 1.0},
                  lambda: ratio(Convention.BARGMANN, 1.0))
        log.check(
            "feature-map-norm",
            {"gamma": gamma},
            lambda: max(
                _relative(phi_norm(gamma, zi, Convention.UNNORMALIZED),
                          math.sqrt(feature_inner(gamma, zi, zi, Convention.UNNORMALIZED).real))
                for zi in z
            ),
        )

        x = rng.uniform(-2.0, 2.0, size=100)
        log.check(
            "rbf-sb-kernel-factor",
            {"gamma": gamma},
            lambda: _relative(rbf_sb_kernel(gamma, z, x), np.exp(-(z ** 2) / gamma ** 2) * sb_kernel(alpha, z, x)),
            tolerance=1e-13,
        )

        def generating_function() -> float:
            zs, xs = z[:20], x[:20]
            series = np.sum(fock_basis_table(41, alpha, zs) * hermite_functions(41, alpha, xs), axis=0)
            return _relative(series, sb_kernel(alpha, zs, xs))

        log.check("sb-kernel-generating-function", {"gamma": gamma, "terms": 41}, generating_function, tolerance=1e-9)


def suite_weyl(settings: Settings, rng: np.random.Generator, log: CaseLog) -> None:

    size = settings.truncation
    for gamma in settings.gammas:
        alpha = alpha_of(gamma)
        radius = _radius(gamma, 1.0)
        functions = [_random_rbf(rng, gamma, size, 6) for _ in range(4)]
        shifts = _disc(rng, 5, radius)
        z = _disc(rng, 10, 2.0 * radius)

        def isometry() -> float:
            return max(abs(weyl_rbf(gamma, a, f).norm - f.norm) for f in functions for a in shifts)

        def inverse_pointwise() -> float:
            worst = 0.0
            for f in functions:
                for a in shifts:
                    back = weyl_rbf(gamma, -a, f)
                    worst = max(worst, _relative(weyl_rbf_pointwise(gamma, a, back, z), evaluate(f, z)))
            return worst

        def explicit_vs_diagram() -> float:
            worst = 0.0
            for a in _disc(rng, 20, radius):
                f = functions[0]
                diagram = weyl_rbf(gamma, a, f, "diagram")
                worst = max(worst, _relative(evaluate(diagram, z), weyl_rbf_pointwise(gamma, a, f, z)))
            return worst

        def closed_form() -> float:
            return max(
                _distance(displacement_matrix(alpha, a, size) @ f.coeffs, weyl_fock(alpha, a, to_fock(f)).coeffs)
                for f in functions for a in shifts
            )

        def semigroup() -> float:
            worst = 0.0
            a, b = _disc(rng, 2, 0.5 * radius)
            phase = weyl_semigroup_phase(gamma, a, b)
            for n in range(7):
                e_n = HoloFun.basis_function(n, gamma, size)
                lhs = weyl_rbf(gamma, a, weyl_rbf(gamma, b, e_n)).coeffs
                rhs = phase * weyl_rbf(gamma, a + b, e_n).coeffs
                worst = max(worst, _distance(lhs, rhs))
            return worst

        def real_translation() -> float:
            return max(
                _relative(weyl_rbf_pointwise(gamma, a, f, z), evaluate(f, z - a))
                for f in functions for a in rng.uniform(-radius, radius, size=5)
            )

        log.check("weyl-isometry", {"gamma": gamma}, isometry)
        log.check("weyl-inverse", {"gamma": gamma}, inverse_pointwise, tolerance=1e-9)
        log.check("weyl-explicit-vs-diagram", {"gamma": gamma}, explicit_vs_diagram, tolerance=1e-9)
        log.check("weyl-displacement-closed-form", {"gamma": gamma}, closed_form, tolerance=1e-9)
        log.check("weyl-semigroup", {"gamma": gamma}, semigroup)
        log.check("weyl-real-translation", {"gamma": gamma}, real_translation, tolerance=1e-12)
        log.check(
            "weyl-semigroup-phase-real",
            {"gamma": gamma},
            lambda: abs(weyl_semigroup_phase(gamma, 0.7, -1.3) - 1.0),
            tolerance=1e-15,
        )


def suite_fourier(settings: Settings, rng: np.random.Generator, log: CaseLog) -> None:

    size = settings.truncation
    for gamma in settings.gammas:
        alpha = alpha_of(gamma)
        ctx = _context(settings, gamma, Convention.BARGMANN)
        top = min(16, size - 1)

        log.check(
            "fourier-diagram",
            {"gamma": gamma, "max_n": top},
            lambda: max(fourier_diagram_residual(L2Sig.basis(n, alpha, size), ctx) for n in range(top + 1)),
        )

        def eigenphase() -> float:
            worst = 0.0
            for n in range(top + 1):
                e_n = HoloFun.basis_function(n, gamma, size)
                expected = (-1j) ** n * e_n.coeffs
                worst = max(worst, _distance(fourier_rbf(e_n, "pointwise").coeffs, expected))
            return worst

        f = _random_rbf(rng, gamma, size, size)

        def powers() -> float:
            twice = fourier_rbf(fourier_rbf(f))
            four = fourier_rbf(fourier_rbf(twice))
            parity = (-1.0) ** np.arange(size) * f.coeffs
            return max(float(np.max(np.abs(four.coeffs - f.coeffs))), float(np.max(np.abs(twice.coeffs - parity))))

        lam = rng.uniform(-2.0, 2.0, size=9)

        def l2_eigenvalues() -> float:
            worst = 0.0
            for n in range(min(9, size)):
                sig = fourier_l2(L2Sig.basis(n, alpha, size))
                worst = max(worst, _relative(fourier_quadrature(L2Sig.basis(n, alpha, size), lam), sig.evaluate(lam)))
                worst = max(worst, _relative(sig.evaluate(lam), (-1j) ** n * hermite_fn(n, alpha, lam)))
            return worst

        def translation_conjugation() -> float:
            g = _random_rbf(rng, gamma, size, 6)
            return max(
                _distance(translation_rbf(gamma, a, g, "weyl").coeffs, translation_rbf(gamma, a, g, "conjugation", ctx).coeffs)
                for a in rng.uniform(-0.5, 0.5, size=3) * min(1.0, gamma)
            )

        def factorized() -> float:
            g = _random_rbf(rng, gamma, size, 12)
            return _distance(fourier_rbf(g, "factorized", ctx.rule_2d).coeffs, fourier_rbf(g).coeffs)

        def fock_diagram() -> float:
            worst = 0.0
            for s in (_random_signal(rng, alpha, size, 12) for _ in range(3)):
                lhs = fourier_fock(bargmann(s, ctx), "pointwise", ctx.rule_2d)
                worst = max(worst, _distance(lhs.coeffs, bargmann(fourier_l2(s), ctx).coeffs))
            return worst

        log.check("fourier-eigenphase", {"gamma": gamma, "max_n": top}, eigenphase)
        log.check("fourier-powers", {"gamma": gamma}, powers, tolerance=1e-15)
        log.check("fourier-l2-eigenvalues", {"gamma": gamma}, l2_eigenvalues)
        log.check("fourier-translation-conjugation", {"gamma": gamma}, translation_conjugation, tolerance=1e-7)
        log.check("fourier-factorized", {"gamma": gamma}, factorized)
        log.check("fourier-fock-diagram", {"gamma": gamma}, fock_diagram)


def suite_position(settings: Settings, rng: np.random.Generator, log: CaseLog) -> None:

    n = 16
    for gamma in settings.gammas:
        alpha = alpha_of(gamma)

        def conjugation() -> float:
            diff = np.abs(position_rbf_matrix(gamma, n) - position_matrix(n, alpha))
            return float(np.max(diff[:-1, :-1]))

        def ladder_position() -> float:
            combined = 0.5 * gamma * (ladder_matrix(n, "lower") + ladder_matrix(n, "raise"))
            return float(np.max(np.abs(combined - position_matrix(n, alpha))))

        def commutator() -> float:
            worst = 0.0
            for k in range(n - 1):
                e_k = HoloFun.basis_function(k, gamma, n)
                up_down = ladder(gamma, "raise", ladder(gamma, "lower", e_k)).coeffs
                down_up = ladder(gamma, "lower", ladder(gamma, "raise", e_k)).coeffs
                worst = max(worst, float(np.max(np.abs(up_down - down_up + e_k.coeffs))))
                worst = max(worst, float(np.max(np.abs(up_down - k * e_k.coeffs))))
            return worst

        log.check("position-conjugation", {"gamma": gamma, "n": n}, conjugation)
        log.check("position-derivative-identity", {"gamma": gamma, "n": n}, lambda: creation_identity_residual(gamma, n), tolerance=1e-9)
        log.check("ladder-position-identity", {"gamma": gamma, "n": n}, ladder_position, tolerance=1e-12)
        log.check("ladder-commutator", {"gamma": gamma, "n": n}, commutator, tolerance=1e-12)


def suite_gram(settings: Settings, rng: np.random.Generator, log: CaseLog) -> None:

    for gamma in settings.gammas:
        points = rng.uniform(-2.0, 2.0, size=20)
        log.check("gram-psd", {"gamma": gamma, "points": 20}, lambda: max(0.0, -gram(gamma, points).min_eigenvalue))
        log.check(
            "gram-two-point-spectrum",
            {"gamma": gamma},
            lambda: abs(gram(gamma, [0.0, 1.0]).min_eigenvalue - (1.0 - math.exp(-1.0 / gamma ** 2))),
            tolerance=1e-14,
        )
        plane = _disc(rng, 8, _radius(gamma, 1.5))
        log.check(
            "gram-mercer-truncation",
            {"gamma": gamma, "terms": 40},
            lambda: _relative(gram(gamma, plane, 40).matrix, gram(gamma, plane).matrix),
            tolerance=1e-8,
        )


SUITES: dict[str, Callable[[Settings, np.random.Generator, CaseLog], None]] = {
    "factorization": suite_factorization,
    "isometry": suite_isometry,
    "reproducing": suite_reproducing,
    "bound": suite_bound,
    "mercer": suite_mercer,
    "sequential-norm": suite_sequential_norm,
    "bargmann": suite_bargmann,
    "feature-map": suite_feature_map,
    "weyl": suite_weyl,
    "fourier": suite_fourier,
    "position": suite_position,
    "gram": suite_gram,
}


def selected_suites(settings: Settings) -> list[str]:
    """Suite names to run, in registry order.

    Raises:
        ConfigError: an unknown suite name was requested
    """
    if not settings.suites:
        return list(SUITES)
    unknown = sorted(set(settings.suites) - set(SUITES))
    if unknown:
        raise ConfigError(f"unknown suite(s) {', '.join(unknown)}; available: {', '.join(SUITES)}")
    return [name for name in SUITES if name in settings.suites]


def run_suite(name: str, settings: Settings) -> SuiteResult:
    """One suite with its own generator, seeded from the run seed and the suite's position."""
    rng = np.random.default_rng([settings.seed, list(SUITES).index(name)])
    log = CaseLog(name, settings.tolerance)
    logger.info("suite %s started", name)
    SUITES[name](settings, rng, log)
    result = SuiteResult(name=name, cases=tuple(log.cases))
    logger.info("suite %s finished: %d case(s), %s", name, len(result.cases), "pass" if result.passed else "FAIL")
    return result


def run_all(settings: Settings, workers: int | None = None) -> VerificationReport:
    """
    Run the selected suites concurrently and assemble the report in registry order,
    so the output is the same whatever order the suites finish in.
    """
    names = selected_suites(settings)
    workers = workers or min(len(names), psutil.cpu_count(logical=False) or 1)
    logger.debug("running %d suite(s) on %d worker(s)", len(names), workers)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(pool.map(lambda name: run_suite(name, settings), names))
    return VerificationReport(environment=settings.environment(), suites=tuple(results))
