"""
Closed-form kernels and their identities.

    Fock                F_alpha(z, w) = exp(alpha z conj(w))
    normalized Fock     f_w(z) = exp(alpha (z conj(w) - |w|^2 / 2))
    Gaussian RBF        K_gamma(z, w) = exp(-(z - conj(w))^2 / gamma^2)
    Segal-Bargmann      A_SB(z, x) = c exp(-(alpha/2)(z^2 + x^2) + sqrt(2) alpha z x)
    RBF Segal-Bargmann  A_RBF(z, x) = c exp(-(x - sqrt(2) z)^2 / gamma^2)

with alpha = 2 / gamma^2 and c = (alpha/pi)^(1/4) under the bargmann convention,
c = 1 when unnormalized. All functions broadcast over numpy arrays.
"""

# Standard library:
from __future__ import annotations
from dataclasses import dataclass
from typing import NamedTuple
import logging
import math

# Third party:
import numpy as np
from numpy.typing import ArrayLike

# Local:
from ..errors import ParameterDomainError
from .common import (
    ComplexArray,
    Convention,
    alpha_of,
    gamma_of,
    kernel_prefactor,
    require_positive,
    require_positive_int,
)
from .numerics import log_basis_coeff


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KernelParams:
    """Width gamma with its bound Fock weight alpha = 2 / gamma^2."""
    gamma: float
    alpha: float
    convention: Convention = Convention.BARGMANN

    def __post_init__(self) -> None:
        require_positive("gamma", self.gamma)
        require_positive("alpha", self.alpha)
        if abs(self.alpha * self.gamma ** 2 - 2.0) > 1e-15 * 2.0:
            raise ParameterDomainError("alpha", self.alpha, f"must equal 2/gamma^2 for gamma={self.gamma}")
        object.__setattr__(self, "convention", Convention(self.convention))

    @classmethod
    def from_gamma(cls, gamma: float, convention: Convention = Convention.BARGMANN) -> KernelParams:
        return cls(gamma=float(gamma), alpha=alpha_of(gamma), convention=convention)

    @classmethod
    def from_alpha(cls, alpha: float, convention: Convention = Convention.BARGMANN) -> KernelParams:
        gamma = gamma_of(alpha)
        return cls(gamma=gamma, alpha=2.0 / gamma ** 2, convention=convention)


def _out(value: ComplexArray) -> complex | ComplexArray:
    return complex(value) if np.ndim(value) == 0 else value


def fock_kernel(alpha: float, z: ArrayLike, w: ArrayLike) -> complex | ComplexArray:
    alpha = require_positive("alpha", alpha)
    z, w = np.asarray(z, dtype=np.complex128), np.asarray(w, dtype=np.complex128)
    return _out(np.exp(alpha * z * np.conj(w)))


def normalized_fock_state(alpha: float, w: ArrayLike, z: ArrayLike) -> complex | ComplexArray:
    """Coherent state f_w(z) = F(z, w) / sqrt(F(w, w)), unit Fock norm."""
    alpha = require_positive("alpha", alpha)
    z, w = np.asarray(z, dtype=np.complex128), np.asarray(w, dtype=np.complex128)
    return _out(np.exp(alpha * (z * np.conj(w) - 0.5 * np.abs(w) ** 2)))


def rbf_kernel(gamma: float, z: ArrayLike, w: ArrayLike) -> complex | ComplexArray:
    """Complexified Gaussian RBF kernel; on real arguments the usual exp(-(x-x')^2/gamma^2)."""
    gamma = require_positive("gamma", gamma)
    z, w = np.asarray(z, dtype=np.complex128), np.asarray(w, dtype=np.complex128)
    return _out(np.exp(-((z - np.conj(w)) ** 2) / gamma ** 2))


def factorization_residual(gamma: float, z: ArrayLike, w: ArrayLike) -> float:
    """
    Largest relative residual of the two RBF/Fock factorizations

        K_gamma(z, w) = exp(-(z^2 + conj(w)^2) / gamma^2) F_{2/gamma^2}(z, w)
        F_alpha(z, w) = exp(alpha (z^2 + conj(w)^2) / 2) K_{sqrt(2/alpha)}(z, w)

    over all (z, w) pairs given; each residual is |lhs - rhs| / max(1, |lhs|).
    """
    alpha = alpha_of(gamma)
    z, w = np.asarray(z, dtype=np.complex128), np.asarray(w, dtype=np.complex128)
    squares = z ** 2 + np.conj(w) ** 2

    rbf = np.asarray(rbf_kernel(gamma, z, w))
    fock = np.asarray(fock_kernel(alpha, z, w))
    forward = np.abs(rbf - np.exp(-squares / gamma ** 2) * fock) / np.maximum(1.0, np.abs(rbf))
    reverse = np.abs(fock - np.exp(alpha * squares / 2.0) * rbf_kernel(math.sqrt(2.0 / alpha), z, w))
    reverse = reverse / np.maximum(1.0, np.abs(fock))
    return float(max(np.max(forward), np.max(reverse)))


def sb_kernel(alpha: float, z: ArrayLike, x: ArrayLike, convention: Convention = Convention.BARGMANN) -> complex | ComplexArray:
    alpha = require_positive("alpha", alpha)
    z, x = np.asarray(z, dtype=np.complex128), np.asarray(x, dtype=np.float64)
    exponent = -0.5 * alpha * (z ** 2 + x ** 2) + math.sqrt(2.0) * alpha * z * x
    return _out(kernel_prefactor(alpha, convention) * np.exp(exponent))


def rbf_sb_kernel(gamma: float, z: ArrayLike, x: ArrayLike, convention: Convention = Convention.BARGMANN) -> complex | ComplexArray:
    alpha = alpha_of(gamma)
    z, x = np.asarray(z, dtype=np.complex128), np.asarray(x, dtype=np.float64)
    return _out(kernel_prefactor(alpha, convention) * np.exp(-((x - math.sqrt(2.0) * z) ** 2) / gamma ** 2))


def phi_norm(gamma: float, z: ArrayLike, convention: Convention = Convention.BARGMANN) -> float | np.ndarray:
    """L^2 norm of the feature vector Phi(z) = A_RBF(z, .) in closed form."""
    gamma = require_positive("gamma", gamma)
    z = np.asarray(z, dtype=np.complex128)
    growth = np.exp(-(((z - np.conj(z)) ** 2).real) / (2.0 * gamma ** 2))
    if Convention(convention) is Convention.UNNORMALIZED:
        growth = math.sqrt(gamma * math.sqrt(math.pi / 2.0)) * growth
    return float(growth) if growth.ndim == 0 else growth


def mercer_partial(gamma: float, z: complex, w: complex, n: int) -> complex:
    """
    sum_{k<n} e_k(z) e_k(conj(w)), the truncated Mercer series of K_gamma(z, w).

    Terms are formed from log magnitudes and summed largest first.
    """
    gamma = require_positive("gamma", gamma)
    n = require_positive_int("n", n)
    z, w = complex(z), complex(w)
    product = z * w.conjugate()
    k = np.arange(n)
    gauss = np.exp(-(z ** 2 + w.conjugate() ** 2) / gamma ** 2)

    if product == 0:
        return complex(gauss)

    log_mag = 2.0 * log_basis_coeff(k, gamma) + k * math.log(abs(product))
    terms = np.exp(log_mag + 1j * k * np.angle(product))
    order = np.argsort(-np.abs(terms), kind="stable")
    return complex(gauss * np.sum(terms[order]))


class GramReport(NamedTuple):
    """Kernel matrix over a point set with its spectral diagnostics."""
    matrix: ComplexArray
    min_eigenvalue: float
    rank: int


def gram(gamma: float, points: ArrayLike, n: int | None = None) -> GramReport:
    """
    G[i, j] = K_gamma(points[i], points[j]), or its n-term Mercer truncation.

    Duplicate points are allowed; they show up as rank deficiency.
    """
    pts = np.asarray(points, dtype=np.complex128).reshape(-1)
    if pts.size == 0:
        raise ParameterDomainError("points", points, "must be non-empty")
    if not np.all(np.isfinite(pts)):
        raise ParameterDomainError("points", points, "must be finite")

    if n is None:
        matrix = np.asarray(rbf_kernel(gamma, pts[:, None], pts[None, :]))
    else:
        matrix = np.array([[mercer_partial(gamma, zi, zj, n) for zj in pts] for zi in pts])

    hermitian = 0.5 * (matrix + matrix.conj().T)
    eigenvalues = np.linalg.eigvalsh(hermitian)
    rank = int(np.linalg.matrix_rank(hermitian, hermitian=True))
    if rank < pts.size:
        logger.info("gram matrix of %d points has rank %d", pts.size, rank)
    return GramReport(matrix=matrix, min_eigenvalue=float(eigenvalues[0]), rank=rank)
