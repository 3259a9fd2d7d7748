"""
Quadrature for Gaussian-weighted integrals on the real line and the complex plane,
plus log-scaled basis constants.

Every integral in the package is written as

    int f(t) exp(-s t^2) dt            (integrate_r)
    int f(z) exp(-s |z|^2) dA(z)       (integrate_c)

with the Gaussian factor carried by the rule weights, so integrands stay
polynomial-like. RBF-side integrals are moved to the Fock side before they reach
this module: the RBF weight exp((z - conj z)^2 / gamma^2) only decays along the
imaginary axis and is never discretized directly.
"""

# Standard library:
from __future__ import annotations
from typing import Callable, NamedTuple
import functools
import logging
import math

# Third party:
import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import gammaln

# Local:
from ..errors import EvaluationError, ParameterDomainError
from .common import RealArray, require_positive, require_positive_int


logger = logging.getLogger(__name__)

DEFAULT_QUAD_1D = 64
DEFAULT_QUAD_2D = 48


class Quad1D(NamedTuple):
    """n-point rule for the weight exp(-scale * t^2) on the real line."""
    scale: float
    nodes: RealArray
    weights: RealArray

    @property
    def order(self) -> int:
        return int(self.nodes.size)


class Quad2D(NamedTuple):
    """Tensor rule over z = x + iy for the weight exp(-s x^2) exp(-s y^2)."""
    rule_x: Quad1D
    rule_y: Quad1D

    @property
    def scale(self) -> float:
        return self.rule_x.scale

    @property
    def points(self) -> NDArray[np.complex128]:
        """Complex nodes as an (nx, ny) grid."""
        return self.rule_x.nodes[:, None] + 1j * self.rule_y.nodes[None, :]

    @property
    def weights(self) -> RealArray:
        return self.rule_x.weights[:, None] * self.rule_y.weights[None, :]


@functools.cache
def gauss_hermite(n: int, s: float = 1.0) -> Quad1D:
    """
    Gauss-Hermite rule for the weight exp(-s t^2).

    The standard rule (weight exp(-t^2)) comes from numpy's hermgauss: eigenvalues of
    the symmetric Jacobi matrix, one Newton step on the normalized recurrence, weights
    from the normalized polynomials and an explicit symmetrization. It is rescaled
    by t -> t / sqrt(s), w -> w / sqrt(s).

    Args:
        n: number of nodes, exact for polynomials of degree <= 2n - 1
        s: weight scale

    Returns:
        Quad1D with read-only arrays; results are cached and shared
    """
    n = require_positive_int("n", n)
    s = require_positive("s", s)

    nodes, weights = np.polynomial.hermite.hermgauss(n)
    root_s = math.sqrt(s)
    nodes = nodes / root_s
    weights = weights / root_s
    nodes.flags.writeable = False
    weights.flags.writeable = False
    logger.debug("built %d-point Gauss-Hermite rule, scale %g", n, s)
    return Quad1D(scale=s, nodes=nodes, weights=weights)


def gauss_hermite_2d(n: int, s: float = 1.0) -> Quad2D:
    """n x n tensor rule for the radial weight exp(-s |z|^2)."""
    rule = gauss_hermite(n, s)
    return Quad2D(rule_x=rule, rule_y=rule)


def _check_finite(values: NDArray, nodes: NDArray) -> None:

    finite = np.isfinite(values)
    if finite.all():
        return
    bad = np.argwhere(~finite)[0]
    node_index = tuple(bad[: nodes.ndim])
    raise EvaluationError(node=nodes[node_index].item(), value=values[tuple(bad)].item())


def integrate_r(f: Callable[[RealArray], ArrayLike], rule: Quad1D) -> complex | NDArray:
    """
    Sum of weights[i] * f(nodes[i]), approximating int f(t) exp(-s t^2) dt.

    `f` is called once on the whole node vector. It may return shape (n,) or
    (n, ...) to integrate several integrands at once; the node axis is summed.

    Raises:
        EvaluationError: f is non-finite at some node
    """
    values = np.asarray(f(rule.nodes), dtype=np.complex128)
    _check_finite(values, rule.nodes)
    result = np.tensordot(rule.weights, values, axes=(0, 0))
    if result.ndim == 0:
        return complex(result)
    return result


def integrate_c(f: Callable[[NDArray[np.complex128]], ArrayLike], rule: Quad2D) -> complex | NDArray:
    """
    Sum of wx[i] wy[j] f(x_i + i y_j), approximating int f(z) exp(-s |z|^2) dA(z).

    `f` receives the (nx, ny) grid of complex nodes and may append trailing axes.

    Raises:
        EvaluationError: f is non-finite at some node
    """
    points = rule.points
    values = np.asarray(f(points), dtype=np.complex128)
    _check_finite(values, points)
    result = np.tensordot(rule.weights, values, axes=([0, 1], [0, 1]))
    if result.ndim == 0:
        return complex(result)
    return result


def log_basis_coeff(n: ArrayLike, gamma: float) -> float | RealArray:
    """
    log sqrt(2^n / (gamma^(2n) n!)), the log of the e_n / u_n normalizing constant.

    Evaluated through log-gamma so that n in the hundreds stays finite; callers
    combine it with other logs before exponentiating.
    """
    gamma = require_positive("gamma", gamma)
    n_arr = np.asarray(n, dtype=np.float64)
    if np.any(n_arr < 0):
        raise ParameterDomainError("n", n, "must be non-negative")
    value = 0.5 * (n_arr * math.log(2.0) - 2.0 * n_arr * math.log(gamma) - gammaln(n_arr + 1.0))
    if value.ndim == 0:
        return float(value)
    return value
