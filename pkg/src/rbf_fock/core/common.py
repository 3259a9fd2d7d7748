# Standard library:
from __future__ import annotations
from enum import Enum
import math

# Third party:
import numpy as np
from numpy.typing import ArrayLike, NDArray

# Local:
from ..errors import ParameterDomainError


ComplexArray = NDArray[np.complex128]
RealArray = NDArray[np.float64]


class Convention(str, Enum):
    """Normalization of the Segal-Bargmann type kernels.

    BARGMANN carries the prefactor (alpha/pi)^(1/4), which makes the transforms
    unitary. UNNORMALIZED drops it; its value is "paper", and "unnormalized" is
    accepted as an alias.
    """
    BARGMANN = "bargmann"
    UNNORMALIZED = "paper"

    @classmethod
    def _missing_(cls, value: object) -> Convention | None:
        if isinstance(value, str) and value.lower() == "unnormalized":
            return cls.UNNORMALIZED
        return None


class Basis(str, Enum):
    """Coefficient basis of a HoloFun."""
    TAYLOR = "taylor"        # z^n
    FOCK = "fock-onb"        # u_n(z) = sqrt(alpha^n / n!) z^n
    RBF = "rbf-onb"          # e_n(z) = u_n(z) exp(-z^2 / gamma^2)


################
# ~ Generics ~ #
################


def require_positive(name: str, value: float) -> float:

    if not (math.isfinite(value) and value > 0):
        raise ParameterDomainError(name, value, "must be a finite positive real")
    return float(value)


def require_positive_int(name: str, value: int) -> int:

    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
        raise ParameterDomainError(name, value, "must be a positive integer")
    return int(value)


def require_nonnegative_int(name: str, value: int) -> int:

    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 0:
        raise ParameterDomainError(name, value, "must be a non-negative integer")
    return int(value)


def alpha_of(gamma: float) -> float:
    """Fock weight paired with an RBF width: alpha = 2 / gamma^2."""
    return 2.0 / (require_positive("gamma", gamma) ** 2)


def gamma_of(alpha: float) -> float:
    return math.sqrt(2.0 / require_positive("alpha", alpha))


def kernel_prefactor(alpha: float, convention: Convention) -> float:
    """(alpha/pi)^(1/4) under BARGMANN, 1 under UNNORMALIZED."""
    if Convention(convention) is Convention.BARGMANN:
        return (alpha / math.pi) ** 0.25
    return 1.0


def as_complex_vector(values: ArrayLike) -> ComplexArray:
    """Read-only 1-D complex copy of `values`."""
    vec = np.array(values, dtype=np.complex128).reshape(-1)
    vec.flags.writeable = False
    return vec


def tail_mass(coeffs: ComplexArray, width: int = 4) -> float:
    """l2 mass of the last `width` coefficients, the truncation diagnostic."""
    if coeffs.size == 0:
        return 0.0
    return float(np.linalg.norm(coeffs[-width:]))
