# Standard library:
from __future__ import annotations
from typing import Any


class RbfFockError(Exception):
    """Base class for every error raised by rbf_fock."""


class ParameterDomainError(RbfFockError, ValueError):
    """A parameter is outside the domain an operation accepts."""

    def __init__(self, name: str, value: Any, requirement: str) -> None:
        self.name = name
        self.value = value
        super().__init__(f"{name}={value!r} is invalid: {requirement}")


class EvaluationError(RbfFockError, ArithmeticError):
    """An integrand or sampler returned a non-finite value."""

    def __init__(self, node: complex | float, value: Any) -> None:
        self.node = node
        self.value = value
        super().__init__(f"non-finite value {value!r} at node {node!r}")


class ContextError(RbfFockError, ValueError):
    """Two values live in different spaces (width, weight or basis mismatch)."""


class InternalConsistencyError(RbfFockError):
    """Two independent routes for the same quantity disagree."""

    def __init__(self, what: str, residual: float, tolerance: float) -> None:
        self.what = what
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(
            f"{what}: routes disagree, residual {residual:.3e} > tolerance {tolerance:.3e}"
        )


class CsvFormatError(RbfFockError, ValueError):
    """A CSV input could not be parsed."""

    def __init__(self, line: int, message: str) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}")


class ConfigError(RbfFockError, ValueError):
    """The configuration file or flags are invalid."""
