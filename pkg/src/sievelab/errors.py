"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """Parameters outside the domain of an operation."""


class UnsupportedParametersError(DomainError):
    """Parameters that are valid in principle but deliberately not handled."""


class InternalConsistencyError(ArithmeticError):
    """An exact computation produced something that should be impossible."""


class NotRationalError(ArithmeticError):
    """A cyclotomic value was expected to be an integer but is not."""

    def __init__(self, order: int, coeffs: tuple[int, ...]):
        self.order = order
        self.coeffs = coeffs
        super().__init__(
            f"value in Z[zeta_{order}] is not rational: coordinates {list(coeffs)}"
        )
