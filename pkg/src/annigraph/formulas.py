"""Closed-form values and bounds for dim_M(AG(R)) from the orders alone."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DomainError
from .ring_model import RingSpec


class Case(str, enum.Enum):
    LOCAL = "Local"
    TWO_MAXIMAL = "TwoMaximal"
    GENERAL = "General"


@dataclass(frozen=True)
class DimBounds:
    lower: int
    upper: int
    exact: int | None
    case: Case
    epsilon: int
    beta: int

    def contains(self, value: int) -> bool:
        return self.lower <= value <= self.upper


def epsilon_general(beta: int) -> int:
    """ceil(log2(beta)) for beta >= 1, and 0 for beta = 0, in integer arithmetic."""
    if beta < 0:
        raise DomainError(f"field count must be >= 0, got {beta}")
    if beta <= 1:
        return 0
    return (beta - 1).bit_length()


def dim_bounds(spec: RingSpec) -> DimBounds:
    beta = spec.field_count()
    if spec.n == 1:
        value = (spec.orders[0] - 1) // 2
        return DimBounds(value, value, value, Case.LOCAL, 0, beta)
    if spec.n == 2:
        eps = 1 if beta == 2 else 0
        value = sum(spec.orders) - 2 + eps
        return DimBounds(value, value, value, Case.TWO_MAXIMAL, eps, beta)
    eps = epsilon_general(beta)
    total = sum(spec.orders)
    lower = total - spec.n + eps
    return DimBounds(
        lower, total, total if lower == total else None, Case.GENERAL, eps, beta
    )
