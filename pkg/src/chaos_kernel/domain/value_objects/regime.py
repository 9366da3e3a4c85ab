"""Asymptotic regime report."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Regime(str, Enum):
    """Validity condition met by a point for the small-time equivalent."""

    LARGE_MU = "large_mu"
    LARGE_SPREAD = "large_spread"
    NONE = "none"

    def is_admissible(self) -> bool:
        """Check if the small-time equivalent is meaningful."""
        return self is not Regime.NONE


@dataclass(frozen=True)
class RegimeReport:
    """Which validity condition holds, and the numbers it was decided on.

    When both conditions hold, ``satisfied`` names large_mu.
    """

    satisfied: Regime
    mu: float
    epsilon: float
    mu_threshold: float
    large_mu: bool
    large_spread: bool
