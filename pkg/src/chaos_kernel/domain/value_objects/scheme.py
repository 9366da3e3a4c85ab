"""Simulation scheme enumeration."""

from __future__ import annotations

from enum import Enum


class Scheme(str, Enum):
    """Time-stepping schemes for tangent-process simulation."""

    EULER = "euler"
    EXACT = "exact-gaussian-plus-trapezoid"

    def is_exact_gaussian(self) -> bool:
        """Check if the Gaussian coordinates are sampled without discretization bias."""
        return self is Scheme.EXACT
