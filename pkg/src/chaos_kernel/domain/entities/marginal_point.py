"""Marginal point entity."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from chaos_kernel.domain.exceptions import InvalidParameterError


@dataclass(frozen=True)
class MarginalPoint:
    """Gaussian coordinates (w, beta, zeta, z) of the tangent process."""

    w: float
    beta: float
    zeta: float
    z: float

    def __post_init__(self) -> None:
        """Validate coordinates after initialization."""
        if not all(math.isfinite(v) for v in self.as_tuple()):
            raise InvalidParameterError(f"Marginal point must be finite, got {self.as_tuple()}")

    def as_tuple(self) -> tuple[float, float, float, float]:
        """Return the coordinates in (w, beta, zeta, z) order."""
        return (self.w, self.beta, self.zeta, self.z)

    @classmethod
    def origin(cls) -> MarginalPoint:
        """The all-zero point."""
        return cls(w=0.0, beta=0.0, zeta=0.0, z=0.0)

    @classmethod
    def from_sequence(cls, values: Sequence[float]) -> MarginalPoint:
        """Create a point from four numbers in (w, beta, zeta, z) order."""
        if len(values) != 4:
            raise InvalidParameterError(f"Marginal point needs 4 coordinates, got {len(values)}")
        w, beta, zeta, z = (float(v) for v in values)
        return cls(w=w, beta=beta, zeta=zeta, z=z)
