"""Phase point entity."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from chaos_kernel.domain.exceptions import InvalidParameterError


@dataclass(frozen=True)
class PhasePoint:
    """A point (lam, mu, x, y, z) of the unit tangent bundle of Minkowski space.

    ``lam`` and ``mu`` are the hyperbolic velocity coordinates, ``x``, ``y`` and
    ``z`` the position. The velocity (ch lam ch mu, ch lam sh mu, sh lam) lies on
    the unit hyperboloid for every finite (lam, mu).
    """

    lam: float
    mu: float
    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        """Validate coordinates after initialization."""
        if not all(math.isfinite(v) for v in self.as_tuple()):
            raise InvalidParameterError(f"Phase point must be finite, got {self.as_tuple()}")

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        """Return the coordinates in (lam, mu, x, y, z) order."""
        return (self.lam, self.mu, self.x, self.y, self.z)

    def as_array(self) -> npt.NDArray[np.float64]:
        """Return the coordinates as a float array."""
        return np.array(self.as_tuple(), dtype=np.float64)

    def velocity(self) -> tuple[float, float, float]:
        """Future-directed unit velocity (xi0_dot, xi1_dot, xi2_dot)."""
        ch_lam = math.cosh(self.lam)
        return (ch_lam * math.cosh(self.mu), ch_lam * math.sinh(self.mu), math.sinh(self.lam))

    def mass_shell(self) -> float:
        """Minkowski square of the velocity, identically 1."""
        v0, v1, v2 = self.velocity()
        return v0 * v0 - v1 * v1 - v2 * v2

    @classmethod
    def origin(cls) -> PhasePoint:
        """Rest frame at the origin of space-time."""
        return cls(lam=0.0, mu=0.0, x=0.0, y=0.0, z=0.0)
