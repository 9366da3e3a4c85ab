"""Chaos point entity."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from chaos_kernel.domain.entities.marginal_point import MarginalPoint
from chaos_kernel.domain.exceptions import InvalidParameterError


@dataclass(frozen=True)
class ChaosPoint:
    """A point (w, beta, x, zeta, z) of the tangent-process state space.

    ``w`` and ``beta`` are the endpoint velocities, ``x`` the second-chaos
    coordinate (strictly positive, the support of A_s), ``zeta`` the time
    integral of ``beta`` and ``z`` the time integral of ``w``.
    """

    w: float
    beta: float
    x: float
    zeta: float
    z: float

    def __post_init__(self) -> None:
        """Validate coordinates after initialization."""
        if not all(math.isfinite(v) for v in self.as_tuple()):
            raise InvalidParameterError(f"Chaos point must be finite, got {self.as_tuple()}")
        if self.x <= 0:
            raise InvalidParameterError(f"Chaos coordinate x must be positive, got {self.x}")

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        """Return the coordinates in (w, beta, x, zeta, z) order."""
        return (self.w, self.beta, self.x, self.zeta, self.z)

    @property
    def marginal(self) -> MarginalPoint:
        """Gaussian coordinates with the chaos coordinate dropped."""
        return MarginalPoint(w=self.w, beta=self.beta, zeta=self.zeta, z=self.z)

    def with_x(self, x: float) -> ChaosPoint:
        """Same Gaussian coordinates with another chaos coordinate."""
        return ChaosPoint(w=self.w, beta=self.beta, x=x, zeta=self.zeta, z=self.z)

    def to_unit_time(self, s: float) -> ChaosPoint:
        """Map a point at proper time ``s`` to the equivalent point at time 1.

        Brownian scaling sends (w, beta, x, zeta, z) at time s to
        (w/√s, beta/√s, x/s², zeta/s^{3/2}, z/s^{3/2}) at time 1.
        """
        if s <= 0:
            raise InvalidParameterError(f"Proper time must be positive, got {s}")
        root = math.sqrt(s)
        cube = s * root
        return ChaosPoint(
            w=self.w / root,
            beta=self.beta / root,
            x=self.x / (s * s),
            zeta=self.zeta / cube,
            z=self.z / cube,
        )

    @classmethod
    def from_sequence(cls, values: Sequence[float]) -> ChaosPoint:
        """Create a point from five numbers in (w, beta, x, zeta, z) order."""
        if len(values) != 5:
            raise InvalidParameterError(f"Chaos point needs 5 coordinates, got {len(values)}")
        w, beta, x, zeta, z = (float(v) for v in values)
        return cls(w=w, beta=beta, x=x, zeta=zeta, z=z)
