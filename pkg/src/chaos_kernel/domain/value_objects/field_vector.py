"""Vector field value object."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from chaos_kernel.domain.exceptions import InvalidParameterError

COORDINATES = ("s", "lam", "mu", "x", "y", "z")


@dataclass(frozen=True)
class FieldVector:
    """Components of a vector field over (s, lam, mu, x, y, z) at one point."""

    components: tuple[float, float, float, float, float, float]

    def __post_init__(self) -> None:
        """Validate components after initialization."""
        if len(self.components) != len(COORDINATES):
            raise InvalidParameterError(f"Field vector needs 6 components, got {self.components}")
        if not all(math.isfinite(c) for c in self.components):
            raise InvalidParameterError(f"Field vector must be finite, got {self.components}")

    def as_array(self) -> npt.NDArray[np.float64]:
        """Return the components as a float array."""
        return np.array(self.components, dtype=np.float64)

    def component(self, name: str) -> float:
        """Component along one coordinate, e.g. ``"lam"``."""
        return self.components[COORDINATES.index(name)]

    @classmethod
    def from_array(cls, values: npt.ArrayLike) -> FieldVector:
        """Create a field vector from six numbers."""
        arr = np.asarray(values, dtype=np.float64).ravel()
        if arr.shape != (6,):
            raise InvalidParameterError(f"Field vector needs 6 components, got shape {arr.shape}")
        a, b, c, d, e, f = (float(v) for v in arr)
        return cls(components=(a, b, c, d, e, f))
