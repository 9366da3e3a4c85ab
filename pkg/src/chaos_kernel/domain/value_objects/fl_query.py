"""Fourier-Laplace query value objects."""

from __future__ import annotations

import math
from dataclasses import astuple, dataclass

from chaos_kernel.domain.exceptions import InvalidParameterError


@dataclass(frozen=True)
class FLQueryZ:
    """Frequencies (r, c) dual to (w_s, ∫w) and Laplace rate b dual to ½∫w²."""

    s: float
    r: float
    c: float
    b: float

    def __post_init__(self) -> None:
        """Validate query after initialization."""
        if not all(math.isfinite(v) for v in astuple(self)):
            raise InvalidParameterError("Transform query must be finite")
        if self.s < 0 or self.b < 0:
            raise InvalidParameterError(f"Need s >= 0 and b >= 0, got s={self.s}, b={self.b}")


@dataclass(frozen=True)
class FLQueryY:
    """Frequencies (r, rho, gamma, c) dual to (w_s, beta_s, zeta_s, z_s), rate b dual to A_s."""

    s: float
    r: float
    rho: float
    gamma: float
    c: float
    b: float

    def __post_init__(self) -> None:
        """Validate query after initialization."""
        if not all(math.isfinite(v) for v in astuple(self)):
            raise InvalidParameterError("Transform query must be finite")
        if self.s < 0 or self.b < 0:
            raise InvalidParameterError(f"Need s >= 0 and b >= 0, got s={self.s}, b={self.b}")

    def w_part(self) -> FLQueryZ:
        """Query on the (w, ∫w) factor."""
        return FLQueryZ(s=self.s, r=self.r, c=self.c, b=self.b)

    def beta_part(self) -> FLQueryZ:
        """Query on the (beta, ∫beta) factor."""
        return FLQueryZ(s=self.s, r=self.rho, c=self.gamma, b=self.b)
