"""Scale parameters of a chaos point."""

from __future__ import annotations

from dataclasses import dataclass

from chaos_kernel.domain.exceptions import InvalidParameterError


@dataclass(frozen=True)
class ScaleParams:
    """Quadratic forms B_s², B′_s, mu_s and nu_s of a point at proper time s."""

    b_sq: float
    b_prime: float
    mu: float
    nu: float

    def __post_init__(self) -> None:
        """Validate sign constraints."""
        if self.b_sq < 0:
            raise InvalidParameterError(f"B_s² must be nonnegative, got {self.b_sq}")
        if self.nu < 0:
            raise InvalidParameterError(f"nu_s must be nonnegative, got {self.nu}")
