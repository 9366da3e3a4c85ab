"""Path configuration entity."""

from __future__ import annotations

from dataclasses import dataclass

from chaos_kernel.domain.exceptions import InvalidParameterError
from chaos_kernel.domain.value_objects.scheme import Scheme


@dataclass(frozen=True)
class PathConfig:
    """Discretization of one simulated path."""

    s_final: float
    steps: int
    seed: int
    scheme: Scheme = Scheme.EXACT

    def __post_init__(self) -> None:
        """Validate configuration after initialization."""
        if not self.s_final > 0:
            raise InvalidParameterError(f"Proper time must be positive, got {self.s_final}")
        if self.steps < 1:
            raise InvalidParameterError(f"Step count must be at least 1, got {self.steps}")
        if not 0 <= self.seed < 2**64:
            raise InvalidParameterError(f"Seed must be a 64-bit unsigned integer, got {self.seed}")

    @property
    def dt(self) -> float:
        """Proper-time step."""
        return self.s_final / self.steps

    @classmethod
    def with_density(
        cls, s_final: float, steps_per_unit: int, seed: int, scheme: Scheme = Scheme.EXACT
    ) -> PathConfig:
        """Config with a step count proportional to the horizon (at least one step)."""
        return cls(
            s_final=s_final,
            steps=max(1, round(s_final * steps_per_unit)),
            seed=seed,
            scheme=scheme,
        )
