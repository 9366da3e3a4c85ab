"""Domain entities."""

from __future__ import annotations

from chaos_kernel.domain.entities.chaos_point import ChaosPoint
from chaos_kernel.domain.entities.marginal_point import MarginalPoint
from chaos_kernel.domain.entities.path_config import PathConfig
from chaos_kernel.domain.entities.phase_point import PhasePoint

__all__ = ["ChaosPoint", "MarginalPoint", "PathConfig", "PhasePoint"]
