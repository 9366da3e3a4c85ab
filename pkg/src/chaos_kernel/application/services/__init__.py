"""Numerical services."""

from __future__ import annotations

from . import acceptance, alpha, density, model, numerics, special, transforms

__all__ = ["acceptance", "alpha", "density", "model", "numerics", "special", "transforms"]
