"""Application layer - Use cases, services and ports."""

from __future__ import annotations

__all__ = []
