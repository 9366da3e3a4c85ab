"""Workers package."""

from __future__ import annotations

from .pool import WorkerPool

__all__ = ["WorkerPool"]
