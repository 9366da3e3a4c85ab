"""Services tests package."""

from __future__ import annotations
