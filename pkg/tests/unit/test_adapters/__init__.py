"""Adapter tests package."""

from __future__ import annotations
