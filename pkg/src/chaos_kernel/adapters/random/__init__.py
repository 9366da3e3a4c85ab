"""Random stream adapters."""

from __future__ import annotations

from chaos_kernel.adapters.random.philox_stream import PhiloxStream

__all__ = ["PhiloxStream"]
