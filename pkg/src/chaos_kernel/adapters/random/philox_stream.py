"""Counter-based random streams."""

from __future__ import annotations

import numpy as np

from chaos_kernel.domain.exceptions import InvalidParameterError

UINT64_LIMIT = 2**64


class PhiloxStream:
    """Philox streams keyed by (seed, path index).

    Each path owns the key (seed, path); its draws advance the Philox counter,
    so the step index is the counter position. Results do not depend on how
    paths are partitioned among workers.
    """

    def __init__(self, seed: int) -> None:
        """Initialize stream family with a 64-bit root seed."""
        if not 0 <= seed < UINT64_LIMIT:
            raise InvalidParameterError(f"Seed must be a 64-bit unsigned integer, got {seed}")
        self._seed = seed

    @property
    def seed(self) -> int:
        """Root seed."""
        return self._seed

    def for_path(self, path: int) -> np.random.Generator:
        """Generator owned by one path."""
        if not 0 <= path < UINT64_LIMIT:
            raise InvalidParameterError(f"Path index must be a 64-bit unsigned integer, got {path}")
        key = np.array([self._seed, path], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))

    def __repr__(self) -> str:
        """Short representation with the seed."""
        return f"PhiloxStream(seed={self._seed})"
