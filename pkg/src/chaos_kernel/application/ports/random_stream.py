"""Random stream port."""

from __future__ import annotations

from typing import Protocol

import numpy as np


class RandomStream(Protocol):
    """Source of independent, individually reproducible per-path generators."""

    @property
    def seed(self) -> int:
        """Root seed all path streams derive from."""
        ...

    def for_path(self, path: int) -> np.random.Generator:
        """Generator owned by one path.

        Args:
            path: Nonnegative path index

        Returns:
            A generator positioned at the first draw of the path; draws are
            consumed in step order

        Raises:
            InvalidParameterError: If the path index is negative
        """
        ...
