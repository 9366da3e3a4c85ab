"""Outcome of a numerical cross-check."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from chaos_kernel.domain.exceptions import InvalidParameterError

type Verdict = Literal["PASS", "FAIL"]


@dataclass(frozen=True)
class CheckOutcome:
    """Measured discrepancy of a check against its threshold.

    ``measured`` and ``threshold`` are in the same units. The check passes when
    the measured value does not exceed the threshold, or, for a lower bound
    such as a p-value, when it reaches it.
    """

    name: str
    measured: float
    threshold: float
    detail: str = ""
    lower_bound: bool = False

    def __post_init__(self) -> None:
        """Validate outcome after initialization."""
        if not self.name:
            raise InvalidParameterError("Check name must not be empty")
        if math.isnan(self.measured) or math.isnan(self.threshold):
            raise InvalidParameterError(f"Check {self.name} has NaN figures")

    @property
    def passed(self) -> bool:
        """Check if the measured figure is on the right side of the threshold."""
        if self.lower_bound:
            return self.measured >= self.threshold
        return self.measured <= self.threshold

    @property
    def verdict(self) -> Verdict:
        """PASS or FAIL."""
        return "PASS" if self.passed else "FAIL"
