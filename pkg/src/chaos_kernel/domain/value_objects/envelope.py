"""Decay envelope value object."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
import numpy.typing as npt

from chaos_kernel.domain.exceptions import InvalidParameterError


class EnvelopeKind(str, Enum):
    """Shape of the exponential decay of an envelope."""

    EXPONENTIAL = "exponential-in-t"
    EXPONENTIAL_SQRT = "exponential-in-sqrt-t"


@dataclass(frozen=True)
class DecayEnvelope:
    """Upper bound on |f(t)| for t beyond ``threshold``.

    The bound is ``prefactor * (t/threshold)**power * exp(-rate * (g(t) - g(threshold)))``
    with ``g(t) = t`` for the exponential kind and ``g(t) = sqrt(t)`` for the
    square-root kind. ``power`` must be zero when ``threshold`` is zero.
    """

    kind: EnvelopeKind
    rate: float
    prefactor: float
    threshold: float = 0.0
    power: float = 0.0

    def __post_init__(self) -> None:
        """Validate envelope after initialization."""
        if not self.rate > 0:
            raise InvalidParameterError(f"Envelope rate must be positive, got {self.rate}")
        if not self.prefactor > 0:
            raise InvalidParameterError(
                f"Envelope prefactor must be positive, got {self.prefactor}"
            )
        if self.threshold < 0 or self.power < 0:
            raise InvalidParameterError("Envelope threshold and power must be nonnegative")
        if self.power > 0 and self.threshold == 0:
            raise InvalidParameterError("A polynomial envelope factor needs a positive threshold")

    def _phase(self, t: npt.NDArray[np.float64] | float) -> npt.NDArray[np.float64]:
        if self.kind is EnvelopeKind.EXPONENTIAL:
            return np.asarray(t, dtype=np.float64)
        return np.sqrt(np.asarray(t, dtype=np.float64))

    def bound(self, t: npt.NDArray[np.float64] | float) -> npt.NDArray[np.float64]:
        """Evaluate the envelope at ``t`` (meaningful for t >= threshold)."""
        arr = np.asarray(t, dtype=np.float64)
        log_b = math.log(self.prefactor) - self.rate * (
            self._phase(arr) - float(self._phase(self.threshold))
        )
        if self.power > 0:
            log_b = log_b + self.power * np.log(arr / self.threshold)
        return np.exp(log_b)

    def min_tail_start(self) -> float:
        """Smallest T for which :meth:`log_tail` is a valid bound, with margin."""
        if self.kind is EnvelopeKind.EXPONENTIAL:
            start = 2.0 * self.power / self.rate
        else:
            start = (2.0 * (2.0 * self.power + 1.0) / self.rate) ** 2
        return max(self.threshold, start)

    def log_tail(self, T: float) -> float:
        """Log of an upper bound on the integral of the envelope over [T, inf).

        Raises:
            InvalidParameterError: If T is below the range where the bound holds.
        """
        if T < self.threshold:
            raise InvalidParameterError(f"Tail start {T} is below envelope threshold")
        log_pref = math.log(self.prefactor)
        log_poly = self.power * math.log(T / self.threshold) if self.power > 0 else 0.0
        if self.kind is EnvelopeKind.EXPONENTIAL:
            slack = self.rate - self.power / T if self.power > 0 else self.rate
            if slack <= 0:
                raise InvalidParameterError(f"Tail bound invalid at T={T}")
            return log_pref + log_poly - self.rate * (T - self.threshold) - math.log(slack)
        root = math.sqrt(T)
        slack = self.rate - (2.0 * self.power + 1.0) / root if root > 0 else 0.0
        if slack <= 0:
            raise InvalidParameterError(f"Tail bound invalid at T={T}")
        return (
            log_pref
            + log_poly
            + math.log(2.0 * root)
            - self.rate * (root - math.sqrt(self.threshold))
            - math.log(slack)
        )
