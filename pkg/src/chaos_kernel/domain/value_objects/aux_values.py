"""Auxiliary function values."""

from __future__ import annotations

import math
from dataclasses import astuple, dataclass

from chaos_kernel.domain.exceptions import NumericFailureError


@dataclass(frozen=True)
class AuxValues:
    """F_r, F_i, U_r, U_i, V_r, V_i at one real xi >= 0.

    F_r and F_i blow up at xi = 0 and are reported as +inf there; the four
    other functions are finite everywhere and satisfy u_r >= 12, v_r >= 1.
    """

    xi: float
    f_r: float
    f_i: float
    u_r: float
    u_i: float
    v_r: float
    v_i: float

    def __post_init__(self) -> None:
        """Reject NaN components."""
        if any(math.isnan(v) for v in astuple(self)):
            raise NumericFailureError(f"Auxiliary functions produced NaN at xi={self.xi}")


@dataclass(frozen=True)
class RegularizedAux:
    """Auxiliary functions with their singular or constant parts removed.

    f_r_reg = F_r·xi⁴, f_i_reg = F_i·xi², tilde_u_r = (U_r − 12)/xi⁴,
    tilde_u_i = (U_i − 6/5)/xi⁴, tilde_v_r = (V_r − 1)/xi⁴,
    tilde_v_i = (V_i − 1/12)/xi⁴. All are finite on [0, inf).
    """

    xi: float
    f_r_reg: float
    f_i_reg: float
    tilde_u_r: float
    tilde_u_i: float
    tilde_v_r: float
    tilde_v_i: float

    def __post_init__(self) -> None:
        """Reject non-finite components."""
        if not all(math.isfinite(v) for v in astuple(self)):
            raise NumericFailureError(f"Regularized auxiliaries not finite at xi={self.xi}")
