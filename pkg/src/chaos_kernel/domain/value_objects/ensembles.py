"""Monte Carlo samples and summary tables."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from chaos_kernel.domain.exceptions import InvalidParameterError

type FloatArray = npt.NDArray[np.float64]


def _same_length(name: str, *arrays: FloatArray) -> None:
    sizes = {a.shape for a in arrays}
    if len(sizes) != 1 or any(a.ndim != 1 for a in arrays):
        raise InvalidParameterError(f"{name} arrays must be one-dimensional of equal length")


@dataclass(frozen=True)
class TangentSample:
    """Endpoints of simulated tangent-process paths at proper time ``s``.

    ``z`` and ``zeta`` are the time integrals of ``w`` and ``beta``;
    ``w_energy`` and ``beta_energy`` are the integrals of their squares.
    """

    s: float
    w: FloatArray
    beta: FloatArray
    zeta: FloatArray
    z: FloatArray
    w_energy: FloatArray
    beta_energy: FloatArray

    def __post_init__(self) -> None:
        """Validate array shapes after initialization."""
        _same_length(
            "Tangent sample", self.w, self.beta, self.zeta, self.z, self.w_energy, self.beta_energy
        )

    @property
    def size(self) -> int:
        """Number of paths."""
        return int(self.w.shape[0])

    @property
    def a(self) -> FloatArray:
        """Second-chaos coordinate A_s = (w_energy + beta_energy)/2."""
        return 0.5 * (self.w_energy + self.beta_energy)

    def columns(self) -> dict[str, FloatArray]:
        """Coordinates in (w, beta, x, zeta, z) order keyed by name."""
        return {"w": self.w, "beta": self.beta, "x": self.a, "zeta": self.zeta, "z": self.z}

    @classmethod
    def concatenate(cls, parts: Sequence[TangentSample]) -> TangentSample:
        """Join samples of the same horizon in the given order."""
        if not parts:
            raise InvalidParameterError("Nothing to concatenate")
        horizons = {p.s for p in parts}
        if len(horizons) != 1:
            raise InvalidParameterError(f"Samples have different horizons {sorted(horizons)}")
        return cls(
            s=parts[0].s,
            w=np.concatenate([p.w for p in parts]),
            beta=np.concatenate([p.beta for p in parts]),
            zeta=np.concatenate([p.zeta for p in parts]),
            z=np.concatenate([p.z for p in parts]),
            w_energy=np.concatenate([p.w_energy for p in parts]),
            beta_energy=np.concatenate([p.beta_energy for p in parts]),
        )


@dataclass(frozen=True)
class DudleyEnsemble:
    """Endpoints (lam, mu, x, y, z) of simulated Dudley paths at proper time ``s``."""

    s: float
    lam: FloatArray
    mu: FloatArray
    x: FloatArray
    y: FloatArray
    z: FloatArray

    def __post_init__(self) -> None:
        """Validate array shapes after initialization."""
        _same_length("Dudley ensemble", self.lam, self.mu, self.x, self.y, self.z)

    @property
    def size(self) -> int:
        """Number of paths."""
        return int(self.x.shape[0])

    @classmethod
    def concatenate(cls, parts: Sequence[DudleyEnsemble]) -> DudleyEnsemble:
        """Join ensembles of the same horizon in the given order."""
        if not parts:
            raise InvalidParameterError("Nothing to concatenate")
        return cls(
            s=parts[0].s,
            lam=np.concatenate([p.lam for p in parts]),
            mu=np.concatenate([p.mu for p in parts]),
            x=np.concatenate([p.x for p in parts]),
            y=np.concatenate([p.y for p in parts]),
            z=np.concatenate([p.z for p in parts]),
        )


@dataclass(frozen=True)
class Estimate:
    """Monte Carlo mean with its standard error."""

    mean: float
    std_error: float
    samples: int

    def __post_init__(self) -> None:
        """Validate estimate after initialization."""
        if self.samples < 1:
            raise InvalidParameterError("An estimate needs at least one sample")
        if not (math.isfinite(self.mean) and self.std_error >= 0):
            raise InvalidParameterError(f"Invalid estimate {self.mean} ± {self.std_error}")

    def z_score(self, target: float) -> float:
        """Distance to ``target`` in standard errors (inf when the error is zero)."""
        gap = abs(self.mean - target)
        if self.std_error == 0:
            return 0.0 if gap == 0 else math.inf
        return gap / self.std_error

    @classmethod
    def of(cls, values: npt.ArrayLike) -> Estimate:
        """Sample mean and standard error of ``values``."""
        arr = np.asarray(values, dtype=np.float64).ravel()
        if arr.size < 2:
            raise InvalidParameterError("A standard error needs at least two samples")
        return cls(
            mean=float(arr.mean()),
            std_error=float(arr.std(ddof=1) / math.sqrt(arr.size)),
            samples=int(arr.size),
        )


@dataclass(frozen=True)
class RemainderRow:
    """Remainder statistics of the tangent approximation at one horizon."""

    s: float
    median_r: float
    median_r_prime: float
    tail_r: tuple[float, ...]
    tail_r_prime: tuple[float, ...]
    median_r_error: float = 0.0
    median_r_prime_error: float = 0.0
    paths: int = 0


@dataclass(frozen=True)
class RemainderSurvey:
    """Remainder statistics across horizons and their fitted power laws."""

    r_values: tuple[float, ...]
    rows: tuple[RemainderRow, ...]
    exponent_r: float
    exponent_r_prime: float
    exponent_r_stderr: float
    exponent_r_prime_stderr: float
