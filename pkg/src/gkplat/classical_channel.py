"""Rates for the classical Gaussian channel under an average-power constraint.

Analytic formulas only: the Shannon capacity, the one-bit-short rate from
Minkowski-density lattice packings, the de Buda lattice-code rate, and the
concatenated-dit scheme (d-ary signaling per real variable plus an outer
random code). Everything depends on P and sigma^2 only through the ratio
P / sigma^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erfc as _erfc_vec

from .concatenated import entropy_base_d


@dataclass(frozen=True)
class ClassicalParams:
    power: float       # average power constraint P
    sigma_sq: float

    def __post_init__(self):
        if self.power <= 0 or self.sigma_sq <= 0:
            raise ValueError("power and sigma_sq must be positive")

    @property
    def snr(self) -> float:
        return self.power / self.sigma_sq


def shannon_capacity(params: ClassicalParams) -> float:
    """C = (1/2) log2(1 + P / sigma^2) bits per real variable."""
    return 0.5 * math.log2(1.0 + params.snr)


def minkowski_lattice_rate(params: ClassicalParams) -> float:
    """Rate of non-overlapping decoding spheres on a Minkowski-density
    lattice: one bit below capacity, clamped at zero."""
    return max(0.0, shannon_capacity(params) - 1.0)


def debuda_rate(params: ClassicalParams) -> float:
    """Lattice-code rate (1/2) log2(P / sigma^2) achievable with small
    maximal error probability; approaches capacity at high SNR."""
    return max(0.0, 0.5 * math.log2(params.snr))


def classical_dit_error_prob(d: int, params: ClassicalParams) -> float:
    """Per-variable error bound erfc(sqrt(3 P / (2 d^2 sigma^2))) for d-ary
    signaling with spacing 2 dx, dx = sqrt(3 P) / d."""
    if d < 2:
        raise ValueError("signal alphabet must have d >= 2")
    return math.erfc(math.sqrt(1.5 * params.power / (d * d * params.sigma_sq)))


def classical_concat_rate(d: int, p: float) -> float:
    """Bits per variable of a random outer code on d-ary signals:
    log2(d) (1 - H_d(p) - p log_d(d-1)), clamped at 0."""
    if d < 2:
        raise ValueError("signal alphabet must have d >= 2")
    log_ratio = math.log(d - 1) / math.log(d)
    rate_d = 1.0 - entropy_base_d(p, d) - p * log_ratio
    return max(0.0, math.log2(d) * rate_d)


def optimize_classical_d(params: ClassicalParams, d_max: int | None = None) -> tuple[int, float]:
    """Exhaustive scan of signal alphabet sizes; ties go to the smallest d.

    The optimum sits near C * sqrt(P / sigma^2) with C below 1, so the
    default ceiling 8 sqrt(P / sigma^2) is comfortably interior.
    """
    if d_max is None:
        d_max = max(2, math.ceil(8.0 * math.sqrt(params.snr)))
    if d_max < 2:
        raise ValueError("d_max must be >= 2")
    ds = np.arange(2, d_max + 1, dtype=np.int64)
    p = _erfc_vec(np.sqrt(1.5 * params.power / (ds.astype(float) ** 2 * params.sigma_sq)))
    log_d = np.log(ds.astype(float))
    with np.errstate(divide="ignore", invalid="ignore"):
        h = np.where(p > 0.0, -(p * np.log(p) + (1.0 - p) * np.log1p(-p)) / log_d, 0.0)
    log_ratio = np.log(np.maximum(ds - 1, 1)) / log_d
    rates = np.maximum(0.0, np.log2(ds.astype(float)) * (1.0 - h - p * log_ratio))
    idx = int(np.argmax(rates))
    return int(ds[idx]), float(rates[idx])
