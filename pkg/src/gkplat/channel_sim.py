"""Monte Carlo of the Gaussian displacement channel acting on lattice codes.

The channel displaces every quadrature independently by a centered
Gaussian of variance sigma_sq (physical units). Displacements are handled
entirely at the phase-space level: physical displacement = sqrt(2 pi hbar)
times the dimensionless lattice coordinates in which codes are stored, so
each lattice coordinate receives variance sigma_sq / (2 pi hbar).

Recovery applies the minimal-length correction consistent with the
syndrome. Two success criteria are offered:

* ``voronoi``: the displacement lies strictly inside the Voronoi cell of
  the normalizer lattice (sufficient for recovery; the default), or
* ``coset``: the nearest normalizer point is a stabilizer translation, so
  the minimal correction acts trivially on the code space (necessary and
  sufficient for this error model).

The coset success set contains the Voronoi one, so the coset criterion
never reports more failures. Ties on the cell boundary count as failures
under both.

Trials use the Philox counter-based generator. Worker streams are derived
by hashing (master seed, worker index), so a run is bit-reproducible for a
fixed (seed, trials, worker count) and may be partitioned freely.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .decoder import TIE_REL, closest_point
from .symplectic_lattice import (
    LatticeCode,
    coeff_transition,
    logical_class,
    orthogonal_scale_sq,
)

RNG_ALGORITHM = "philox4x64+sha256-worker-streams/v1"
WILSON_Z = 1.959963984540054  # 97.5th normal percentile, for 95% intervals
_BATCH = 1 << 18

CRITERIA = ("voronoi", "coset")


@dataclass(frozen=True)
class NoiseModel:
    """Gaussian displacement channel: per-quadrature variance, physical units."""

    sigma_sq: float
    hbar: float = 1.0

    def __post_init__(self):
        if self.sigma_sq < 0 or self.hbar <= 0:
            raise ValueError("sigma_sq must be >= 0 and hbar > 0")

    @property
    def lattice_sigma_sq(self) -> float:
        """Displacement variance per dimensionless lattice coordinate."""
        return self.sigma_sq / (2.0 * math.pi * self.hbar)

    @property
    def lattice_sigma(self) -> float:
        return math.sqrt(self.lattice_sigma_sq)


@dataclass(frozen=True)
class TrialOutcome:
    kind: str                                   # success | logical_error | tie
    label: tuple[Fraction, ...] | None = None   # class in L_perp / L

    @property
    def is_success(self) -> bool:
        return self.kind == "success"


SUCCESS = TrialOutcome("success")
TIE = TrialOutcome("tie")


@dataclass(frozen=True)
class ErrorEstimate:
    p_hat: float
    ci_low: float
    ci_high: float
    trials: int
    seed: int
    failures: int
    algorithm: str = RNG_ALGORITHM


def stream_key(seed: int, worker: int) -> np.ndarray:
    """128-bit Philox key for one worker's stream."""
    material = f"gkplat/{RNG_ALGORITHM}/{seed}/{worker}".encode()
    digest = hashlib.sha256(material).digest()
    return np.frombuffer(digest[:16], dtype=np.uint64).copy()


def make_generator(seed: int, worker: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=stream_key(seed, worker)))


def partition_trials(trials: int, workers: int) -> list[int]:
    base, extra = divmod(trials, workers)
    return [base + (1 if i < extra else 0) for i in range(workers)]


def wilson_interval(failures: int, trials: int, z: float = WILSON_Z) -> tuple[float, float]:
    """95% Wilson score interval for a binomial proportion."""
    p = failures / trials
    zz = z * z / trials
    denom = 1.0 + zz
    center = (p + zz / 2.0) / denom
    half = z * math.sqrt(p * (1.0 - p) / trials + zz / (4.0 * trials)) / denom
    low = 0.0 if failures == 0 else max(0.0, center - half)
    high = 1.0 if failures == trials else min(1.0, center + half)
    return low, high


def sample_displacement(noise: NoiseModel, n: int, rng: np.random.Generator) -> np.ndarray:
    """One channel use: n iid Gaussian displacements in lattice coordinates."""
    return rng.standard_normal(n) * noise.lattice_sigma


def recovery_outcome(code: LatticeCode, xi, criterion: str = "voronoi") -> TrialOutcome:
    """Outcome of decoding the displacement xi (lattice coordinates)."""
    if criterion not in CRITERIA:
        raise ValueError(f"criterion must be one of {CRITERIA}")
    res = closest_point(code.normalizer, xi)
    if res.tie:
        return TIE
    if criterion == "voronoi":
        if not res.coeffs.any():
            return SUCCESS
        return TrialOutcome("logical_error", logical_class(code, res.coeffs))
    label = logical_class(code, res.coeffs)
    if all(c == 0 for c in label):
        return SUCCESS
    return TrialOutcome("logical_error", label)


def _coset_test_arrays(code: LatticeCode) -> tuple[np.ndarray, int]:
    """Integer matrix/denominator pair: coeffs c are stabilizer translations
    iff (c @ num) % den == 0 for the exact transition written over a common
    denominator."""
    t = coeff_transition(code.normalizer, code.stabilizer)
    den = 1
    for row in t:
        for v in row:
            den = den * v.denominator // math.gcd(den, v.denominator)
    num = np.array([[int(v * den) for v in row] for row in t], dtype=np.int64)
    return num, den


def _count_failures_rounding(code, noise, gen, count, criterion, m_inv, c_sq, num, den):
    """Vectorized trial loop for orthogonal-frame normalizers.

    For these lattices nearest-point decoding is exact coordinatewise
    rounding in basis coordinates, and the tie gap along coordinate i is
    c_sq * (1 - 2|frac_i|).
    """
    sigma = noise.lattice_sigma
    failures = 0
    done = 0
    n = code.normalizer.n
    while done < count:
        batch = min(_BATCH, count - done)
        u = (gen.standard_normal((batch, n)) * sigma) @ m_inv
        k = np.rint(u)
        frac = u - k
        d1 = c_sq * np.einsum("ij,ij->i", frac, frac)
        gap = c_sq * (1.0 - 2.0 * np.abs(frac)).min(axis=1)
        tie = gap <= TIE_REL * (1.0 + d1)
        if criterion == "voronoi":
            success = ~k.any(axis=1) & ~tie
        else:
            coeffs = k.astype(np.int64)
            success = ((coeffs @ num) % den == 0).all(axis=1) & ~tie
        failures += int(batch - success.sum())
        done += batch
    return failures


def _count_failures_generic(code, noise, gen, count, criterion):
    failures = 0
    for _ in range(count):
        xi = sample_displacement(noise, code.normalizer.n, gen)
        if not recovery_outcome(code, xi, criterion).is_success:
            failures += 1
    return failures


def estimate_error_probability(code: LatticeCode, noise: NoiseModel, trials: int,
                               seed: int, criterion: str = "voronoi",
                               workers: int = 1) -> ErrorEstimate:
    """Monte Carlo logical-error probability with a 95% Wilson interval.

    Deterministic for a fixed (seed, trials, workers): worker w consumes
    the derived stream hash(seed, w) and failure counts are summed.
    """
    if criterion not in CRITERIA:
        raise ValueError(f"criterion must be one of {CRITERIA}")
    if trials < 1 or workers < 1:
        raise ValueError("trials and workers must be positive")

    c_sq = orthogonal_scale_sq(code.normalizer)
    if c_sq is not None:
        m_inv = np.linalg.inv(code.normalizer.effective_matrix())
        num, den = _coset_test_arrays(code)

    failures = 0
    for worker, count in enumerate(partition_trials(trials, workers)):
        if count == 0:
            continue
        gen = make_generator(seed, worker)
        if c_sq is not None:
            failures += _count_failures_rounding(
                code, noise, gen, count, criterion, m_inv, float(c_sq), num, den)
        else:
            failures += _count_failures_generic(code, noise, gen, count, criterion)

    low, high = wilson_interval(failures, trials)
    return ErrorEstimate(p_hat=failures / trials, ci_low=low, ci_high=high,
                         trials=trials, seed=seed, failures=failures)
