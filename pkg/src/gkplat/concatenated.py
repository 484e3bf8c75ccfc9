"""Concatenated coding: a grid qudit in each oscillator, a CSS code on top.

Each oscillator carries a d-dimensional system encoded in the single-mode
grid code; a shift of q by an integer multiple a of the normalizer spacing
delta = sqrt(2 pi hbar / d) acts as X^a on the qudit, a shift of p as Z^b.
Under Gaussian displacements the per-qudit error probabilities obey

    p_X, p_Z <= erfc(sqrt(pi hbar / (4 d sigma^2)))

and the X/Z components are independent. A CSS code over Z_d then protects
k of N qudits; the achievable asymptotic rate uses the pessimistic model
where all d-1 shift values are equally likely, while the Monte Carlo here
samples the true (peaked) shift distribution.

Rate formulas give qudits per oscillator; multiply by log2(d) for qubits.
The explicit nine-qudit block code below (three repetition blocks, block
sums compared across blocks) stands in for the random CSS codes of the
asymptotic argument when something concrete must be simulated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erfc as _erfc_vec

from .channel_sim import (
    ErrorEstimate,
    NoiseModel,
    make_generator,
    partition_trials,
    wilson_interval,
)


@dataclass(frozen=True)
class QuditPauliError:
    """Exponent pair of X^a Z^b on one qudit; (0, 0) is the identity."""

    a: int
    b: int

    @property
    def is_identity(self) -> bool:
        return self.a == 0 and self.b == 0


@dataclass(frozen=True, eq=False)
class CssCode:
    """CSS code over Z_d with a minimal-weight syndrome decode table.

    ``hz`` rows are Z-type checks (they detect X errors), ``hx`` rows are
    X-type checks (they detect Z errors); hx @ hz^T must vanish mod d.
    ``decode_table`` maps ("X"|"Z", syndrome tuple) to a correction
    exponent vector; syndromes outside the table are uncorrectable.
    """

    d: int
    n: int
    k: int
    hz: np.ndarray
    hx: np.ndarray
    logical_x: np.ndarray
    logical_z: np.ndarray
    decode_table: dict

    def __post_init__(self):
        d = self.d
        if d < 2:
            raise ValueError("qudit dimension must be >= 2")
        if self.hz.size and self.hx.size:
            if ((self.hx @ self.hz.T) % d).any():
                raise ValueError("check matrices are not orthogonal mod d")
        # logical operators must commute with the opposite-type checks
        if self.hz.size and ((self.hz @ self.logical_x.T) % d).any():
            raise ValueError("logical X anticommutes with a Z check")
        if self.hx.size and ((self.hx @ self.logical_z.T) % d).any():
            raise ValueError("logical Z anticommutes with an X check")


def gkp_qudit_error_prob(d: int, noise: NoiseModel) -> float:
    """Tail bound erfc(sqrt(pi hbar / (4 d sigma^2))) on p_X and p_Z."""
    if d < 1:
        raise ValueError("qudit dimension must be >= 1")
    return math.erfc(math.sqrt(math.pi * noise.hbar / (4.0 * d * noise.sigma_sq)))


def entropy_base_d(p: float, d: int) -> float:
    """Binary-split entropy -p log_d p - (1-p) log_d (1-p); 0 at p in {0,1}."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    if d < 2:
        raise ValueError("entropy base must be >= 2")
    if p == 0.0 or p == 1.0:
        return 0.0
    log_d = math.log(d)
    return -(p * math.log(p) + (1.0 - p) * math.log1p(-p)) / log_d


def css_rate_qudits(d: int, p_x: float, p_z: float) -> float:
    """Achievable qudit rate of random CSS codes at error rates (p_x, p_z):
    min over both sectors of 1 - 2 H_d(p) - 2 p log_d(d-1), clamped at 0."""
    if d < 2:
        raise ValueError("qudit dimension must be >= 2")
    log_ratio = math.log(d - 1) / math.log(d)  # 0 when d == 2
    r_x = 1.0 - 2.0 * entropy_base_d(p_x, d) - 2.0 * p_x * log_ratio
    r_z = 1.0 - 2.0 * entropy_base_d(p_z, d) - 2.0 * p_z * log_ratio
    return max(0.0, min(r_x, r_z))


def concat_rate_qubits(d: int, noise: NoiseModel) -> float:
    """Qubit rate of the concatenated scheme at qudit dimension d."""
    p = gkp_qudit_error_prob(d, noise)
    return math.log2(d) * css_rate_qudits(d, p, p)


@dataclass(frozen=True)
class ConcatDesign:
    """Optimized concatenated design at one noise level."""

    sigma_sq: float
    hbar: float
    d_opt: int
    p: float                 # per-qudit error bound at d_opt
    rate_qubits: float
    c_sq: float              # rate written as log2(c_sq * hbar / sigma_sq)


def optimize_qudit_dimension(noise: NoiseModel, d_max: int | None = None) -> ConcatDesign:
    """Exhaustive scan of qudit dimensions; ties go to the smallest d.

    The default ceiling 8 hbar / sigma^2 leaves the optimum (near
    c_sq * hbar / sigma^2 with c_sq < 1/e) well in the interior. The scan
    is exhaustive because the rate need not be unimodal in d.
    """
    if d_max is None:
        d_max = max(2, math.ceil(8.0 * noise.hbar / noise.sigma_sq))
    if d_max < 2:
        raise ValueError("d_max must be >= 2")
    ds = np.arange(2, d_max + 1, dtype=np.int64)
    p = _erfc_vec(np.sqrt(math.pi * noise.hbar / (4.0 * ds * noise.sigma_sq)))
    log_d = np.log(ds.astype(float))
    with np.errstate(divide="ignore", invalid="ignore"):
        h = np.where(p > 0.0, -(p * np.log(p) + (1.0 - p) * np.log1p(-p)) / log_d, 0.0)
    log_ratio = np.where(ds > 2, np.log(np.maximum(ds - 1, 1)) / log_d, 0.0)
    rate_d = np.maximum(0.0, 1.0 - 2.0 * h - 2.0 * p * log_ratio)
    rates = np.log2(ds.astype(float)) * rate_d
    idx = int(np.argmax(rates))
    d_opt = int(ds[idx])
    rate = float(rates[idx])
    c_sq = 2.0 ** rate * noise.sigma_sq / noise.hbar
    return ConcatDesign(noise.sigma_sq, noise.hbar, d_opt, float(p[idx]), rate, c_sq)


def gkp_qudit_channel_sample(d: int, noise: NoiseModel,
                             rng: np.random.Generator) -> QuditPauliError:
    """Sample the qudit error one Gaussian channel use induces."""
    a, b = sample_qudit_errors(d, noise, rng, 1)
    return QuditPauliError(int(a[0]), int(b[0]))


def sample_qudit_errors(d: int, noise: NoiseModel, rng: np.random.Generator,
                        size) -> tuple[np.ndarray, np.ndarray]:
    """Vector form of the single-qudit channel: arrays of X and Z exponents.

    Shifts are sampled in physical units and binned to the nearest
    multiple of the spacing delta = sqrt(2 pi hbar / d), modulo d.
    """
    if d < 2:
        raise ValueError("qudit dimension must be >= 2")
    delta = math.sqrt(2.0 * math.pi * noise.hbar / d)
    sigma = math.sqrt(noise.sigma_sq)
    shape = (2,) + (tuple(size) if isinstance(size, tuple) else (size,))
    shifts = rng.standard_normal(shape) * sigma
    binned = np.rint(shifts / delta).astype(np.int64) % d
    return binned[0], binned[1]


# ---------------------------------------------------------------------------
# The nine-qudit block code and syndrome decoding.

def shor9_code(d: int) -> CssCode:
    """Nine-qudit CSS code mod d: three repetition blocks plus block sums.

    Z-type checks compare neighbors within each block of three (six
    checks, diagnosing X shifts); X-type checks compare consecutive block
    sums (two checks, diagnosing Z shifts). Distance 3: every single-qudit
    X^a Z^b error is correctable.
    """
    if d < 2:
        raise ValueError("qudit dimension must be >= 2")
    hz = np.zeros((6, 9), dtype=np.int64)
    for block in range(3):
        for i in range(2):
            row = hz[2 * block + i]
            row[3 * block + i] = 1
            row[3 * block + i + 1] = d - 1
    hx = np.zeros((2, 9), dtype=np.int64)
    hx[0, 0:3] = 1
    hx[0, 3:6] = d - 1
    hx[1, 3:6] = 1
    hx[1, 6:9] = d - 1

    logical_x = np.zeros((1, 9), dtype=np.int64)
    logical_x[0, 0:3] = 1                       # constant on one block
    logical_z = np.zeros((1, 9), dtype=np.int64)
    logical_z[0, [0, 3, 6]] = 1                 # one site per block

    table = {}
    table[("X", (0,) * 6)] = np.zeros(9, dtype=np.int64)
    table[("Z", (0,) * 2)] = np.zeros(9, dtype=np.int64)
    for pos in range(9):
        for val in range(1, d):
            err = np.zeros(9, dtype=np.int64)
            err[pos] = val
            synd_x = ("X", tuple((hz @ err) % d))
            if synd_x in table and not np.array_equal(table[synd_x], err):
                raise AssertionError("colliding X syndromes for single errors")
            table[synd_x] = err
            synd_z = ("Z", tuple((hx @ err) % d))
            # within-block Z errors share a syndrome; any weight-1
            # representative is equivalent up to a Z-type stabilizer
            table.setdefault(synd_z, err)
    return CssCode(d=d, n=9, k=1, hz=hz, hx=hx,
                   logical_x=logical_x, logical_z=logical_z, decode_table=table)


def trivial_code(d: int) -> CssCode:
    """One bare qudit, no checks: every nonidentity error is logical."""
    empty = np.zeros((0, 1), dtype=np.int64)
    table = {("X", ()): np.zeros(1, dtype=np.int64),
             ("Z", ()): np.zeros(1, dtype=np.int64)}
    one = np.ones((1, 1), dtype=np.int64)
    return CssCode(d=d, n=1, k=1, hz=empty, hx=empty,
                   logical_x=one, logical_z=one, decode_table=table)


def css_decode(code: CssCode, error: list[QuditPauliError]) -> tuple[list[QuditPauliError], bool]:
    """Decode one block error; returns (correction, logical_failure).

    X and Z sectors are handled independently. A syndrome missing from the
    table is flagged as a failure with no correction attempted; otherwise
    failure means the residual error acts nontrivially on the code space
    (detected by its pairing with the opposite logical operators mod d).
    """
    if len(error) != code.n:
        raise ValueError("error length must equal the block length")
    d = code.d
    a = np.array([e.a % d for e in error], dtype=np.int64)
    b = np.array([e.b % d for e in error], dtype=np.int64)

    corr_a = code.decode_table.get(("X", tuple((code.hz @ a) % d)))
    corr_b = code.decode_table.get(("Z", tuple((code.hx @ b) % d)))
    zero = np.zeros(code.n, dtype=np.int64)
    failure = corr_a is None or corr_b is None
    if corr_a is None:
        corr_a = zero
    if corr_b is None:
        corr_b = zero
    if not failure:
        res_a = (a - corr_a) % d
        res_b = (b - corr_b) % d
        failure = bool(((res_a @ code.logical_z.T) % d).any()
                       or ((res_b @ code.logical_x.T) % d).any())
    correction = [QuditPauliError(int(x), int(y)) for x, y in zip(corr_a, corr_b)]
    return correction, failure


def _dense_tables(code: CssCode, sector: str, checks: np.ndarray):
    """Syndrome-indexed correction/coverage arrays for vectorized decoding."""
    d, rows = code.d, checks.shape[0]
    size = d ** rows
    covered = np.zeros(size, dtype=bool)
    corrections = np.zeros((size, code.n), dtype=np.int64)
    weights = d ** np.arange(rows - 1, -1, -1, dtype=np.int64) if rows else np.zeros(0, np.int64)
    for (sec, synd), corr in code.decode_table.items():
        if sec != sector:
            continue
        key = int(np.dot(np.array(synd, dtype=np.int64), weights)) if rows else 0
        covered[key] = True
        corrections[key] = corr
    return covered, corrections, weights


_BATCH_TRIALS = 1 << 18


def simulate_concatenated(code: CssCode, noise: NoiseModel, trials: int, seed: int,
                          workers: int = 1) -> ErrorEstimate:
    """Monte Carlo logical-failure probability of a concatenated block.

    Each trial draws independent grid-qudit errors for the N oscillators
    from the true shift distribution and decodes both sectors. Stream
    handling matches the channel simulator: deterministic for fixed
    (seed, trials, workers).
    """
    if trials < 1 or workers < 1:
        raise ValueError("trials and workers must be positive")
    d = code.d
    cov_x, corr_x, w_x = _dense_tables(code, "X", code.hz)
    cov_z, corr_z, w_z = _dense_tables(code, "Z", code.hx)

    failures = 0
    batch_cap = max(1, _BATCH_TRIALS // max(1, code.n))
    for worker, count in enumerate(partition_trials(trials, workers)):
        if count == 0:
            continue
        gen = make_generator(seed, worker)
        done = 0
        while done < count:
            batch = min(batch_cap, count - done)
            a, b = sample_qudit_errors(d, noise, gen, (batch, code.n))
            failures += _batch_failures(code, a, b, cov_x, corr_x, w_x,
                                        cov_z, corr_z, w_z)
            done += batch

    low, high = wilson_interval(failures, trials)
    return ErrorEstimate(p_hat=failures / trials, ci_low=low, ci_high=high,
                         trials=trials, seed=seed, failures=failures)


def _batch_failures(code, a, b, cov_x, corr_x, w_x, cov_z, corr_z, w_z) -> int:
    d = code.d
    if code.hz.size:
        keys = ((a @ code.hz.T) % d) @ w_x
    else:
        keys = np.zeros(a.shape[0], dtype=np.int64)
    bad_x = ~cov_x[keys]
    res_a = (a - corr_x[keys]) % d
    bad_x |= ((res_a @ code.logical_z.T) % d).any(axis=1)

    if code.hx.size:
        keys = ((b @ code.hx.T) % d) @ w_z
    else:
        keys = np.zeros(b.shape[0], dtype=np.int64)
    bad_z = ~cov_z[keys]
    res_b = (b - corr_z[keys]) % d
    bad_z |= ((res_b @ code.logical_x.T) % d).any(axis=1)
    return int((bad_x | bad_z).sum())


def min_distance_comparison(rate: float, n_modes: int, noise: NoiseModel) -> tuple[float, float, float]:
    """Shortest normalizer vectors of rate-matched codes: concatenated vs
    sphere-packing, as (len^2 concat, len^2 packing, length ratio).

    With d = 2^R the concatenated normalizer spacing gives
    len^2 = 2 pi hbar 2^-R, while a rate-R efficient packing on N modes
    reaches len^2 = (8 N hbar / e) 2^-R; the ratio of lengths is
    sqrt(4 N / (pi e)), independent of the rate.
    """
    if rate <= 0:
        raise ValueError("rate must be positive")
    l_sq_concat = 2.0 * math.pi * noise.hbar * 2.0 ** (-rate)
    l_sq_packing = (8.0 * n_modes * noise.hbar / math.e) * 2.0 ** (-rate)
    ratio = math.sqrt(l_sq_packing / l_sq_concat)
    return l_sq_concat, l_sq_packing, ratio
