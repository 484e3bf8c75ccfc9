"""Gaussian displacement channel Monte Carlo."""

import math

import numpy as np
import pytest

from gkplat.catalog import get
from gkplat.channel_sim import (
    SUCCESS,
    TIE,
    NoiseModel,
    estimate_error_probability,
    make_generator,
    recovery_outcome,
    sample_displacement,
    wilson_interval,
)
from gkplat.symplectic_lattice import make_code

from oracles import square_lattice_failure_prob, wilson_halfwidth


def lattice_noise(sigma_lattice: float, hbar: float = 1.0) -> NoiseModel:
    """NoiseModel whose per-coordinate lattice deviation is sigma_lattice."""
    return NoiseModel(sigma_lattice ** 2 * 2.0 * math.pi * hbar, hbar)


GQ2 = make_code(get("grid_qudit(2)").lattice)


class TestSampling:
    def test_zero_variance(self):
        xi = sample_displacement(NoiseModel(0.0), 4, make_generator(1))
        assert np.array_equal(xi, np.zeros(4))

    def test_mean_concentration(self):
        noise = lattice_noise(0.3)
        gen = make_generator(2)
        draws = np.concatenate(
            [sample_displacement(noise, 2, gen) for _ in range(500_000)])
        sigma = noise.lattice_sigma
        assert abs(draws.mean()) <= 4.0 * sigma / 1000.0

    def test_variance_concentration(self):
        noise = lattice_noise(0.3)
        gen = make_generator(3)
        draws = sample_displacement(noise, 1_000_000, gen)
        assert draws.var() == pytest.approx(noise.lattice_sigma_sq, rel=0.01)


class TestRecoveryOutcome:
    def test_zero_displacement(self):
        zero = [0.0, 0.0]
        assert recovery_outcome(GQ2, zero, "voronoi") is SUCCESS
        assert recovery_outcome(GQ2, zero, "coset") is SUCCESS

    def test_normalizer_vector_outside_stabilizer(self):
        # (1/sqrt(2)) e_2: a normalizer generator that is not a stabilizer
        xi = np.array([0.0, 1.0 / math.sqrt(2.0)])
        for criterion in ("voronoi", "coset"):
            out = recovery_outcome(GQ2, xi, criterion)
            assert out.kind == "logical_error"
            assert any(c != 0 for c in out.label)

    def test_stabilizer_vector_distinguishes_criteria(self):
        xi = np.array([math.sqrt(2.0), 0.0])
        voronoi = recovery_outcome(GQ2, xi, "voronoi")
        assert voronoi.kind == "logical_error"
        assert all(c == 0 for c in voronoi.label)  # trivial class, yet a failure
        assert recovery_outcome(GQ2, xi, "coset") is SUCCESS

    def test_boundary_tie(self):
        xi = np.array([1.0 / (2.0 * math.sqrt(2.0)), 0.0])
        assert recovery_outcome(GQ2, xi, "voronoi") is TIE

    def test_rejects_unknown_criterion(self):
        with pytest.raises(ValueError):
            recovery_outcome(GQ2, [0.0, 0.0], "ml")


class TestEstimate:
    def test_vanishing_noise(self):
        est = estimate_error_probability(GQ2, lattice_noise(0.01), 100_000, seed=5)
        assert est.p_hat == 0.0

    def test_square_lattice_oracle(self):
        noise = lattice_noise(0.15)
        est = estimate_error_probability(GQ2, noise, 1_000_000, seed=9)
        exact = square_lattice_failure_prob(2, 2, 0.15)
        half = wilson_halfwidth(est.p_hat, est.trials)
        assert abs(est.p_hat - exact) <= 3.0 * half

    def test_coset_never_worse(self):
        noise = lattice_noise(0.35)
        voronoi = estimate_error_probability(GQ2, noise, 200_000, seed=13,
                                             criterion="voronoi")
        coset = estimate_error_probability(GQ2, noise, 200_000, seed=13,
                                           criterion="coset")
        assert coset.p_hat < voronoi.p_hat  # strictly, at this noise level

    def test_monotone_in_sigma_common_randomness(self):
        previous = -1.0
        for sigma in [0.05, 0.1, 0.15, 0.2, 0.3]:
            est = estimate_error_probability(GQ2, lattice_noise(sigma),
                                             100_000, seed=21)
            assert est.p_hat >= previous
            previous = est.p_hat

    def test_deterministic(self):
        noise = lattice_noise(0.2)
        a = estimate_error_probability(GQ2, noise, 50_000, seed=33, workers=3)
        b = estimate_error_probability(GQ2, noise, 50_000, seed=33, workers=3)
        assert a == b

    def test_worker_partition_covers_trials(self):
        noise = lattice_noise(0.2)
        est = estimate_error_probability(GQ2, noise, 10_001, seed=1, workers=7)
        assert est.trials == 10_001

    def test_unit_conversion_exact(self):
        # (sigma^2, hbar) and (sigma^2 / 2, hbar / 2) hit identical streams
        a = estimate_error_probability(GQ2, NoiseModel(0.0225, 2.0), 50_000, seed=3)
        b = estimate_error_probability(GQ2, NoiseModel(0.01125, 1.0), 50_000, seed=3)
        assert a == b

    def test_interval_brackets_estimate(self):
        est = estimate_error_probability(GQ2, lattice_noise(0.18), 30_000, seed=8)
        assert est.ci_low <= est.p_hat <= est.ci_high

    def test_generic_path_agrees_with_rounding_path(self):
        # D4 exercises the enumeration path; grid lattices the rounding path.
        # Cross-check the two on a lattice both can handle.
        code = make_code(get("grid_qudit(3)").lattice)
        noise = lattice_noise(0.2)
        fast = estimate_error_probability(code, noise, 2_000, seed=41)
        slow_failures = 0
        gen = make_generator(41, 0)
        for _ in range(2_000):
            xi = sample_displacement(noise, 2, gen)
            if not recovery_outcome(code, xi, "voronoi").is_success:
                slow_failures += 1
        assert fast.failures == slow_failures

    def test_generic_lattice_runs(self):
        code = make_code(get("D4").lattice)
        est = estimate_error_probability(code, lattice_noise(0.2), 2_000, seed=6)
        assert 0.0 <= est.p_hat <= 1.0


class TestWilson:
    def test_zero_failures(self):
        low, high = wilson_interval(0, 1000)
        assert low == 0.0 and 0.0 < high < 0.005

    def test_all_failures(self):
        low, high = wilson_interval(1000, 1000)
        assert high == 1.0 and 0.995 < low < 1.0

    def test_width_shrinks_with_sqrt_trials(self):
        half1 = wilson_halfwidth(0.1, 10_000)
        half2 = wilson_halfwidth(0.1, 20_000)
        assert half1 / half2 == pytest.approx(math.sqrt(2.0), rel=0.01)


class TestNoiseModel:
    def test_lattice_variance(self):
        noise = NoiseModel(math.pi, 0.5)
        assert noise.lattice_sigma_sq == pytest.approx(1.0)

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            NoiseModel(-1.0)
        with pytest.raises(ValueError):
            NoiseModel(1.0, 0.0)
