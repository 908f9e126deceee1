import math

import numpy as np
import pytest

from uniqrecall.errors import DomainError
from uniqrecall.evolution import evolve
from uniqrecall.recall import unique_recall_exact, variance_uniform_asymptotic
from uniqrecall.spectra import RedundancyProfile, rho_from_alpha
from uniqrecall.urn import (
    nearest_rank,
    sample_once,
    sample_once_shuffle,
    simulate,
    splitmix64,
    trial_seed,
)

from .oracles import enumerate_b_u, enumerate_layers, partitions


class TestSeeding:
    def test_splitmix_reference(self):
        # first outputs of the reference splitmix64 stream started from state 0
        assert trial_seed(0, 0) == 0xE220A8397B1DCDAF
        assert trial_seed(0, 1) == 0x6E789E6AA1B965F4

    def test_splitmix_masks(self):
        assert splitmix64(-1) == splitmix64((1 << 64) - 1)

    def test_trials_distinct(self):
        seeds = {trial_seed(42, t) for t in range(10000)}
        assert len(seeds) == 10000


class TestDeterminism:
    def test_same_seed_same_result(self, running_profile):
        a = simulate(running_profile, 7, 300, 11)
        b = simulate(running_profile, 7, 300, 11)
        np.testing.assert_array_equal(a.r_u, b.r_u)
        assert a.mean_r_u == b.mean_r_u

    @pytest.mark.parametrize("workers", [2, 3, 8])
    def test_workers_do_not_matter(self, running_profile, workers):
        one = simulate(running_profile, 7, 301, 5)
        many = simulate(running_profile, 7, 301, 5, workers=workers)
        np.testing.assert_array_equal(one.r_u, many.r_u)
        np.testing.assert_array_equal(one.mean_omega, many.mean_omega)
        assert one.percentiles == many.percentiles

    def test_prefix_stable(self, running_profile):
        # trial t depends only on (seed, t)
        short = simulate(running_profile, 7, 50, 3)
        long = simulate(running_profile, 7, 200, 3)
        np.testing.assert_array_equal(short.r_u, long.r_u[:50])

    def test_different_seeds_differ(self, running_profile):
        assert not np.array_equal(simulate(running_profile, 7, 100, 1).r_u, simulate(running_profile, 7, 100, 2).r_u)


class TestDraw:
    def test_counts_respect_urn(self, running_profile):
        for seed in range(50):
            d = sample_once(running_profile, 9, seed)
            assert d.counts.sum() == 9
            assert np.all(d.counts <= running_profile.ranks)
            assert np.all(d.counts >= 0)

    def test_layers(self):
        d = sample_once(RedundancyProfile([3, 3, 1]), 7, 0)
        assert d.counts.tolist() == [3, 3, 1]
        assert d.delta(3).tolist() == pytest.approx([0, 1 / 3, 0, 2 / 3])
        assert d.omega(3).tolist() == pytest.approx([1, 2 / 3, 2 / 3])
        assert d.r_u == 1.0

    def test_extremes(self, running_profile):
        assert simulate(running_profile, 0, 5, 1).mean_r_u == 0.0
        assert simulate(running_profile, 15, 5, 1).mean_r_u == 1.0

    def test_domain(self, running_profile):
        with pytest.raises(DomainError):
            sample_once(running_profile, 16, 0)
        with pytest.raises(DomainError):
            simulate(running_profile, 3, 0, 0)

    def test_shuffle_limit(self):
        with pytest.raises(DomainError):
            sample_once_shuffle(RedundancyProfile([2] * 60000), 10, 0)


def _exact_distribution(rho, b):
    from collections import Counter
    from itertools import combinations

    from .oracles import urn

    balls = urn(rho)
    hist = Counter(len({balls[i] for i in pick}) for pick in combinations(range(len(balls)), b))
    n = sum(hist.values())
    return {k: v / n for k, v in hist.items()}


@pytest.mark.parametrize("sampler", [sample_once, sample_once_shuffle])
def test_sampler_distribution(sampler):
    # chi-square goodness of fit of b_u against the enumerated law
    rho, b, n = (6, 3, 3, 2, 1), 6, 20000
    law = _exact_distribution(rho, b)
    prof = RedundancyProfile(rho)
    obs = np.zeros(6)
    for t in range(n):
        obs[sampler(prof, b, trial_seed(99, t)).b_u] += 1
    ks = sorted(law)
    expected = np.array([law[k] * n for k in ks])
    chi2 = float(np.sum((obs[ks] - expected) ** 2 / expected))
    # df = 4; 0.999 quantile is 18.47
    assert chi2 < 18.47
    assert obs[[k for k in range(6) if k not in law]].sum() == 0


def _check_against_oracle(max_a, trials, z=4.5):
    for a in range(1, max_a + 1):
        for rho in partitions(a):
            prof = RedundancyProfile(rho)
            for b in range(a + 1):
                mean, var = enumerate_b_u(rho, b)
                stats = simulate(prof, b, trials, master_seed=1000 * a + b)
                got = stats.mean_r_u * len(rho)
                if var == 0:
                    assert got == float(mean), (rho, b)
                    continue
                se = math.sqrt(float(var) / trials)
                assert abs(got - float(mean)) <= z * se, (rho, b, got, float(mean))
                assert unique_recall_exact(prof, b).b_u_expected == pytest.approx(float(mean), abs=1e-12)


def test_simulation_matches_enumeration():
    _check_against_oracle(8, 500)


@pytest.mark.slow
def test_simulation_matches_enumeration_to_twelve():
    _check_against_oracle(12, 2000)


def test_convergence_sequence():
    for a, expected in ((4, 5 / 6), (6, 4 / 5), (8, 11 / 14), (10, 7 / 9)):
        stats = simulate(RedundancyProfile([2] * (a // 2)), a // 2, 20000, a)
        assert stats.mean_r_u == pytest.approx(expected, abs=4 * stats.std_error)


def test_concentration_at_scale():
    stats = simulate(RedundancyProfile([2] * 500), 500, 1000, 42)
    assert abs(stats.mean_r_u - 0.7503) <= 0.002
    predicted = 1.645 * math.sqrt(variance_uniform_asymptotic(2, 0.5, 500))
    assert 0.013 <= stats.halfwidth90 <= 0.025
    assert stats.halfwidth90 == pytest.approx(predicted, abs=0.005)


@pytest.mark.parametrize("a_u", [5, 20, 100, 1000])
def test_layer_convergence(running_spectrum, a_u):
    prof = rho_from_alpha(running_spectrum, a_u, strict=False)
    stats = simulate(prof, prof.a // 2, 100, 7)
    limit = evolve(running_spectrum, 0.5).omega
    err = np.max(np.abs(stats.mean_omega - limit))
    bound = {5: 0.15, 20: 0.05, 100: 0.02, 1000: 0.01}[a_u]
    assert err <= bound


def test_layer_mean_matches_enumeration(running_profile):
    exact = np.array([float(v) for v in enumerate_layers((6, 3, 3, 2, 1), 7)])
    stats = simulate(running_profile, 7, 20000, 3)
    np.testing.assert_allclose(stats.mean_omega, exact, atol=0.01)


def test_nearest_rank():
    vals = list(range(1, 101))
    assert nearest_rank(vals, 5) == 5
    assert nearest_rank(vals, 50) == 50
    assert nearest_rank(vals, 95) == 95
    assert nearest_rank([3.0], 5) == 3.0
    assert nearest_rank([1, 2, 3, 4], 50) == 2
