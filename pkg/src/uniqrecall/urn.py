"""Monte Carlo urn: draw ``b`` balls without replacement from a colored urn.

The urn is never materialized. Per-color counts are drawn one color at a
time from the hypergeometric law conditioned on what is left, which has the
same joint law as drawing balls (numpy's ``multivariate_hypergeometric``
with ``method="marginals"``). :func:`sample_once_shuffle` keeps the literal
shuffle-and-take sampler as a cross-check for small urns.

Seeding contract
----------------
Trial ``t`` of a run with master seed ``S`` uses the 64-bit seed::

    seed_t = splitmix64((S + (t + 1) * 0x9E3779B97F4A7C15) mod 2**64)

where ``splitmix64(z)`` is::

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9  mod 2**64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB  mod 2**64
    z =  z ^ (z >> 31)

and the trial's generator is ``numpy.random.Generator(PCG64(seed_t))``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .spectra import RedundancyProfile

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
SHUFFLE_LIMIT = 10**5


def splitmix64(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def trial_seed(master_seed: int, trial: int) -> int:
    return splitmix64((master_seed + (trial + 1) * _GOLDEN) & _MASK)


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed & _MASK))


@dataclass(frozen=True)
class UrnDraw:
    counts: np.ndarray  # per color, in rank order

    @property
    def b_u(self) -> int:
        return int(np.count_nonzero(self.counts))

    @property
    def r_u(self) -> float:
        return self.b_u / self.counts.size

    def delta(self, k_max: int) -> np.ndarray:
        """Observed fraction of colors drawn exactly k times, k = 0..k_max."""
        return np.bincount(self.counts, minlength=k_max + 1)[: k_max + 1] / self.counts.size

    def omega(self, k_max: int) -> np.ndarray:
        """Observed fraction of colors drawn at least k times, k = 1..k_max."""
        d = np.bincount(self.counts, minlength=k_max + 1)[: k_max + 1]
        return np.cumsum(d[:0:-1])[::-1] / self.counts.size


def _check(profile, b):
    if not 0 <= b <= profile.a:
        raise DomainError(f"draw count must satisfy 0 <= b <= a={profile.a}, got b={b}")


def sample_once(profile: RedundancyProfile, b: int, seed: int) -> UrnDraw:
    _check(profile, b)
    counts = _rng(seed).multivariate_hypergeometric(profile.ranks, b, method="marginals")
    return UrnDraw(counts.astype(np.int64))


def sample_once_shuffle(profile: RedundancyProfile, b: int, seed: int) -> UrnDraw:
    """Reference sampler: lay out every ball, shuffle, keep the first ``b``."""
    _check(profile, b)
    if profile.a > SHUFFLE_LIMIT:
        raise DomainError(f"shuffle sampler limited to a <= {SHUFFLE_LIMIT}")
    balls = np.repeat(np.arange(profile.a_u), profile.ranks)
    picked = _rng(seed).permutation(balls)[:b]
    return UrnDraw(np.bincount(picked, minlength=profile.a_u).astype(np.int64))


@dataclass(frozen=True)
class SimulationStats:
    trials: int
    master_seed: int
    b: int
    mean_r_u: float
    percentiles: dict
    mean_omega: np.ndarray  # k = 1..k_max
    mean_delta: np.ndarray  # k = 0..k_max
    r_u: np.ndarray  # per-trial values, trial order

    @property
    def halfwidth90(self) -> float:
        return 0.5 * (self.percentiles["p95"] - self.percentiles["p5"])

    @property
    def std_error(self) -> float:
        if self.trials < 2:
            return 0.0
        return float(np.std(self.r_u, ddof=1) / math.sqrt(self.trials))


def nearest_rank(sorted_values, p: float) -> float:
    n = len(sorted_values)
    idx = max(math.ceil(p / 100.0 * n), 1) - 1
    return float(sorted_values[idx])


def _run_chunk(profile, b, master_seed, trials, k_max):
    r_u = np.empty(len(trials))
    hist = np.zeros(k_max + 1, dtype=np.int64)
    for i, t in enumerate(trials):
        draw = sample_once(profile, b, trial_seed(master_seed, t))
        r_u[i] = draw.r_u
        hist += np.bincount(draw.counts, minlength=k_max + 1)[: k_max + 1]
    return r_u, hist


def simulate(profile: RedundancyProfile, b: int, trials: int, master_seed: int,
             workers: int = 1) -> SimulationStats:
    """Aggregate ``trials`` independent draws.

    Results depend only on the inputs, never on ``workers``: trials are split
    into contiguous chunks and reduced in trial order with integer histograms.
    """
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")
    _check(profile, b)
    k_max = profile.k_max
    if workers <= 1:
        chunks = [range(trials)]
    else:
        size = math.ceil(trials / workers)
        chunks = [range(s, min(s + size, trials)) for s in range(0, trials, size)]
    if len(chunks) == 1:
        results = [_run_chunk(profile, b, master_seed, chunks[0], k_max)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: _run_chunk(profile, b, master_seed, c, k_max), chunks))
    r_u = np.concatenate([res[0] for res in results])
    hist = np.sum([res[1] for res in results], axis=0)
    mean_delta = hist / (trials * profile.a_u)
    mean_omega = np.cumsum(hist[:0:-1])[::-1] / (trials * profile.a_u)
    ordered = np.sort(r_u)
    pct = {f"p{p}": nearest_rank(ordered, p) for p in (5, 50, 95)}
    return SimulationStats(
        trials=trials,
        master_seed=master_seed,
        b=b,
        mean_r_u=math.fsum(r_u) / trials,
        percentiles=pct,
        mean_omega=mean_omega,
        mean_delta=mean_delta,
        r_u=r_u,
    )
