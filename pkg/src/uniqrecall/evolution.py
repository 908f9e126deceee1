"""Expected sample distribution after drawing a fraction ``r`` of the data.

Each stratum of constant redundancy ``x`` contributes a binomial
``Binomial(x, r)`` spread of sample redundancies; the sample spectrum is the
alpha-weighted mixture of those rows. ``delta[k]`` is the fraction of all
distinct information seen exactly ``k`` times (``delta[0]`` = unseen) and
``omega[k]`` the fraction seen at least ``k`` times.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DomainError
from .recall import _check_r
from .spectra import FrequencySpectrum, eta_from_alpha, require_valid

MIXTURE_TOL = 1e-12


@dataclass(frozen=True)
class SampleSpectrum:
    r: float
    delta: np.ndarray  # k = 0..k_max
    omega: np.ndarray  # k = 1..k_max

    @property
    def k_max(self) -> int:
        return int(self.omega.size)

    @property
    def unique_recall(self) -> float:
        return float(self.omega[0])

    def relative_fraction(self, spectrum: FrequencySpectrum) -> np.ndarray:
        """theta_k = delta_k / alpha_k on occupied k (nan elsewhere)."""
        alpha = spectrum.dense()
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(alpha > 0, self.delta[1:] / alpha, np.nan)


@dataclass(frozen=True)
class KRecallCurve:
    r: float
    values: np.ndarray  # k = 1..k_max


@dataclass(frozen=True)
class CoreReport:
    r: float
    gamma: float
    band_tol: float
    k: np.ndarray
    k_recall: np.ndarray
    ratio: np.ndarray
    band: tuple[int, int] | None

    def in_band(self, k_lo: int, k_hi: int) -> bool:
        sel = (self.k >= k_lo) & (self.k <= k_hi)
        return bool(np.all(np.abs(self.ratio[sel] - 1.0) <= self.band_tol))


def delta_uniform(k: int, rho: int, r: float) -> float:
    """Probability a color with redundancy ``rho`` appears exactly ``k`` times."""
    _check_r(r)
    if k < 0 or k > rho:
        return 0.0
    return math.comb(rho, k) * r**k * (1.0 - r) ** (rho - k)


def _suffix_sum(delta):
    # omega_k = sum_{x >= k} delta_x for k = 1..k_max
    return np.cumsum(delta[:0:-1])[::-1].copy()


def evolve(spectrum: FrequencySpectrum, r: float, tol: float = MIXTURE_TOL, backend=None) -> SampleSpectrum:
    require_valid(spectrum)
    _check_r(r)
    k_max = spectrum.k_max
    if r == 0.0:
        delta = np.zeros(k_max + 1)
        delta[0] = 1.0
    elif r == 1.0:
        delta = np.zeros(k_max + 1)
        delta[spectrum.ks] = spectrum.mass
    else:
        delta = _kernels.binomial_mixture(spectrum.ks, spectrum.mass, k_max, r, tol, backend=backend)
    delta = np.asarray(delta, dtype=np.float64)
    delta.setflags(write=False)
    omega = _suffix_sum(delta)
    omega.setflags(write=False)
    return SampleSpectrum(r, delta, omega)


def k_recall_curve(spectrum: FrequencySpectrum, r: float, sample: SampleSpectrum | None = None) -> KRecallCurve:
    """Fraction of the information present >= k times that the sample also holds >= k times."""
    sample = sample if sample is not None else evolve(spectrum, r)
    eta = eta_from_alpha(spectrum).layers
    values = np.clip(sample.omega / eta, 0.0, 1.0)
    values.setflags(write=False)
    return KRecallCurve(r, values)


def _longest_run(mask):
    """(start, stop) of the first longest run of True, or None."""
    edges = np.diff(np.concatenate(([0], mask.astype(np.int8), [0])))
    starts = np.flatnonzero(edges == 1)
    stops = np.flatnonzero(edges == -1)
    if starts.size == 0:
        return None
    i = int(np.argmax(stops - starts))
    return int(starts[i]), int(stops[i])


def core_invariance_report(spectrum: FrequencySpectrum, r: float, gamma: float,
                           band_tol: float = 0.1) -> CoreReport:
    """Compare k-recall with ``r**gamma`` per layer and locate the invariant core.

    The core band is the longest contiguous k-range whose ratio stays within
    ``1 +- band_tol``.
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"core report needs 0 < r < 1, got {r}")
    if not gamma > 0:
        raise DomainError(f"gamma must be > 0, got {gamma}")
    curve = k_recall_curve(spectrum, r)
    ratio = curve.values / r**gamma
    k = np.arange(1, spectrum.k_max + 1)
    run = _longest_run(np.abs(ratio - 1.0) <= band_tol)
    band = None if run is None else (int(k[run[0]]), int(k[run[1] - 1]))
    return CoreReport(r, gamma, band_tol, k, curve.values, ratio, band)
