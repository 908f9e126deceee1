"""Least-squares power-law exponent over an explicit k-range."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import FitError
from .families import exponent_convert
from .spectra import FrequencySpectrum, LayerProfile

POOR_RESIDUAL = 0.1
MIN_POINTS = 5
# smallest exponent that still describes a decaying tail, per label
_DOMAIN_FLOOR = {"gamma": 0.0, "beta": 1.0, "delta": 0.0, "tau": 0.0}


@dataclass(frozen=True)
class FitResult:
    exponent: float
    label: str  # "gamma" for layers, "beta" for frequencies
    k_range: tuple[int, int]
    residual: float
    quality: str  # "ok" | "poor"
    points: int
    equivalents: dict

    @property
    def ok(self) -> bool:
        return self.quality == "ok"


def fit_exponent(data, k_range, label: str | None = None) -> FitResult:
    """Fit ``log y = c - e * log k`` by ordinary least squares on occupied points.

    ``data`` is a :class:`LayerProfile` (exponent reported as gamma), a
    :class:`FrequencySpectrum` (beta), or a plain array indexed from k = 1.
    """
    if isinstance(data, LayerProfile):
        y = data.layers
        label = label or "gamma"
    elif isinstance(data, FrequencySpectrum):
        y = data.dense()
        label = label or "beta"
    else:
        y = np.asarray(data, dtype=np.float64)
        label = label or "gamma"
    k_lo, k_hi = int(k_range[0]), int(k_range[1])
    if not 1 <= k_lo < k_hi:
        raise FitError(f"invalid k range [{k_lo}, {k_hi}]")
    if k_hi > y.size:
        raise FitError(f"k_hi={k_hi} exceeds k_max={y.size}")
    k = np.arange(k_lo, k_hi + 1)
    v = y[k_lo - 1:k_hi]
    occ = v > 0
    if occ.sum() < MIN_POINTS:
        raise FitError(f"only {int(occ.sum())} occupied points in [{k_lo}, {k_hi}]; need {MIN_POINTS}")
    lx = np.log(k[occ])
    ly = np.log(v[occ])
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    rms = math.sqrt(float(np.mean(resid**2)))
    exponent = -float(slope)
    try:
        equivalents = exponent_convert(label, exponent)
    except ValueError:
        equivalents = {}
    return FitResult(
        exponent=exponent,
        label=label,
        k_range=(k_lo, k_hi),
        residual=rms,
        quality="poor" if rms > POOR_RESIDUAL or not _decays(label, exponent) else "ok",
        points=int(occ.sum()),
        equivalents=equivalents,
    )


def _decays(label, exponent):
    return exponent > _DOMAIN_FLOOR.get(label, 0.0) + 1e-6
