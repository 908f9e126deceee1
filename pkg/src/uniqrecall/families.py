"""Analytic power-law families of redundancy.

Four one-parameter families share a power-law tail but differ at the root:

* :class:`ZipfRank` -- rank-frequency ``rho(i) ~ i**-delta`` rounded to
  integer redundancies, giving layers ``eta_k = (2k-1)**(-1/delta)``.
* :class:`FrequencyPowerLaw` -- ``alpha_k = k**-beta / zeta(beta)``.
* :class:`LayerPowerLaw` -- ``eta_k = k**-gamma``.
* :class:`Invariant` -- ``alpha_k = (-1)**(k-1) C(tau, k)``, whose k-recall
  is ``r**tau`` at every layer.

Exponents convert as ``beta = gamma + 1 = 1/delta + 1 = tau + 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .recall import RecallEstimate, _check_r
from .special import SeriesConfig, _power_series, artanh, default_config, polylog, zeta, zeta_tail
from .spectra import FrequencySpectrum


@dataclass(frozen=True)
class ZipfRank:
    delta: float
    label = "delta"

    def __post_init__(self):
        if not self.delta > 0:
            raise DomainError(f"ZipfRank needs delta > 0, got {self.delta}")

    @property
    def param(self):
        return self.delta

    def layers(self, k):
        return (2.0 * np.asarray(k, dtype=np.float64) - 1.0) ** (-1.0 / self.delta)


@dataclass(frozen=True)
class FrequencyPowerLaw:
    beta: float
    label = "beta"

    def __post_init__(self):
        if not self.beta > 1:
            raise DomainError(f"FrequencyPowerLaw needs beta > 1, got {self.beta}")

    @property
    def param(self):
        return self.beta


@dataclass(frozen=True)
class LayerPowerLaw:
    gamma: float
    label = "gamma"

    def __post_init__(self):
        if not self.gamma > 0:
            raise DomainError(f"LayerPowerLaw needs gamma > 0, got {self.gamma}")

    @property
    def param(self):
        return self.gamma

    def layers(self, k):
        return np.asarray(k, dtype=np.float64) ** (-self.gamma)


@dataclass(frozen=True)
class Invariant:
    tau: float
    label = "tau"

    def __post_init__(self):
        if not 0 < self.tau <= 1:
            raise DomainError(f"Invariant needs 0 < tau <= 1, got {self.tau}")

    @property
    def param(self):
        return self.tau


TailFamily = ZipfRank | FrequencyPowerLaw | LayerPowerLaw | Invariant

FAMILY_NAMES = {
    "zipf": ZipfRank,
    "alpha": FrequencyPowerLaw,
    "eta": LayerPowerLaw,
    "invariant": Invariant,
}


def tail_beta(family: TailFamily) -> float:
    """Exponent of the alpha_k ~ k**-beta tail shared by the family."""
    return exponent_convert(family.label, family.param)["beta"]


def family_from_name(name: str, param: float) -> TailFamily:
    try:
        cls = FAMILY_NAMES[name]
    except KeyError:
        raise DomainError(f"unknown family {name!r}; choose from {sorted(FAMILY_NAMES)}") from None
    return cls(param)


def _layer_differences(family, k_max):
    """alpha_k = eta_k - eta_{k+1} for k < k_max, with eta_{k_max} kept at the end."""
    k = np.arange(1, k_max + 1, dtype=np.float64)
    eta = family.layers(k)
    alpha = np.empty(k_max)
    if isinstance(family, LayerPowerLaw):
        # k**-g * (1 - (1 + 1/k)**-g), cancellation-free
        alpha[:-1] = -eta[:-1] * np.expm1(-family.gamma * np.log1p(1.0 / k[:-1]))
    else:
        # (2k-1)**-s - (2k+1)**-s = (2k-1)**-s * (1 - (1 + 2/(2k-1))**-s)
        s = 1.0 / family.delta
        alpha[:-1] = -eta[:-1] * np.expm1(-s * np.log1p(2.0 / (2.0 * k[:-1] - 1.0)))
    alpha[-1] = eta[-1]
    return alpha


def materialize(family: TailFamily, k_max: int, cfg: SeriesConfig | None = None) -> FrequencySpectrum:
    """Finite spectrum of a family truncated at ``k_max``.

    Entries below ``k_max`` follow the family exactly; the last entry absorbs
    all remaining tail mass so the spectrum sums to one. Trailing empty
    entries are dropped.
    """
    if k_max < 1:
        raise DomainError(f"k_max must be >= 1, got {k_max}")
    if isinstance(family, (ZipfRank, LayerPowerLaw)):
        alpha = _layer_differences(family, k_max)
    elif isinstance(family, FrequencyPowerLaw):
        z = zeta(family.beta, cfg)
        k = np.arange(1, k_max + 1, dtype=np.float64)
        alpha = k ** (-family.beta) / z
        alpha[-1] = zeta_tail(family.beta, k_max, cfg) / z
    elif isinstance(family, Invariant):
        alpha = np.zeros(k_max)
        tau = family.tau
        c = tau
        alpha[0] = c
        for k in range(1, k_max - 1):
            c = c * (k - tau) / (k + 1)
            alpha[k] = c
        alpha[-1] = max(1.0 - math.fsum(alpha[:-1]), 0.0) if k_max > 1 else 1.0
    else:
        raise DomainError(f"not a tail family: {family!r}")
    # tau = 1 collapses onto k = 1; drop the empty tail so k_max stays occupied
    return FrequencySpectrum.from_dense(np.trim_zeros(alpha, "b"))


def tail_mass(family: TailFamily, k_max: int, cfg: SeriesConfig | None = None) -> float:
    """Mass beyond ``k_max`` that truncation folds into the terminal entry.

    Equals the untruncated family's ``eta_{k_max+1}``. For slowly decaying
    tails (small gamma) it stays large even at big ``k_max``.
    """
    if k_max < 1:
        raise DomainError(f"k_max must be >= 1, got {k_max}")
    if isinstance(family, (ZipfRank, LayerPowerLaw)):
        return float(family.layers(k_max + 1))
    if isinstance(family, FrequencyPowerLaw):
        return zeta_tail(family.beta, k_max + 1, cfg) / zeta(family.beta, cfg)
    if isinstance(family, Invariant):
        # eta_{k+1} = C(k - tau, k) in magnitude: prod_{j<=k} (j - tau) / j
        eta = 1.0
        for j in range(1, k_max + 1):
            eta *= (j - family.tau) / j
        return eta
    raise DomainError(f"not a tail family: {family!r}")


def recall_closed_form(family: TailFamily, r: float, cfg: SeriesConfig | None = None) -> RecallEstimate:
    """Large-data unique recall of the untruncated family."""
    _check_r(r)
    cfg = cfg or default_config()
    if r == 0.0:
        return RecallEstimate(0.0, "asymptotic")
    if r == 1.0:
        return RecallEstimate(1.0, "asymptotic")
    x = 1.0 - r
    if isinstance(family, ZipfRank):
        if family.delta == 1.0:
            s = math.sqrt(x)
            value = r / s * artanh(s)
        else:
            value = 1.0 - _zipf_series(family.delta, x, cfg)
    elif isinstance(family, FrequencyPowerLaw):
        value = 1.0 - polylog(family.beta, x, cfg) / zeta(family.beta, cfg)
    elif isinstance(family, LayerPowerLaw):
        if family.gamma == 1.0:
            value = -r * math.log(r) / x
        else:
            value = r / x * polylog(family.gamma, x, cfg)
    elif isinstance(family, Invariant):
        value = r ** family.tau
    else:
        raise DomainError(f"not a tail family: {family!r}")
    return RecallEstimate(value, "asymptotic")


def _zipf_series(delta, x, cfg):
    s = 1.0 / delta

    def coef(k):
        return -((2.0 * k - 1.0) ** (-s)) * np.expm1(-s * np.log1p(2.0 / (2.0 * k - 1.0)))

    return _power_series(coef, x, cfg, f"zipf series (delta={delta})")


def exponent_convert(label: str, value: float) -> dict:
    """All power-law exponents equivalent to ``label=value``.

    Returns a mapping with ``gamma``, ``beta`` and ``delta`` (``tau`` too when
    it lies in its domain). Targets whose domain excludes the converted value
    are reported under ``"invalid"`` instead of raising.
    """
    to_beta = {
        "gamma": lambda v: v + 1.0,
        "beta": lambda v: v,
        "delta": lambda v: 1.0 / v + 1.0,
        "tau": lambda v: v + 1.0,
    }
    if label not in to_beta:
        raise DomainError(f"unknown exponent label {label!r}")
    if label == "delta" and not value > 0:
        raise DomainError(f"delta must be > 0, got {value}")
    beta = to_beta[label](value)
    out = {"beta": beta, "invalid": {}}
    gamma = beta - 1.0
    if gamma > 0:
        out["gamma"] = gamma
        out["delta"] = 1.0 / gamma
    else:
        out["invalid"]["gamma"] = f"gamma = {gamma:g} must be > 0"
        out["invalid"]["delta"] = "delta undefined for beta <= 1"
    if beta <= 1:
        out["invalid"]["beta"] = f"beta = {beta:g} must be > 1"
    if 0 < gamma <= 1:
        out["tau"] = gamma
    else:
        out["invalid"]["tau"] = f"tau = {gamma:g} outside (0, 1]"
    return out


def k_recall_invariant(tau: float, r: float) -> float:
    """k-recall of the invariant family; the same at every layer."""
    if not 0 < tau <= 1:
        raise DomainError(f"tau must lie in (0, 1], got {tau}")
    _check_r(r)
    return r ** tau
