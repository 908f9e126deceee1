"""Expected unique recall: exact finite-urn values and large-data limits."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .errors import DomainError
from .spectra import FrequencySpectrum, RedundancyProfile, require_valid


@dataclass(frozen=True)
class RecallEstimate:
    value: float
    kind: str  # "exact" | "asymptotic"
    b_u_expected: float | None = None

    def __float__(self):
        return self.value


def _check_r(r):
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"recall must lie in [0, 1], got r={r}")


def _check_b(a, b):
    if not 0 <= b <= a:
        raise DomainError(f"draw count must satisfy 0 <= b <= a={a}, got b={b}")


def _seen_fraction(k, r):
    """1 - (1-r)**k, accurate for small r."""
    if r == 1.0:
        return np.ones_like(np.asarray(k, dtype=np.float64))
    return -np.expm1(np.asarray(k, dtype=np.float64) * math.log1p(-r))


def unique_recall_uniform(rho: int, r: float) -> RecallEstimate:
    """Limit recall when every piece of information has redundancy ``rho``."""
    if rho < 1:
        raise DomainError(f"rho must be >= 1, got {rho}")
    _check_r(r)
    return RecallEstimate(float(_seen_fraction(rho, r)), "asymptotic")


def unique_recall_asymptotic(spectrum: FrequencySpectrum, r: float) -> RecallEstimate:
    """Large-data unique recall: the alpha-weighted mean of uniform recalls."""
    require_valid(spectrum)
    _check_r(r)
    if r == 0.0:
        return RecallEstimate(0.0, "asymptotic")
    terms = spectrum.mass * _seen_fraction(spectrum.ks, r)
    value = math.fsum(terms)
    return RecallEstimate(min(max(value, 0.0), 1.0), "asymptotic")


def unique_recall_exact(profile: RedundancyProfile, b: int, backend=None) -> RecallEstimate:
    """Exact expected unique recall when drawing ``b`` of ``a`` items without replacement.

    Colors with equal redundancy share one miss probability, computed as a
    running product over the ascending distinct redundancies.
    """
    a = profile.a
    _check_b(a, b)
    rhos, mult = profile.distinct()
    miss = _kernels.miss_ratios(rhos, a, b, backend=backend)
    missed = math.fsum(mult * miss)
    b_u = profile.a_u - missed
    value = b_u / profile.a_u
    return RecallEstimate(min(max(value, 0.0), 1.0), "exact", b_u)


def unique_recall_uniform_exact(a: int, rho: int, b: int) -> Fraction:
    """Single-ratio form 1 - C(a-rho, b)/C(a, b) in exact rationals."""
    if rho < 1 or a % rho:
        raise DomainError(f"a={a} is not a multiple of rho={rho}")
    _check_b(a, b)
    return 1 - Fraction(math.comb(a - rho, b), math.comb(a, b))


def variance_uniform_asymptotic(rho: int, r: float, a_u: int) -> float:
    """Large-data variance of unique recall for a uniform profile."""
    if rho < 1 or a_u < 1:
        raise DomainError("rho and a_u must be >= 1")
    _check_r(r)
    if r == 1.0:
        return 0.0
    miss = (1.0 - r) ** rho
    return max(miss * (1.0 - miss * (1.0 + r * rho / (1.0 - r))) / a_u, 0.0)


def _comb_ratio(n, a, b):
    # C(n, b) / C(a, b) with C(n, b) = 0 for n < b
    if n < b:
        return Fraction(0)
    return Fraction(math.comb(n, b), math.comb(a, b))


def variance_uniform_exact(a: int, rho: int, b: int, exact: bool = False):
    """Variance of the distinct-color count b_u for a uniform urn.

    Returns a float, or a :class:`~fractions.Fraction` with ``exact=True``.
    """
    if rho < 1 or a < 1 or a % rho:
        raise DomainError(f"a={a} is not a multiple of rho={rho}")
    _check_b(a, b)
    a_u = a // rho
    if exact:
        r1 = _comb_ratio(a - rho, a, b)
        r2 = _comb_ratio(a - 2 * rho, a, b)
    else:
        r1, r2 = (float(v) for v in _kernels.miss_ratios([rho, 2 * rho], a, b))
    var = a_u * a_u * (r2 - r1 * r1) + a_u * (r1 - r2)
    return var if exact else max(float(var), 0.0)
