"""Representations of redundancy bias and conversions among them.

Three views of the same data set:

* :class:`RedundancyProfile` -- redundancy of every distinct piece of
  information, ordered by rank (rank-frequency vector).
* :class:`FrequencySpectrum` -- fraction of distinct pieces seen exactly
  ``k`` times (count-frequency). This is the canonical form; it is stored
  sparsely since real histograms reach ``k_max ~ 1e6`` with few occupied k.
* :class:`LayerProfile` -- fraction seen at least ``k`` times.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InvalidSpectrumError

EPS_ANALYTIC = 1e-9
EPS_INGEST = 1e-6
INTEGRALITY_SLACK = 1e-6


def _frozen(arr, dtype):
    out = np.array(arr, dtype=dtype, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class RedundancyProfile:
    ranks: np.ndarray

    def __post_init__(self):
        ranks = _frozen(self.ranks, np.int64)
        if ranks.ndim != 1 or ranks.size == 0:
            raise DomainError("redundancy profile needs at least one entry")
        if ranks.min() < 1:
            raise DomainError("every redundancy must be >= 1")
        if np.any(np.diff(ranks) > 0):
            raise DomainError("redundancies must be non-increasing by rank")
        object.__setattr__(self, "ranks", ranks)

    @classmethod
    def from_counts(cls, counts) -> "RedundancyProfile":
        """Build from unordered per-item frequencies."""
        return cls(np.sort(np.asarray(counts, dtype=np.int64))[::-1])

    @property
    def a(self) -> int:
        return int(self.ranks.sum())

    @property
    def a_u(self) -> int:
        return int(self.ranks.size)

    @property
    def k_max(self) -> int:
        return int(self.ranks[0])

    def distinct(self):
        """Distinct redundancies (ascending) and their multiplicities."""
        ks, mult = np.unique(self.ranks, return_counts=True)
        return ks, mult

    def __len__(self):
        return self.a_u


@dataclass(frozen=True)
class FrequencySpectrum:
    """Sparse count-frequency spectrum.

    ``ks`` holds the occupied redundancies in ascending order and ``mass``
    the matching fractions. ``k_max`` is the declared length of the dense
    vector; a valid spectrum has positive mass there.
    """

    ks: np.ndarray
    mass: np.ndarray
    k_max: int
    eps: float = EPS_ANALYTIC

    def __post_init__(self):
        ks = _frozen(self.ks, np.int64)
        mass = _frozen(self.mass, np.float64)
        if ks.shape != mass.shape or ks.ndim != 1:
            raise DomainError("ks and mass must be 1-d arrays of equal length")
        if ks.size and (ks[0] < 1 or np.any(np.diff(ks) <= 0)):
            raise DomainError("ks must be strictly increasing positive integers")
        if ks.size and ks[-1] > self.k_max:
            raise DomainError("occupied k beyond k_max")
        object.__setattr__(self, "ks", ks)
        object.__setattr__(self, "mass", mass)
        object.__setattr__(self, "k_max", int(self.k_max))

    @classmethod
    def from_dense(cls, alpha, eps: float = EPS_ANALYTIC) -> "FrequencySpectrum":
        alpha = np.asarray(alpha, dtype=np.float64)
        if alpha.ndim != 1 or alpha.size == 0:
            raise DomainError("spectrum needs at least one entry")
        nz = np.flatnonzero(alpha)
        return cls(nz + 1, alpha[nz], alpha.size, eps)

    @classmethod
    def uniform(cls, rho: int) -> "FrequencySpectrum":
        """All information carried exactly ``rho`` times."""
        if rho < 1:
            raise DomainError(f"rho must be >= 1, got {rho}")
        return cls(np.array([rho]), np.array([1.0]), rho)

    def dense(self) -> np.ndarray:
        out = np.zeros(self.k_max, dtype=np.float64)
        out[self.ks - 1] = self.mass
        return out

    def mean_redundancy(self) -> float:
        return math.fsum(self.ks * self.mass)

    def __len__(self):
        return self.k_max


@dataclass(frozen=True)
class LayerProfile:
    layers: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "layers", _frozen(self.layers, np.float64))

    @property
    def k_max(self) -> int:
        return int(self.layers.size)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def raise_if_invalid(self):
        if self.violations:
            raise InvalidSpectrumError(self.violations)


def validate(spectrum: FrequencySpectrum) -> ValidationReport:
    """Check the spectrum invariants and list each one that fails."""
    problems = []
    if spectrum.k_max < 1:
        problems.append("k_max must be >= 1")
    neg = spectrum.ks[spectrum.mass < 0]
    if neg.size:
        problems.append(f"negative mass at k={int(neg[0])}")
    big = spectrum.ks[spectrum.mass > 1]
    if big.size:
        problems.append(f"mass > 1 at k={int(big[0])}")
    total = math.fsum(spectrum.mass)
    if abs(total - 1.0) > spectrum.eps:
        problems.append(f"sum = {total:.12g} != 1")
    if spectrum.ks.size == 0 or spectrum.ks[-1] != spectrum.k_max or spectrum.mass[-1] <= 0:
        problems.append(f"no positive mass at k_max={spectrum.k_max}")
    return ValidationReport(tuple(problems))


def require_valid(spectrum: FrequencySpectrum) -> FrequencySpectrum:
    validate(spectrum).raise_if_invalid()
    return spectrum


def alpha_from_rho(profile: RedundancyProfile):
    """Frequency spectrum of a profile, plus ``a_u`` to keep the map injective."""
    ks, mult = profile.distinct()
    a_u = profile.a_u
    spec = FrequencySpectrum(ks, mult / a_u, int(ks[-1]))
    return spec, a_u


def rho_from_alpha(spectrum: FrequencySpectrum, a_u: int, strict: bool = True) -> RedundancyProfile:
    """Rebuild the rank vector: rho_i is the smallest k whose layer covers i/a_u.

    With ``strict`` every ``a_u * alpha_k`` must be an integer within the
    integrality slack. ``strict=False`` applies the quantile rule as-is, which
    is how a finite sample is synthesized from an analytic spectrum.
    """
    if a_u < 1:
        raise DomainError(f"a_u must be >= 1, got {a_u}")
    require_valid(spectrum)
    scaled = a_u * spectrum.mass
    if strict:
        off = np.abs(scaled - np.round(scaled))
        bad = np.flatnonzero(off > INTEGRALITY_SLACK * a_u)
        if bad.size:
            k = int(spectrum.ks[bad[0]])
            raise DomainError(
                f"a_u={a_u} incompatible with spectrum: a_u*alpha_{k} = {scaled[bad[0]]:.9g} "
                "is not an integer",
                k=k,
            )
        counts = np.round(scaled).astype(np.int64)
        return RedundancyProfile(np.repeat(spectrum.ks[::-1], counts[::-1]))
    # eta over occupied ks, descending k: layer value at each occupied k
    eta_occ = np.cumsum(spectrum.mass[::-1])
    ks_desc = spectrum.ks[::-1]
    i = np.arange(1, a_u + 1, dtype=np.float64) / a_u
    # smallest k with eta_k >= i/a_u  <=>  first descending position whose cumsum reaches it
    pos = np.searchsorted(eta_occ, i - 1e-12, side="left")
    pos = np.minimum(pos, ks_desc.size - 1)
    return RedundancyProfile(ks_desc[pos])


def eta_from_alpha(spectrum: FrequencySpectrum) -> LayerProfile:
    require_valid(spectrum)
    dense = spectrum.dense()
    eta = np.cumsum(dense[::-1])[::-1].copy()
    eta[0] = 1.0
    return LayerProfile(eta)


def alpha_from_eta(layers: LayerProfile, eps: float = EPS_ANALYTIC) -> FrequencySpectrum:
    eta = layers.layers
    if eta.size == 0 or eta[0] != 1.0:
        raise DomainError("layer profile must start at exactly 1")
    if np.any(np.diff(eta) > 0) or eta[-1] <= 0:
        raise DomainError("layers must be positive and non-increasing")
    alpha = np.empty_like(eta)
    alpha[:-1] = eta[:-1] - eta[1:]
    alpha[-1] = eta[-1]
    return FrequencySpectrum.from_dense(alpha, eps)
