"""Series kernels used by the closed-form recall expressions.

All sums are evaluated in double precision with an explicit truncation
contract: a :class:`SeriesConfig` fixes the absolute tolerance and the hard
term cap. Geometric series stop once a certified tail bound drops below the
tolerance; zeta uses Euler-Maclaurin with a bounded remainder.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError

_CHUNK = 65536

# B_{2j} / (2j)!  for j = 1..7
_BERNOULLI_OVER_FACT = (
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
)


@dataclass(frozen=True)
class SeriesConfig:
    tol: float = 1e-10
    max_terms: int = 10**7

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError(f"tol must be positive, got {self.tol}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")


def default_config() -> SeriesConfig:
    """Default series settings; ``UNIQ_RECALL_TOL`` overrides the tolerance."""
    env = os.environ.get("UNIQ_RECALL_TOL")
    if env:
        return SeriesConfig(tol=float(env))
    return SeriesConfig()


def _power_series(coef, x: float, cfg: SeriesConfig, what: str, bound_ratio=None) -> float:
    """Sum ``coef(k) * x**k`` for k >= 1 with a geometric tail certificate.

    ``coef`` maps an integer array to coefficients and must be non-increasing
    from the end of each chunk onward, so that the tail after term n is at
    most ``term(n+1) / (1 - x)``.
    """
    if x == 0.0:
        return 0.0
    logx = math.log(x)
    partials = []
    start = 1
    while start <= cfg.max_terms:
        stop = min(start + _CHUNK, cfg.max_terms + 1)
        k = np.arange(start, stop, dtype=np.float64)
        terms = coef(k) * np.exp(k * logx)
        partials.append(float(np.sum(terms[::-1])))
        nxt = float(coef(np.array([float(stop)]))[0]) * math.exp(stop * logx)
        q = x if bound_ratio is None else bound_ratio(stop)
        if q < 1.0 and nxt / (1.0 - q) <= cfg.tol:
            return math.fsum(partials)
        start = stop
    raise ConvergenceError(
        f"{what}: tail bound above tol={cfg.tol} after {cfg.max_terms} terms",
        terms=cfg.max_terms,
    )


def polylog(s: float, x: float, cfg: SeriesConfig | None = None) -> float:
    """Polylogarithm Li_s(x) for real s and 0 <= x < 1."""
    cfg = cfg or default_config()
    if not 0.0 <= x < 1.0:
        raise DomainError(f"polylog requires 0 <= x < 1, got x={x}")

    def bound(n):
        # term ratio x * (k / (k+1))**s, maximal at k = n when s < 0
        return x if s >= 0 else x * ((n + 1.0) / n) ** (-s)

    try:
        return _power_series(lambda k: k ** (-s), x, cfg, "polylog", bound)
    except ConvergenceError as exc:
        raise ConvergenceError(f"polylog(s={s}, x={x}): {exc}", s=s, x=x,
                               terms=cfg.max_terms) from None


def zeta_tail(s: float, n: int, cfg: SeriesConfig | None = None) -> float:
    """Sum of k**-s over k >= n (Hurwitz zeta at integer offset), s > 1."""
    cfg = cfg or default_config()
    if not s > 1.0:
        raise DomainError(f"zeta requires s > 1, got s={s}")
    if n < 1:
        raise DomainError(f"zeta_tail requires n >= 1, got n={n}")
    # direct terms up to m-1, Euler-Maclaurin from m on
    m = max(n, 32)
    head = 0.0
    if m > n:
        k = np.arange(n, m, dtype=np.float64)
        head = float(np.sum((k ** (-s))[::-1]))
    fm = float(m)
    em = fm ** (1.0 - s) / (s - 1.0) + 0.5 * fm ** (-s)
    # derivative factor s (s+1) ... (s+2j-2) * m**(-s-2j+1)
    rising = s
    power = fm ** (-s - 1.0)
    last = 0.0
    for j, b in enumerate(_BERNOULLI_OVER_FACT, start=1):
        last = b * rising * power
        em += last
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power /= fm * fm
    if abs(last) > cfg.tol:
        raise ConvergenceError(f"zeta_tail(s={s}, n={n}): remainder {abs(last):.3g} > tol")
    return head + em


def zeta(s: float, cfg: SeriesConfig | None = None) -> float:
    """Riemann zeta for real s > 1."""
    return zeta_tail(s, 1, cfg)


def artanh(x: float) -> float:
    if not -1.0 < x < 1.0:
        raise DomainError(f"artanh requires |x| < 1, got x={x}")
    return 0.5 * (math.log1p(x) - math.log1p(-x))


def binom_real(t: float, k: int) -> float:
    """Generalized binomial coefficient C(t, k) for real t, by running product."""
    if k < 0:
        raise DomainError(f"binom_real requires k >= 0, got k={k}")
    c = 1.0
    for j in range(1, k + 1):
        c = c * (t - j + 1) / j
    return c


def gen_harmonic(n: int, s: float) -> float:
    """Generalized harmonic number H_n^(s) = sum_{x=1}^n x**-s."""
    if n <= 0:
        return 0.0
    k = np.arange(1, n + 1, dtype=np.float64)
    return math.fsum((k ** (-s))[::-1])
