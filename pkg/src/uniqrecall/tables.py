"""Tab-separated tables behind the usual plots.

Every table starts with a single ``#`` header naming the columns and the
parameters that produced it, followed by rows in ascending ``r`` or ``k``.
Floats carry six significant digits.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError
from .evolution import evolve, k_recall_curve
from .recall import unique_recall_asymptotic
from .spectra import eta_from_alpha

KINDS = ("recall-curve", "krecall", "loglog", "evolution")


def fmt(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, str):
        return value
    return f"{float(value):.6g}"


def header(columns, **params) -> str:
    parts = [f"columns={','.join(columns)}"]
    parts += [f"{k}={fmt(v)}" for k, v in params.items() if v is not None]
    return "# " + " ".join(parts) + "\n"


def rows(*columns) -> list:
    return ["\t".join(fmt(v) for v in row) + "\n" for row in zip(*columns)]


def emit_table(kind: str, spectrum, *, r=None, r_grid=None, gamma=None, k_limit=None,
               source: str | None = None) -> list:
    """Lines of the table ``kind`` for ``spectrum``."""
    if kind not in KINDS:
        raise DomainError(f"unknown table kind {kind!r}; choose from {', '.join(KINDS)}")
    if kind == "recall-curve":
        grid = np.linspace(0.0, 1.0, 21) if r_grid is None else np.asarray(r_grid, dtype=float)
        grid = np.sort(grid)
        values = [unique_recall_asymptotic(spectrum, float(x)).value for x in grid]
        return [header(["r", "unique_recall"], source=source)] + rows(grid, values)
    if kind == "loglog":
        eta = eta_from_alpha(spectrum).layers
        k = np.arange(1, eta.size + 1)
        if k_limit:
            k, eta = k[:k_limit], eta[:k_limit]
        return [header(["k", "eta"], source=source)] + rows(k, eta)
    if r is None:
        raise DomainError(f"table {kind!r} needs r")
    if kind == "evolution":
        sample = evolve(spectrum, r)
        k = np.arange(0, sample.delta.size)
        omega = np.concatenate(([1.0], sample.omega))
        delta = sample.delta
        if k_limit:
            k, delta, omega = k[: k_limit + 1], delta[: k_limit + 1], omega[: k_limit + 1]
        return [header(["k", "delta", "omega"], r=r, source=source)] + rows(k, delta, omega)
    curve = k_recall_curve(spectrum, r).values
    k = np.arange(1, curve.size + 1)
    if k_limit:
        k, curve = k[:k_limit], curve[:k_limit]
    if gamma is None:
        return [header(["k", "k_recall"], r=r, source=source)] + rows(k, curve)
    ratio = curve / r**gamma
    return [header(["k", "k_recall", "ratio"], r=r, gamma=gamma, source=source)] + rows(k, curve, ratio)
