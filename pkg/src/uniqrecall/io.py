"""Tab-separated count files.

Two input layouts, both UTF-8 with ``#`` comment lines and no quoting:

* histogram: ``k<TAB>count`` -- ``count`` distinct items occur ``k`` times.
  Repeated ``k`` lines are summed.
* raw: ``item<TAB>frequency`` -- one line per distinct item.

Tables written by :mod:`uniqrecall.tables` use the same conventions.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, NamedTuple

import numpy as np

from .errors import IngestError
from .spectra import EPS_INGEST, FrequencySpectrum, RedundancyProfile, require_valid


class Ingested(NamedTuple):
    spectrum: FrequencySpectrum
    a_u: int
    a: int

    def profile(self) -> RedundancyProfile:
        counts = np.round(self.spectrum.mass * self.a_u).astype(np.int64)
        return RedundancyProfile(np.repeat(self.spectrum.ks[::-1], counts[::-1]))

    def histogram(self) -> dict:
        counts = np.round(self.spectrum.mass * self.a_u).astype(np.int64)
        return dict(zip(self.spectrum.ks.tolist(), counts.tolist()))


def _records(lines: Iterable[str]):
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise IngestError(f"line {lineno}: expected 2 tab-separated fields, got {len(fields)}",
                              line=lineno)
        yield lineno, fields[0], fields[1]


def _positive_int(text, lineno, what):
    try:
        value = int(text.strip())
    except ValueError:
        raise IngestError(f"line {lineno}: {what} {text!r} is not an integer", line=lineno) from None
    if value < 1:
        raise IngestError(f"line {lineno}: {what} must be positive, got {value}", line=lineno)
    return value


def from_histogram(hist: dict) -> Ingested:
    if not hist:
        raise IngestError("no records")
    ks = np.array(sorted(hist), dtype=np.int64)
    counts = np.array([hist[k] for k in ks.tolist()], dtype=np.int64)
    a_u = int(counts.sum())
    a = int((ks * counts).sum())
    spectrum = FrequencySpectrum(ks, counts / a_u, int(ks[-1]), EPS_INGEST)
    require_valid(spectrum)
    return Ingested(spectrum, a_u, a)


def ingest_histogram(lines: Iterable[str]) -> Ingested:
    hist = Counter()
    for lineno, k, count in _records(lines):
        hist[_positive_int(k, lineno, "k")] += _positive_int(count, lineno, "count")
    return from_histogram(hist)


def ingest_raw(lines: Iterable[str]) -> Ingested:
    seen = set()
    hist = Counter()
    for lineno, item, freq in _records(lines):
        if item in seen:
            raise IngestError(f"line {lineno}: duplicate item {item!r}", line=lineno, item=item)
        seen.add(item)
        hist[_positive_int(freq, lineno, "frequency")] += 1
    return from_histogram(hist)


def ingest(lines: Iterable[str], fmt: str = "histogram") -> Ingested:
    if fmt == "histogram":
        return ingest_histogram(lines)
    if fmt == "raw":
        return ingest_raw(lines)
    raise IngestError(f"unknown input format {fmt!r}")


def raw_lines(profile: RedundancyProfile, prefix: str = "i"):
    """Raw dump of a profile, one ``item<TAB>frequency`` line per color."""
    for i, rho in enumerate(profile.ranks.tolist(), start=1):
        yield f"{prefix}{i}\t{rho}\n"
