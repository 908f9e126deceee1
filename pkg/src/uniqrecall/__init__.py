"""Expected unique recall of random samples from redundant data.

Given how often each distinct piece of information is repeated in a data
set, predict what fraction of the distinct information a random sample of
the data reveals, and how the sample's own redundancy distribution looks.
"""

from ._kernels import BACKEND
from .errors import (
    ConvergenceError,
    DomainError,
    FitError,
    IngestError,
    InvalidSpectrumError,
    UniqRecallError,
)
from .evolution import (
    CoreReport,
    KRecallCurve,
    SampleSpectrum,
    core_invariance_report,
    delta_uniform,
    evolve,
    k_recall_curve,
)
from .families import (
    FrequencyPowerLaw,
    Invariant,
    LayerPowerLaw,
    ZipfRank,
    exponent_convert,
    k_recall_invariant,
    materialize,
    recall_closed_form,
    tail_mass,
)
from .fit import FitResult, fit_exponent
from .io import ingest_histogram, ingest_raw
from .recall import (
    RecallEstimate,
    unique_recall_asymptotic,
    unique_recall_exact,
    unique_recall_uniform,
    variance_uniform_asymptotic,
    variance_uniform_exact,
)
from .special import SeriesConfig, artanh, binom_real, gen_harmonic, polylog, zeta
from .spectra import (
    FrequencySpectrum,
    LayerProfile,
    RedundancyProfile,
    alpha_from_eta,
    alpha_from_rho,
    eta_from_alpha,
    rho_from_alpha,
    validate,
)
from .tables import emit_table
from .urn import SimulationStats, sample_once, simulate

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ConvergenceError", "DomainError", "FitError", "IngestError", "InvalidSpectrumError", "UniqRecallError",
    "CoreReport", "KRecallCurve", "SampleSpectrum", "core_invariance_report", "delta_uniform", "evolve",
    "k_recall_curve",
    "FrequencyPowerLaw", "Invariant", "LayerPowerLaw", "ZipfRank", "exponent_convert", "k_recall_invariant",
    "materialize", "recall_closed_form", "tail_mass",
    "FitResult", "fit_exponent",
    "ingest_histogram", "ingest_raw",
    "RecallEstimate", "unique_recall_asymptotic", "unique_recall_exact", "unique_recall_uniform",
    "variance_uniform_asymptotic", "variance_uniform_exact",
    "SeriesConfig", "artanh", "binom_real", "gen_harmonic", "polylog", "zeta",
    "FrequencySpectrum", "LayerProfile", "RedundancyProfile", "alpha_from_eta", "alpha_from_rho",
    "eta_from_alpha", "rho_from_alpha", "validate",
    "emit_table",
    "SimulationStats", "sample_once", "simulate",
]
