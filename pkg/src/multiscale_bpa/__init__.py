"""Dempster-Shafer evidence toolkit built around the multiscale probability
transformation, a q-weighted generalisation of the pignistic transformation."""

from .core import (
    Frame,
    MassFunction,
    SingletonIntervals,
    bel,
    build_mass_function,
    pl,
    singleton_intervals,
)
from .errors import DegenerateEvidenceError, EvidenceError, ValidationError
from .fusion import ConflictReport, combine, combine_all
from .io import emit_bpa, emit_distribution, emit_sweep, parse_bpa
from .transforms import (
    ProbabilityDistribution,
    Ranking,
    SweepTable,
    find_crossover,
    focal_weights,
    multiscale,
    pignistic,
    rank,
    sweep,
)

__all__ = [
    "ConflictReport",
    "DegenerateEvidenceError",
    "EvidenceError",
    "Frame",
    "MassFunction",
    "ProbabilityDistribution",
    "Ranking",
    "SingletonIntervals",
    "SweepTable",
    "ValidationError",
    "bel",
    "build_mass_function",
    "combine",
    "combine_all",
    "emit_bpa",
    "emit_distribution",
    "emit_sweep",
    "find_crossover",
    "focal_weights",
    "multiscale",
    "parse_bpa",
    "pignistic",
    "pl",
    "rank",
    "singleton_intervals",
    "sweep",
]
