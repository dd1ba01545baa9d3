"""Exact refinements of Sturmian-measurable partitions of the circle under irrational rotation."""

from .continued_fractions import ConvergentTable, convergents, interval_I, locate_k
from .errors import (
    HypothesisError,
    InputError,
    NotCodedError,
    ResourceCapError,
    SturmError,
    VerificationFailure,
)
from .exact_circle import AlphaSpec, Arc, CirclePoint, compare_points, orbit_point, sort_points
from .partitions import (
    LabeledPartition,
    Limits,
    equals_sturmian_refinement,
    from_cut_labels,
    join,
    refine,
    sturmian_partition,
    theorem1_witness,
    theorem2_bound,
    verify_theorem2,
)
from .subshift import LanguageModel, LocalRule, injectivity_at, language, sliding_block
from .towers import RokhlinTower, TowerPair, three_lengths_towers, tower_code, verify_name_formulas

__all__ = [
    "AlphaSpec", "Arc", "CirclePoint", "ConvergentTable", "HypothesisError", "InputError",
    "LabeledPartition", "LanguageModel", "Limits", "LocalRule", "NotCodedError",
    "ResourceCapError", "RokhlinTower", "SturmError", "TowerPair", "VerificationFailure",
    "compare_points", "convergents", "equals_sturmian_refinement", "from_cut_labels",
    "injectivity_at", "interval_I", "join", "language", "locate_k", "orbit_point", "refine",
    "sliding_block", "sort_points", "sturmian_partition", "theorem1_witness", "theorem2_bound",
    "three_lengths_towers", "tower_code", "verify_name_formulas", "verify_theorem2",
]
