"""Connectives on the unit interval: negations, overlaps, implications.

The package builds and audits the algebra of unit-interval connectives:
fuzzy negations with a numeric classifier, overlap/grouping/general-overlap
functions with a grid axiom engine, seven implication constructions with
property checks and counterexample search, aggregation of operator
families, and a CLI that exposes all of it behind a small expression
grammar. Every verdict is a grid verdict at a configured resolution and
tolerance; nothing claims a proof.
"""

from .aggregation import (
    AGGREGATION_NAMES,
    OperatorFamily,
    aggregate,
    aggregate_go,
    check_commutes,
    make_aggregation,
)
from .conjunctors import (
    CATALOG_NAMES,
    AxiomCheck,
    AxiomReport,
    FusionFunction,
    IdempotencyResult,
    catalog,
    check_associativity,
    check_axioms,
    check_idempotent,
    continuity_heuristic,
    find_neutral,
    grouping_from,
    grouping_max,
    grouping_probsum,
    idempotent_go,
    overlap_from,
    piecewise_neutral_go,
    truncate_overlap,
)
from .implications import (
    CrispFit,
    Implication,
    check_implication_axioms,
    classify_crisp,
    make_crisp_family,
    make_d,
    make_gn,
    make_gon,
    make_ql,
    make_residual,
    make_tn,
    natural_negation,
    recover_go,
)
from .negations import (
    Negation,
    NegationClassification,
    classify,
    dual,
    inverse_negation,
    make_bottom,
    make_crisp,
    make_power_strict,
    make_standard,
    make_top,
)
from .numerics import (
    DEFAULT_CONFIG,
    CheckConfig,
    ConfigError,
    OverlapkitError,
    PreconditionError,
    UnitRangeError,
    UnitValue,
    bisect_sup,
    invert_strict,
    load_config,
    sample_grid,
)
from .properties import (
    Comparison,
    PropertyReport,
    PropertyWitness,
    check_contraposition,
    check_ep,
    check_unary_property,
    compare,
    pair_points,
    range_is_proper,
    triple_points,
)

__version__ = "0.1.0"

__all__ = [
    "AGGREGATION_NAMES",
    "AxiomCheck",
    "AxiomReport",
    "CATALOG_NAMES",
    "CheckConfig",
    "Comparison",
    "ConfigError",
    "CrispFit",
    "DEFAULT_CONFIG",
    "FusionFunction",
    "IdempotencyResult",
    "Implication",
    "Negation",
    "NegationClassification",
    "OperatorFamily",
    "OverlapkitError",
    "PreconditionError",
    "PropertyReport",
    "PropertyWitness",
    "UnitRangeError",
    "UnitValue",
    "aggregate",
    "aggregate_go",
    "bisect_sup",
    "catalog",
    "check_associativity",
    "check_axioms",
    "check_commutes",
    "check_contraposition",
    "check_ep",
    "check_idempotent",
    "check_implication_axioms",
    "check_unary_property",
    "classify",
    "classify_crisp",
    "compare",
    "continuity_heuristic",
    "dual",
    "find_neutral",
    "grouping_from",
    "grouping_max",
    "grouping_probsum",
    "idempotent_go",
    "invert_strict",
    "inverse_negation",
    "load_config",
    "make_aggregation",
    "make_bottom",
    "make_crisp",
    "make_crisp_family",
    "make_d",
    "make_gn",
    "make_gon",
    "make_power_strict",
    "make_ql",
    "make_residual",
    "make_standard",
    "make_tn",
    "make_top",
    "natural_negation",
    "overlap_from",
    "pair_points",
    "piecewise_neutral_go",
    "range_is_proper",
    "recover_go",
    "sample_grid",
    "triple_points",
    "truncate_overlap",
]
