"""Exact-arithmetic search over staircase lifts of space-curve invariants.

The package models plane-section staircases of space curves (connected
invariant sequences), their three-variable monomial-ideal lifts, sporadic-zero
budgets, and the degree-balance inequality that together bound the degree of
the configurations that can occur.  Everything is exact: integers throughout,
rationals where a formula divides.
"""

from ginsurvey.staircase import (
    Column,
    InvariantSequence,
    acm_class,
    enumerate_sequences,
    staircase_contains,
    sum2,
    sum3,
)
from ginsurvey.lift import (
    HeightFunction,
    Monomial,
    MonomialIdeal,
    NotACurveIdeal,
    heights_of,
    hilbert_count,
    is_borel_fixed,
    minimal_generators,
    saturate,
    zero_stats,
)
from ginsurvey.budget import Priors, UnsupportedS, admissible, max_sporadic
from ginsurvey.inequality import (
    elimination_threshold,
    evaluate,
    gamma_lower_gate,
    neg_statistic,
    plane_curve_lemma,
    required_penalty,
)
from ginsurvey.optimizer import (
    Infeasible,
    InsufficientBudget,
    OptimizationResult,
    RuleSet,
    evaluate_schedule,
    heuristic_schedule,
    is_admissible,
    maximize_penalty,
)
from ginsurvey.survey import (
    SurveyRecord,
    SurveyReport,
    classify,
    emit_report,
    run_survey,
    verify_witness,
)

__all__ = [
    "Column",
    "HeightFunction",
    "Infeasible",
    "InsufficientBudget",
    "InvariantSequence",
    "Monomial",
    "MonomialIdeal",
    "NotACurveIdeal",
    "OptimizationResult",
    "Priors",
    "RuleSet",
    "SurveyRecord",
    "SurveyReport",
    "UnsupportedS",
    "acm_class",
    "admissible",
    "classify",
    "elimination_threshold",
    "emit_report",
    "enumerate_sequences",
    "evaluate",
    "evaluate_schedule",
    "gamma_lower_gate",
    "heights_of",
    "heuristic_schedule",
    "hilbert_count",
    "is_admissible",
    "is_borel_fixed",
    "max_sporadic",
    "maximize_penalty",
    "minimal_generators",
    "neg_statistic",
    "plane_curve_lemma",
    "required_penalty",
    "run_survey",
    "saturate",
    "staircase_contains",
    "sum2",
    "sum3",
    "verify_witness",
    "zero_stats",
]

__version__ = "0.1.0"
