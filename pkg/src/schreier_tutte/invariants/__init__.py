"""Closed forms, special evaluations, brute-force oracles and Ising identities."""
from .closed_forms import ClosedForm, closed_evaluations, closed_form
from .evaluations import (
    EvaluationReport,
    chromatic_polynomial,
    growth_ratio,
    reliability_polynomial,
    special_evaluations,
)
from .ising import IsingCheck, closed_z, ising_from_tutte, ising_identity_check
from .oracles import OracleCounts, ising_oracle, oracle_counts

__all__ = [
    "ClosedForm", "closed_evaluations", "closed_form", "EvaluationReport", "chromatic_polynomial",
    "growth_ratio", "reliability_polynomial", "special_evaluations", "IsingCheck", "closed_z",
    "ising_from_tutte", "ising_identity_check", "OracleCounts", "ising_oracle", "oracle_counts",
]
