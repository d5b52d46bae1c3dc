"""Banzhaf voting-power analysis through switching algebra.

The package models a weighted yes-no voting system as a threshold switching
function and computes each voter's total and normalized Banzhaf power from
the weight of the function's Boolean difference, with exhaustive-enumeration
and subset-sum oracles cross-checking every analysis.  Supporting machinery -
dense truth tables, a sum-of-products algebra with sequential disjointing,
and a characteristic-set calculus for symmetric functions - is exposed as a
library; the ``banzhaf`` command wraps it for the command line.

>>> from banzhaf import VotingSystem, analyze
>>> report = analyze(VotingSystem(12, (4, 4, 4, 2, 2, 1), ("F", "G", "I", "B", "N", "L")))
>>> report.tbp
(5, 5, 5, 3, 3, 0)
"""

from .power import (
    NoDecisiveVoterError,
    ORACLE_AUTO_LIMIT,
    OracleDisagreementError,
    PowerReport,
    StructuralChecks,
    analyze,
    normalize,
    tbp,
    tbp_all,
    tbp_oracle_dp,
    tbp_oracle_enum,
)
from .sop import (
    Cube,
    MAX_IE_CUBES,
    SopExpr,
    SopSyntaxError,
    cube_weight,
    make_disjoint,
    parse_sop,
    real_transform_eval,
    sop_to_tt,
    sop_weight_disjoint,
    sop_weight_ie,
    sop_weight_real,
    tt_to_minterm_sop,
)
from .symmetric import SymFn, parse_sym
from .truthtable import N_MAX, TruthTable
from .voting import SymmetryClasses, VotingSystem, check_scale_invariance

__all__ = [
    "Cube",
    "MAX_IE_CUBES",
    "N_MAX",
    "NoDecisiveVoterError",
    "ORACLE_AUTO_LIMIT",
    "OracleDisagreementError",
    "PowerReport",
    "SopExpr",
    "SopSyntaxError",
    "StructuralChecks",
    "SymFn",
    "SymmetryClasses",
    "TruthTable",
    "VotingSystem",
    "analyze",
    "check_scale_invariance",
    "cube_weight",
    "make_disjoint",
    "normalize",
    "parse_sop",
    "parse_sym",
    "real_transform_eval",
    "sop_to_tt",
    "sop_weight_disjoint",
    "sop_weight_ie",
    "sop_weight_real",
    "tbp",
    "tbp_all",
    "tbp_oracle_dp",
    "tbp_oracle_enum",
    "tt_to_minterm_sop",
]

__version__ = "0.1.0"
