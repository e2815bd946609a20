from .cnf import CnfFormula, to_cnf
from .formula import (
    FALSE,
    TRUE,
    And,
    Assignment,
    FalseConst,
    Formula,
    Not,
    Or,
    TrueConst,
    Var,
    conjoin,
    evaluate,
    is_literal,
    simplify,
    substitute,
    substitute_all,
    to_string,
    variables,
    xor,
)
from .oracle import MAX_ENUM_VARS, enumerate_models, equivalent, truth_table
from .parse import parse_formula
from .sat import dpll, is_satisfiable, solve

__all__ = [
    "FALSE", "TRUE", "And", "Assignment", "CnfFormula", "FalseConst", "Formula",
    "MAX_ENUM_VARS", "Not", "Or", "TrueConst", "Var", "conjoin", "dpll",
    "enumerate_models", "equivalent", "evaluate", "is_literal", "is_satisfiable",
    "parse_formula", "simplify", "solve", "substitute", "substitute_all",
    "to_cnf", "to_string", "truth_table", "variables", "xor",
]
