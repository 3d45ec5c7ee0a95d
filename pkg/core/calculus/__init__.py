"""Calculus - terms, disciplines, parsing and rewriting"""

from .syntax import (
    Var, Const, RApp, LApp, RAbs, LAbs, Tensor, LetPair, Term,
    Discipline, Violation, ValidationReport,
    app, lam, children, validate, free_var_sequence, free_vars, is_closed,
    constants_of, term_size, fresh_name, substitute, substitute_many,
    alpha_key, alpha_eq, pretty,
)
from .grammar import parse, parse_valid
from .rewrite import (
    ReductionRule, EqVerdict, Strategy, StrategyKind, Normal, FuelExhausted,
    NormalizeOutcome, step, normalize, equal, normal_form, is_normal,
)
from .generators import (
    OneHoleContext, random_term, random_closed_normal_planar, random_context,
    random_value, random_evaluation_context,
)

__all__ = [
    'Var', 'Const', 'RApp', 'LApp', 'RAbs', 'LAbs', 'Tensor', 'LetPair', 'Term',
    'Discipline', 'Violation', 'ValidationReport',
    'app', 'lam', 'children', 'validate', 'free_var_sequence', 'free_vars',
    'is_closed', 'constants_of', 'term_size', 'fresh_name', 'substitute',
    'substitute_many', 'alpha_key', 'alpha_eq', 'pretty',
    'parse', 'parse_valid',
    'ReductionRule', 'EqVerdict', 'Strategy', 'StrategyKind', 'Normal',
    'FuelExhausted', 'NormalizeOutcome', 'step', 'normalize', 'equal',
    'normal_form', 'is_normal',
    'OneHoleContext', 'random_term', 'random_closed_normal_planar',
    'random_context', 'random_value', 'random_evaluation_context',
]
