"""Compile - combinator terms, bracket abstraction and translations"""

from .combterm import (
    Basis, Sym, UnaryOp, CApp, CLApp, Hole, CVar, CombTerm, SYMBOLS, UNARY_OPS,
    capp, cvars, is_ground, symbols_of, csubstitute, comb_size, render,
    parse_comb, parse_equation, interpret,
)
from .representatives import REPRESENTATIVE_TEXT, UNARY_CONSTRUCTORS, representative, expand
from .abstraction import (
    abstract_sk, abstract_bci, abstract_planar, abstract_right, abstract_left,
    abstract, abstract_many,
)
from .tensor import compile_tensor
from .derived import (
    derive_c_from_t, sk_to_bci, bci_dot, bci_to_bibdi, bibdi_to_biilp, bibdi_dot,
    bidot_to_biidotcirc, bidot_circ,
)
from .cps import cps_translate, computational_eq
from .left_inverse import left_inverse
from .oracle import (
    BASIS_DISCIPLINE, oracle_discipline, fresh_arguments, abstraction_sound, tensor_round_trip,
    left_inverse_sound, random_polynomial,
)

__all__ = [
    'Basis', 'Sym', 'UnaryOp', 'CApp', 'CLApp', 'Hole', 'CVar', 'CombTerm',
    'SYMBOLS', 'UNARY_OPS', 'capp', 'cvars', 'is_ground', 'symbols_of',
    'csubstitute', 'comb_size', 'render', 'parse_comb', 'parse_equation', 'interpret',
    'REPRESENTATIVE_TEXT', 'UNARY_CONSTRUCTORS', 'representative', 'expand',
    'abstract_sk', 'abstract_bci', 'abstract_planar', 'abstract_right',
    'abstract_left', 'abstract', 'abstract_many',
    'compile_tensor',
    'derive_c_from_t', 'sk_to_bci', 'bci_dot', 'bci_to_bibdi', 'bibdi_to_biilp',
    'bibdi_dot', 'bidot_to_biidotcirc', 'bidot_circ',
    'cps_translate', 'computational_eq',
    'left_inverse',
    'BASIS_DISCIPLINE', 'oracle_discipline', 'fresh_arguments', 'abstraction_sound',
    'tensor_round_trip', 'left_inverse_sound', 'random_polynomial',
]
