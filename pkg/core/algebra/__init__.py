"""Algebra - applicative structures, axioms and classification"""

from .structure import ApplicativeStructure, DerivedView, bi_view
from .axioms import (
    Axiom, AxiomReport, AxiomVerdict, CheckMode, ModeKind, DEFAULT_AXIOMS_FILE,
    load_axioms, check_axiom,
)
from .classify import (
    CLASS_CHAIN, CLASS_AXIOMS, CANDIDATE_NOTE, ClassResult, Classification, classify,
)

__all__ = [
    'ApplicativeStructure', 'DerivedView', 'bi_view',
    'Axiom', 'AxiomReport', 'AxiomVerdict', 'CheckMode', 'ModeKind',
    'DEFAULT_AXIOMS_FILE', 'load_axioms', 'check_axiom',
    'CLASS_CHAIN', 'CLASS_AXIOMS', 'CANDIDATE_NOTE', 'ClassResult', 'Classification',
    'classify',
]
