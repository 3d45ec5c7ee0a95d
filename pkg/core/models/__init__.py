"""Models - term models, tree models and finite magmas"""

from .trees import (
    OrderedGroup, IntegerGroup, FreeGroup, make_group, Leaf, RImp, LImp, Tens, Tree,
    value, leaves, format_tree, format_set, all_trees, parse_trees,
)
from .tree_sets import TreeUniverse, TreeSet, FiniteSet, PatternSet, intersects, finite, named
from .tree_model import DEFAULT_BOUND, TreeVariant, TreeModel, tree_model, te_model
from .term_model import LP_OPEN_QUESTION, TermModel, model_name, term_model
from .magma import FiniteMagma, finite_magma, load_magma
from .te_adjoint import AdjointPair, te_adjoint_pair, check_te_adjoint, check_te_comonad
from .factory import KINDS, build_structure, default_mode

__all__ = [
    'OrderedGroup', 'IntegerGroup', 'FreeGroup', 'make_group', 'Leaf', 'RImp', 'LImp', 'Tens',
    'Tree', 'value', 'leaves', 'format_tree', 'format_set', 'all_trees', 'parse_trees',
    'TreeUniverse', 'TreeSet', 'FiniteSet', 'PatternSet', 'intersects', 'finite', 'named',
    'DEFAULT_BOUND', 'TreeVariant', 'TreeModel', 'tree_model', 'te_model',
    'LP_OPEN_QUESTION', 'TermModel', 'model_name', 'term_model',
    'FiniteMagma', 'finite_magma', 'load_magma',
    'AdjointPair', 'te_adjoint_pair', 'check_te_adjoint', 'check_te_comonad',
    'KINDS', 'build_structure', 'default_mode',
]
