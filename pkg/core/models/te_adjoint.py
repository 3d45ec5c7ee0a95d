"""
The adjoint pair between T and T_e

gamma: T -> T_e sends M to {t <- t | t in M}; delta: T_e -> T is the
inclusion. Both come with explicit realizer sets, as do the unit and counit
of the adjunction and the comultiplication of the induced comonad on T.
"""

from dataclasses import dataclass
from typing import Optional

from core.assemblies.morphisms import (
    MorphismReport, MorphismSpec, check_adjoint, check_comonadic, compose,
)
from core.logger import get_logger
from core.models.tree_model import TreeModel, TreeVariant, te_model, tree_model
from core.models.tree_sets import FiniteSet, GammaSet, TreeSet, named
from core.models.trees import OrderedGroup

logger = get_logger(__name__)


@dataclass
class AdjointPair:
    T: TreeModel
    Te: TreeModel
    delta: MorphismSpec
    gamma: MorphismSpec
    counit: TreeSet     # in T, realizes delta.gamma <= id
    unit: TreeSet       # in T_e, realizes id <= gamma.delta
    comult: TreeSet     # in T, comultiplication of delta.gamma


def te_adjoint_pair(group: Optional[OrderedGroup] = None, bound: int = 6) -> AdjointPair:
    """
    Build T, T_e and the morphisms between them

    Args:
        group: Ordered group (integers by default)
        bound: Leaf bound of both models

    Returns:
        AdjointPair with every realizer installed
    """
    T = tree_model(group, TreeVariant.T, bound)
    Te = te_model(T.group, bound)

    def gamma_rel(a: TreeSet):
        return [GammaSet(Te.u, a)]

    def delta_rel(b: TreeSet):
        return [FiniteSet(T.u, b.enumerate(T.bound))]

    gamma = MorphismSpec("gamma", T, Te, gamma_rel, named(Te.u, "r_gamma"))
    delta = MorphismSpec("delta", Te, T, delta_rel, T.distinguished("I"))
    pair = AdjointPair(T, Te, delta, gamma,
                       counit=named(T.u, "counit", "carrier"),
                       unit=named(Te.u, "unit", "unit"),
                       comult=named(T.u, "comult"))
    logger.debug(f"Adjoint pair between {T.name} and {Te.name} at bound {bound}")
    return pair


def check_te_adjoint(pair: AdjointPair, samples: int = 100, seed: int = 0) -> MorphismReport:
    """Run the four adjunction conditions on sampled finite sets"""
    samples_t = pair.T.sample(seed, samples)
    samples_te = pair.Te.sample(seed + 1, samples)
    return check_adjoint(pair.delta, pair.gamma, pair.counit, pair.unit, samples_t, samples_te,
                         pairs=samples)


def check_te_comonad(pair: AdjointPair, samples: int = 100, seed: int = 0) -> MorphismReport:
    """The composite delta.gamma on T is comonadic"""
    endo = compose(pair.delta, pair.gamma)
    return check_comonadic(endo, pair.counit, pair.comult, pair.T.sample(seed, samples))
