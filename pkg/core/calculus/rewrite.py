"""
Rewriting

Reduction, normalization and equality for every discipline.

Beta-family rules are contracted with a chosen strategy. When the discipline
enables eta, eta and let-eta are applied as contractions after beta
normalization, alternating until neither applies.
"""

import random
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Tuple, Union

from core.calculus.syntax import (
    Const, Discipline, LAbs, LApp, LetPair, RAbs, RApp, Tensor, Term, Var,
    alpha_eq, children, free_vars, substitute, substitute_many,
)
from core.logger import get_logger

logger = get_logger(__name__)

Path = Tuple[int, ...]
TraceFn = Callable[[int, "ReductionRule", Path], None]


class ReductionRule(Enum):
    BETA = "beta"
    RBETA = "rbeta"
    LBETA = "lbeta"
    LET_BETA = "let-beta"
    ETA_CONTRACT = "eta"
    LET_ETA_CONTRACT = "let-eta"


class EqVerdict(Enum):
    EQUAL = "Equal"
    NOT_EQUAL = "NotEqual"
    UNKNOWN = "Unknown"


class StrategyKind(Enum):
    LEFTMOST_OUTERMOST = "leftmost-outermost"
    RIGHTMOST_INNERMOST = "rightmost-innermost"
    RANDOM = "random"


@dataclass(frozen=True)
class Strategy:
    kind: StrategyKind = StrategyKind.LEFTMOST_OUTERMOST
    seed: int = 0

    @classmethod
    def leftmost_outermost(cls) -> "Strategy":
        return cls(StrategyKind.LEFTMOST_OUTERMOST)

    @classmethod
    def rightmost_innermost(cls) -> "Strategy":
        return cls(StrategyKind.RIGHTMOST_INNERMOST)

    @classmethod
    def random(cls, seed: int) -> "Strategy":
        return cls(StrategyKind.RANDOM, seed)

    @classmethod
    def named(cls, name: str, seed: int = 0) -> "Strategy":
        return cls(StrategyKind(name), seed)


@dataclass(frozen=True)
class Normal:
    term: Term
    steps: int


@dataclass(frozen=True)
class FuelExhausted:
    partial: Term
    steps: int


NormalizeOutcome = Union[Normal, FuelExhausted]


# ----------------------------------------------------------------------------
# Redexes
# ----------------------------------------------------------------------------

def beta_rule(t: Term, d: Discipline) -> Optional[ReductionRule]:
    """The beta-family rule for which t is a redex, if any"""
    if isinstance(t, RApp) and isinstance(t.fun, RAbs):
        return ReductionRule.RBETA if d.allow_left_ops else ReductionRule.BETA
    if isinstance(t, LApp) and isinstance(t.fun, LAbs):
        return ReductionRule.LBETA
    if isinstance(t, LetPair) and isinstance(t.scrutinee, Tensor):
        return ReductionRule.LET_BETA
    return None


def eta_rule(t: Term) -> Optional[ReductionRule]:
    """The eta contraction applicable at the root of t, if any"""
    if isinstance(t, RAbs) and isinstance(t.body, RApp):
        arg = t.body.arg
        if isinstance(arg, Var) and arg.name == t.binder and t.binder not in free_vars(t.body.fun):
            return ReductionRule.ETA_CONTRACT
    if isinstance(t, LAbs) and isinstance(t.body, LApp):
        arg = t.body.arg
        if isinstance(arg, Var) and arg.name == t.binder and t.binder not in free_vars(t.body.fun):
            return ReductionRule.ETA_CONTRACT
    if isinstance(t, LetPair) and isinstance(t.body, Tensor):
        left, right = t.body.left, t.body.right
        if (isinstance(left, Var) and isinstance(right, Var)
                and left.name == t.x and right.name == t.y and t.x != t.y):
            return ReductionRule.LET_ETA_CONTRACT
    return None


def contract(t: Term, rule: ReductionRule) -> Term:
    """Contract the redex at the root of t"""
    if rule in (ReductionRule.BETA, ReductionRule.RBETA):
        return substitute(t.fun.body, t.fun.binder, t.arg)
    if rule is ReductionRule.LBETA:
        return substitute(t.fun.body, t.fun.binder, t.arg)
    if rule is ReductionRule.LET_BETA:
        pair = t.scrutinee
        return substitute_many(t.body, {t.x: pair.left, t.y: pair.right})
    if rule is ReductionRule.ETA_CONTRACT:
        return t.body.fun
    if rule is ReductionRule.LET_ETA_CONTRACT:
        return t.scrutinee
    raise ValueError(f"Unknown rule {rule}")


def redexes(t: Term, d: Discipline, eta: bool = False) -> List[Tuple[Path, ReductionRule]]:
    """All redex positions in pre-order, children in textual order"""
    found: List[Tuple[Path, ReductionRule]] = []
    _collect(t, d, eta, (), found)
    return found


def _collect(t: Term, d: Discipline, eta: bool, path: Path, out: List[Tuple[Path, ReductionRule]]):
    rule = eta_rule(t) if eta else beta_rule(t, d)
    if rule is not None:
        out.append((path, rule))
    for i, child in enumerate(children(t)):
        _collect(child, d, eta, path + (i,), out)


def subterm_at(t: Term, path: Path) -> Term:
    for i in path:
        t = children(t)[i]
    return t


def replace_at(t: Term, path: Path, new: Term) -> Term:
    if not path:
        return new
    head, rest = path[0], path[1:]
    kids = children(t)
    kids[head] = replace_at(kids[head], rest, new)
    return _rebuild(t, kids)


def _rebuild(t: Term, kids: List[Term]) -> Term:
    if isinstance(t, RApp):
        return RApp(kids[0], kids[1])
    if isinstance(t, LApp):
        return LApp(kids[0], kids[1])
    if isinstance(t, RAbs):
        return RAbs(t.binder, kids[0])
    if isinstance(t, LAbs):
        return LAbs(t.binder, kids[0])
    if isinstance(t, Tensor):
        return Tensor(kids[0], kids[1])
    if isinstance(t, LetPair):
        return LetPair(t.x, t.y, kids[0], kids[1])
    return t


def _choose(found: List[Tuple[Path, ReductionRule]], strategy: Strategy,
            rng: Optional[random.Random]) -> Tuple[Path, ReductionRule]:
    if strategy.kind is StrategyKind.LEFTMOST_OUTERMOST:
        return found[0]
    if strategy.kind is StrategyKind.RIGHTMOST_INNERMOST:
        paths = [p for p, _ in found]
        innermost = [
            (p, r) for p, r in found
            if not any(q != p and q[:len(p)] == p for q in paths)
        ]
        return innermost[-1]
    rng = rng or random.Random(strategy.seed)
    return found[rng.randrange(len(found))]


def _leftmost_beta(t: Term, d: Discipline) -> Optional[Tuple[Term, Path, ReductionRule]]:
    """Contract the leftmost-outermost beta redex without listing all redexes"""
    rule = beta_rule(t, d)
    if rule is not None:
        return contract(t, rule), (), rule
    kids = children(t)
    for i, child in enumerate(kids):
        hit = _leftmost_beta(child, d)
        if hit is not None:
            new_child, path, rule = hit
            kids[i] = new_child
            return _rebuild(t, kids), (i,) + path, rule
    return None


def _step_with(t: Term, d: Discipline, strategy: Strategy, rng: Optional[random.Random],
               eta: bool = False) -> Optional[Tuple[Term, Path, ReductionRule]]:
    if not eta and strategy.kind is StrategyKind.LEFTMOST_OUTERMOST:
        return _leftmost_beta(t, d)
    found = redexes(t, d, eta=eta)
    if not found:
        return None
    path, rule = _choose(found, strategy, rng)
    return replace_at(t, path, contract(subterm_at(t, path), rule)), path, rule


# ----------------------------------------------------------------------------
# Public operations
# ----------------------------------------------------------------------------

def step(t: Term, d: Discipline, strategy: Strategy = Strategy()) -> Optional[Term]:
    """
    Contract one beta-family redex chosen by the strategy

    Args:
        t: Term valid under d
        d: Discipline (selects the enabled rules)
        strategy: Redex selection strategy

    Returns:
        Reduct, or None when t is beta-normal
    """
    hit = _step_with(t, d, strategy, None)
    return hit[0] if hit else None


def normalize(t: Term, d: Discipline, fuel: int = 1_000_000,
              strategy: Strategy = Strategy(), trace: Optional[TraceFn] = None) -> NormalizeOutcome:
    """
    Normalize a term within a step budget

    Beta-family steps run to a normal form; when eta is enabled, eta
    contractions follow and the two phases alternate until stable.

    Args:
        t: Term valid under d
        d: Discipline
        fuel: Maximum number of contraction steps
        strategy: Redex selection strategy for beta steps
        trace: Optional callback receiving (step index, rule, path)

    Returns:
        Normal(term, steps) or FuelExhausted(partial, steps)
    """
    rng = random.Random(strategy.seed) if strategy.kind is StrategyKind.RANDOM else None
    steps = 0
    current = t
    while True:
        progressed = False
        for eta_phase in (False, True):
            if eta_phase and not d.eta:
                continue
            while True:
                hit = _step_with(current, d, strategy, rng, eta=eta_phase)
                if hit is None:
                    break
                if steps >= fuel:
                    logger.debug(f"Fuel exhausted after {steps} steps")
                    return FuelExhausted(current, steps)
                current, path, rule = hit
                steps += 1
                progressed = progressed or eta_phase
                if trace is not None:
                    trace(steps, rule, path)
        if not progressed:
            return Normal(current, steps)


def equal(t1: Term, t2: Term, d: Discipline, fuel: int = 1_000_000) -> EqVerdict:
    """
    Decide equality by comparing normal forms up to alpha

    Complete for the strongly normalizing disciplines; for the ordinary
    calculus the verdict is Unknown when either side runs out of fuel.
    """
    n1 = normalize(t1, d, fuel)
    n2 = normalize(t2, d, fuel)
    if isinstance(n1, FuelExhausted) or isinstance(n2, FuelExhausted):
        return EqVerdict.UNKNOWN
    return EqVerdict.EQUAL if alpha_eq(n1.term, n2.term) else EqVerdict.NOT_EQUAL


def normal_form(t: Term, d: Discipline, fuel: int = 1_000_000) -> Optional[Term]:
    """Normal form, or None on fuel exhaustion"""
    outcome = normalize(t, d, fuel)
    return outcome.term if isinstance(outcome, Normal) else None


def is_normal(t: Term, d: Discipline) -> bool:
    if _leftmost_beta(t, d) is not None:
        return False
    return not (d.eta and redexes(t, d, eta=True))
