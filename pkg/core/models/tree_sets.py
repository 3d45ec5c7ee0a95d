"""
Lazy Tree Sets

Elements of the tree models: possibly infinite sets of trees given by a
finite description. Every node kind decides membership exactly and
enumerates its members up to a leaf bound. Combinator sets are schemas over
tree shapes, so membership is pattern matching plus a group condition.

Application follows the comprehension

    M N      = {t2 | exists t1 in N, (t2 <- t1) in M}
    N <@ M   = {t2 | exists t1 in N, (t1 -o t2) in M}

and is computed forwards from a finite argument whenever possible.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, FrozenSet, Iterator, Optional, Set, Tuple, Union

from core.models.trees import (
    LImp, Leaf, OrderedGroup, RImp, Tens, Tree, all_trees, format_set, leaves, value,
)


# ----------------------------------------------------------------------------
# Universe
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class TreeUniverse:
    """
    Group, leaf alphabet, tree constructors and enumeration bound of a model

    ``exact`` selects the carrier {t | |t| = e} instead of {t | e <= |t|}.
    """
    group: OrderedGroup = field(compare=False)
    alphabet: Tuple[Any, ...]
    constructors: Tuple[str, ...] = ("rimp",)
    bound: int = 7
    exact: bool = False

    @property
    def e(self) -> Leaf:
        return Leaf(self.group.identity)

    def in_carrier(self, t: Tree) -> bool:
        v = value(t, self.group)
        if self.exact:
            return v == self.group.identity
        return self.group.leq(self.group.identity, v)

    def trees(self, bound: int) -> Tuple[Tree, ...]:
        """All trees (any value) with at most ``bound`` leaves"""
        if bound < 1:
            return ()
        return all_trees(bound, self.alphabet, self.constructors)

    def carrier_trees(self, bound: int) -> Tuple[Tree, ...]:
        return _carrier_trees(self, bound)


@lru_cache(maxsize=64)
def _carrier_trees(u: TreeUniverse, bound: int) -> Tuple[Tree, ...]:
    return tuple(t for t in u.trees(bound) if u.in_carrier(t))


Members = FrozenSet[Tree]
EMPTY: Members = frozenset()


# ----------------------------------------------------------------------------
# Patterns
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class PVar:
    name: str


@dataclass(frozen=True)
class PUnit:
    """The identity leaf e"""


@dataclass(frozen=True)
class PR:
    res: "Pattern"
    arg: "Pattern"


@dataclass(frozen=True)
class PL:
    arg: "Pattern"
    res: "Pattern"


@dataclass(frozen=True)
class PT:
    left: "Pattern"
    right: "Pattern"


Pattern = Union[PVar, PUnit, PR, PL, PT]
Env = Dict[str, Tree]


def pattern_vars(p: Pattern) -> Set[str]:
    if isinstance(p, PVar):
        return {p.name}
    if isinstance(p, PUnit):
        return set()
    a, b = _parts(p)
    return pattern_vars(a) | pattern_vars(b)


def _parts(p) -> Tuple[Any, Any]:
    if isinstance(p, (PR, RImp)):
        return p.res, p.arg
    if isinstance(p, (PL, LImp)):
        return p.arg, p.res
    return p.left, p.right


_SHAPES = {PR: RImp, PL: LImp, PT: Tens}


def match(p: Pattern, t: Tree, env: Env, e: Leaf) -> Optional[Env]:
    """Extend ``env`` so that p instantiates to t, or None"""
    if isinstance(p, PVar):
        bound = env.get(p.name)
        if bound is None:
            return {**env, p.name: t}
        return env if bound == t else None
    if isinstance(p, PUnit):
        return env if t == e else None
    if not isinstance(t, _SHAPES[type(p)]):
        return None
    pa, pb = _parts(p)
    ta, tb = _parts(t)
    env = match(pa, ta, env, e)
    return None if env is None else match(pb, tb, env, e)


def instantiate(p: Pattern, env: Env, e: Leaf) -> Tree:
    if isinstance(p, PVar):
        return env[p.name]
    if isinstance(p, PUnit):
        return e
    a, b = _parts(p)
    if isinstance(p, PR):
        return RImp(instantiate(a, env, e), instantiate(b, env, e))
    if isinstance(p, PL):
        return LImp(instantiate(a, env, e), instantiate(b, env, e))
    return Tens(instantiate(a, env, e), instantiate(b, env, e))


def _occurrences(p: Pattern, counts: Dict[str, int]) -> int:
    """Count variable occurrences into ``counts``; return the number of fixed leaves"""
    if isinstance(p, PVar):
        counts[p.name] = counts.get(p.name, 0) + 1
        return 0
    if isinstance(p, PUnit):
        return 1
    a, b = _parts(p)
    return _occurrences(a, counts) + _occurrences(b, counts)


def instances(p: Pattern, env: Env, budget: int, u: TreeUniverse) -> Iterator[Tree]:
    """All instances of p extending env with at most ``budget`` leaves"""
    counts: Dict[str, int] = {}
    fixed = _occurrences(p, counts)
    for name, n in list(counts.items()):
        if name in env:
            fixed += n * leaves(env[name])
            del counts[name]
    free = sorted(counts)

    def go(i: int, current: Env, left: int) -> Iterator[Tree]:
        if i == len(free):
            yield instantiate(p, current, u.e)
            return
        name = free[i]
        for t in u.trees(left // counts[name]):
            yield from go(i + 1, {**current, name: t}, left - counts[name] * leaves(t))

    if budget - fixed >= 0:
        yield from go(0, env, budget - fixed)


def r(res: Pattern, arg: Pattern) -> PR:
    return PR(res, arg)


def lo(arg: Pattern, res: Pattern) -> PL:
    return PL(arg, res)


T1, T2, T3 = PVar("t1"), PVar("t2"), PVar("t3")
E = PUnit()

PATTERNS: Dict[str, Pattern] = {
    "B": r(r(r(T3, T1), r(T2, T1)), r(T3, T2)),
    "C": r(r(r(T3, T2), T1), r(r(T3, T1), T2)),
    "I": r(T1, T1),
    "Ix": r(r(T1, r(T2, T2)), T1),
    # T: the tensor t1 * t2 is encoded as t1 <- (e <- t2)
    "P": r(r(r(T1, r(E, T2)), T2), T1),
    "L": r(r(T3, r(T1, r(E, T2))), r(r(T3, T2), T1)),
    # T': the tensor constructor
    "P_tensor": r(r(PT(T1, T2), T2), T1),
    "L_tensor": r(r(T3, PT(T1, T2)), r(r(T3, T2), T1)),
    # T'': the two-sided sets
    "Bl": lo(lo(T2, T3), lo(lo(T1, T2), lo(T1, T3))),
    "Dr": r(r(lo(T1, T2), T3), lo(T1, r(T2, T3))),
    "Dl": lo(r(lo(T1, T2), T3), lo(T1, r(T2, T3))),
    "Il": lo(T1, T1),
    # adjoint pair between T and T_e
    "r_gamma": r(r(r(T2, T2), r(T1, T1)), r(r(T2, T1), r(T2, T1))),
    "counit": r(T1, r(T1, T1)),
    "unit": r(r(T1, T1), T1),
    "comult": r(r(r(T1, T1), r(T1, T1)), r(T1, T1)),
}


# ----------------------------------------------------------------------------
# Sets
# ----------------------------------------------------------------------------

class TreeSet(ABC):
    """A set of trees in the carrier of a universe"""

    u: TreeUniverse

    @property
    @abstractmethod
    def label(self) -> str:
        pass

    @abstractmethod
    def _contains(self, t: Tree) -> bool:
        pass

    def member(self, t: Tree) -> bool:
        return self.u.in_carrier(t) and self._contains(t)

    def finite_members(self) -> Optional[Members]:
        """All members when the set is known to be finite, else None"""
        return None

    def residual(self, x: Tree) -> "TreeSet":
        """{t1 | (x <- t1) in self}"""
        return Residual(self.u, self, x, left=False)

    def lresidual(self, x: Tree) -> "TreeSet":
        """{t1 | (t1 -o x) in self}"""
        return Residual(self.u, self, x, left=True)

    def _finite_residual(self, x: Tree, left: bool) -> Optional[Members]:
        fm = self.finite_members()
        if fm is None:
            return None
        if left:
            return frozenset(t.arg for t in fm if isinstance(t, LImp) and t.res == x)
        return frozenset(t.arg for t in fm if isinstance(t, RImp) and t.res == x)

    def image(self, t1: Tree, bound: int) -> Members:
        """{t2 | (t2 <- t1) in self, t2 has at most ``bound`` leaves}"""
        fm = self.finite_members()
        if fm is not None:
            return frozenset(t.res for t in fm
                             if isinstance(t, RImp) and t.arg == t1 and leaves(t.res) <= bound)
        return frozenset(t2 for t2 in self.u.carrier_trees(bound) if self.member(RImp(t2, t1)))

    def limage(self, t1: Tree, bound: int) -> Members:
        """{t2 | (t1 -o t2) in self, t2 has at most ``bound`` leaves}"""
        fm = self.finite_members()
        if fm is not None:
            return frozenset(t.res for t in fm
                             if isinstance(t, LImp) and t.arg == t1 and leaves(t.res) <= bound)
        return frozenset(t2 for t2 in self.u.carrier_trees(bound) if self.member(LImp(t1, t2)))

    def enumerate(self, bound: int) -> Members:
        """Exactly the members with at most ``bound`` leaves"""
        fm = self.finite_members()
        if fm is not None:
            return frozenset(t for t in fm if leaves(t) <= bound)
        return frozenset(t for t in self.u.carrier_trees(bound) if self._contains(t))

    def __str__(self):
        return self.label


def intersects(candidates: TreeSet, other: TreeSet, bound: int) -> bool:
    """
    Whether two sets meet

    Exact when either side is finite; otherwise decided on members of
    ``other`` up to the bound.
    """
    fm = candidates.finite_members()
    if fm is not None:
        return any(other.member(t) for t in fm)
    fo = other.finite_members()
    if fo is not None:
        return any(candidates.member(t) for t in fo)
    return any(candidates.member(t) for t in other.enumerate(bound))


@dataclass(frozen=True)
class FiniteSet(TreeSet):
    u: TreeUniverse
    trees: Members

    @property
    def label(self) -> str:
        return format_set(self.trees, self.u.group)

    def _contains(self, t):
        return t in self.trees

    def finite_members(self):
        return self.trees


@dataclass(frozen=True)
class PatternSet(TreeSet):
    """
    All instances of a tree schema

    ``condition`` restricts the bound variables: ``carrier`` asks each one to
    lie in the carrier, ``unit`` asks each one to have value e.
    """
    u: TreeUniverse
    name: str
    pattern: Pattern
    condition: str = ""

    @property
    def label(self) -> str:
        return self.name

    def _admits(self, env: Env) -> bool:
        G = self.u.group
        if self.condition == "unit":
            return all(value(t, G) == G.identity for t in env.values())
        if self.condition == "carrier":
            return all(G.leq(G.identity, value(t, G)) for t in env.values())
        return True

    def _contains(self, t):
        env = match(self.pattern, t, {}, self.u.e)
        return env is not None and self._admits(env)

    def _finite_residual(self, x, left):
        p = self.pattern
        if not isinstance(p, PL if left else PR):
            return EMPTY
        env = match(p.res, x, {}, self.u.e)
        if env is None:
            return EMPTY
        if not pattern_vars(p.arg) <= set(env):
            return None
        if not self._admits(env):
            return EMPTY
        return frozenset([instantiate(p.arg, env, self.u.e)])

    def _forward(self, t1: Tree, bound: int, left: bool) -> Members:
        p = self.pattern
        if not isinstance(p, PL if left else PR):
            return EMPTY
        env = match(p.arg, t1, {}, self.u.e)
        if env is None:
            return EMPTY
        shape = LImp if left else RImp
        out = set()
        for t2 in instances(p.res, env, bound, self.u):
            if self.member(shape(t1, t2) if left else shape(t2, t1)):
                out.add(t2)
        return frozenset(out)

    def image(self, t1, bound):
        return self._forward(t1, bound, left=False)

    def limage(self, t1, bound):
        return self._forward(t1, bound, left=True)


@dataclass(frozen=True)
class DotSet(TreeSet):
    """{t2 <- (t2 <- t1) | t1 in inner}"""
    u: TreeUniverse
    inner: TreeSet

    @property
    def label(self) -> str:
        return f"dot({self.inner.label})"

    def _contains(self, t):
        return (isinstance(t, RImp) and isinstance(t.arg, RImp) and t.arg.res == t.res
                and self.inner.member(t.arg.arg))

    def _finite_residual(self, x, left):
        if left:
            return EMPTY
        fm = self.inner.finite_members()
        return None if fm is None else frozenset(RImp(x, t1) for t1 in fm)

    def image(self, t1, bound):
        if isinstance(t1, RImp) and leaves(t1.res) <= bound and self.inner.member(t1.arg):
            return frozenset([t1.res])
        return EMPTY

    def limage(self, t1, bound):
        return EMPTY


@dataclass(frozen=True)
class GammaSet(TreeSet):
    """{t <- t | t in inner}"""
    u: TreeUniverse
    inner: TreeSet

    @property
    def label(self) -> str:
        return f"gamma({self.inner.label})"

    def _contains(self, t):
        return isinstance(t, RImp) and t.res == t.arg and self.inner.member(t.arg)

    def finite_members(self):
        fm = self.inner.finite_members()
        return None if fm is None else frozenset(RImp(t, t) for t in fm)

    def enumerate(self, bound):
        fm = self.finite_members()
        if fm is not None:
            return frozenset(t for t in fm if leaves(t) <= bound)
        return frozenset(RImp(t, t) for t in self.inner.enumerate(bound // 2))


@dataclass(frozen=True)
class DagSet(TreeSet):
    """
    Turn implications around

    ``right``: {t2 <- t1 | (t1 -o t2) in inner}; otherwise
    {t1 -o t2 | (t2 <- t1) in inner}.
    """
    u: TreeUniverse
    inner: TreeSet
    right: bool = True

    @property
    def label(self) -> str:
        return f"{'dagr' if self.right else 'dagl'}({self.inner.label})"

    def _contains(self, t):
        if self.right:
            return isinstance(t, RImp) and self.inner.member(LImp(t.arg, t.res))
        return isinstance(t, LImp) and self.inner.member(RImp(t.res, t.arg))

    def finite_members(self):
        fm = self.inner.finite_members()
        if fm is None:
            return None
        if self.right:
            return frozenset(RImp(t.res, t.arg) for t in fm if isinstance(t, LImp))
        return frozenset(LImp(t.arg, t.res) for t in fm if isinstance(t, RImp))

    def _finite_residual(self, x, left):
        if left == self.right:
            return EMPTY
        return self.inner._finite_residual(x, not left)

    def image(self, t1, bound):
        return self.inner.limage(t1, bound) if self.right else EMPTY

    def limage(self, t1, bound):
        return EMPTY if self.right else self.inner.image(t1, bound)


@dataclass(frozen=True)
class Residual(TreeSet):
    """{t1 | (x <- t1) in base}, or {t1 | (t1 -o x) in base} when ``left``"""
    u: TreeUniverse
    base: TreeSet
    x: Tree
    left: bool = False

    @property
    def label(self) -> str:
        return f"residual({self.base.label})"

    def member(self, t):
        return self._contains(t)

    def _contains(self, t):
        return self.base.member(LImp(t, self.x) if self.left else RImp(self.x, t))

    def finite_members(self):
        return self.base._finite_residual(self.x, self.left)


@dataclass(frozen=True)
class EncodedResidual(TreeSet):
    """{t1 | ((e <- t1) <- (e <- x)) in base}: left application in T"""
    u: TreeUniverse
    base: TreeSet
    x: Tree

    @property
    def label(self) -> str:
        return f"encoded-residual({self.base.label})"

    def member(self, t):
        return self._contains(t)

    def _contains(self, t):
        return self.base.member(RImp(RImp(self.u.e, t), RImp(self.u.e, self.x)))


@dataclass(frozen=True)
class AppR(TreeSet):
    """Right application ``fun arg``"""
    u: TreeUniverse
    fun: TreeSet
    arg: TreeSet

    @property
    def label(self) -> str:
        return f"({self.fun.label} {self.arg.label})"

    def _contains(self, t):
        return intersects(self.fun.residual(t), self.arg, self.u.bound)

    def finite_members(self):
        ff = self.fun.finite_members()
        if ff is None:
            return None
        return frozenset(t.res for t in ff
                         if isinstance(t, RImp) and self.u.in_carrier(t.res) and self.arg.member(t.arg))

    def image(self, t1, bound):
        fa = self.arg.finite_members()
        if fa is None:
            return super().image(t1, bound)
        out = set()
        for a in fa:
            for u in self.fun.image(a, bound + leaves(t1)):
                if isinstance(u, RImp) and u.arg == t1 and leaves(u.res) <= bound:
                    out.add(u.res)
        return frozenset(out)

    def enumerate(self, bound):
        fm = self.finite_members()
        if fm is not None:
            return frozenset(t for t in fm if leaves(t) <= bound)
        fa = self.arg.finite_members()
        if fa is not None:
            out = set()
            for a in fa:
                out.update(t for t in self.fun.image(a, bound) if self.u.in_carrier(t))
            return frozenset(out)
        return super().enumerate(bound)


@dataclass(frozen=True)
class AppL(TreeSet):
    """
    Left application ``arg <@ fun``

    With ``encoded`` the implication t1 -o t2 is read as
    (e <- t1) <- (e <- t2), giving left application in a model with right
    implications only.
    """
    u: TreeUniverse
    arg: TreeSet
    fun: TreeSet
    encoded: bool = False

    @property
    def label(self) -> str:
        return f"({self.arg.label} <@ {self.fun.label})"

    def _candidates(self, t: Tree) -> TreeSet:
        if self.encoded:
            return EncodedResidual(self.u, self.fun, t)
        return self.fun.lresidual(t)

    def _contains(self, t):
        return intersects(self._candidates(t), self.arg, self.u.bound)

    def finite_members(self):
        ff = self.fun.finite_members()
        if ff is None:
            return None
        out = set()
        for t in ff:
            if self.encoded:
                if (isinstance(t, RImp) and isinstance(t.res, RImp) and isinstance(t.arg, RImp)
                        and t.res.res == self.u.e and t.arg.res == self.u.e):
                    if self.u.in_carrier(t.arg.arg) and self.arg.member(t.res.arg):
                        out.add(t.arg.arg)
            elif isinstance(t, LImp) and self.u.in_carrier(t.res) and self.arg.member(t.arg):
                out.add(t.res)
        return frozenset(out)

    def limage(self, t1, bound):
        fa = self.arg.finite_members()
        if self.encoded or fa is None:
            return super().limage(t1, bound)
        out = set()
        for a in fa:
            for u in self.fun.limage(a, bound + leaves(t1)):
                if isinstance(u, LImp) and u.arg == t1 and leaves(u.res) <= bound:
                    out.add(u.res)
        return frozenset(out)

    def enumerate(self, bound):
        fm = self.finite_members()
        if fm is not None:
            return frozenset(t for t in fm if leaves(t) <= bound)
        fa = self.arg.finite_members()
        if fa is not None and not self.encoded:
            out = set()
            for a in fa:
                out.update(t for t in self.fun.limage(a, bound) if self.u.in_carrier(t))
            return frozenset(out)
        return super().enumerate(bound)


def finite(u: TreeUniverse, trees) -> FiniteSet:
    return FiniteSet(u, frozenset(trees))


def named(u: TreeUniverse, symbol: str, condition: str = "") -> PatternSet:
    """Combinator set by its pattern name"""
    return PatternSet(u, symbol, PATTERNS[symbol], condition)


