"""
Tree Models

Sets of trees over an ordered group as applicative structures:

- T: right implications only; left application through the encoding
  t -o t' := (e <- t) <- (e <- t'), with the internal P and L
- T': adds a tensor constructor, with the tensor P and L
- T'': adds left implications and the two-sided combinator sets
- T_e: trees of value exactly e, a BCI structure

Equality of elements is agreement of members up to the leaf bound.
"""

import random
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Union

from core.algebra.structure import ApplicativeStructure
from core.calculus.rewrite import EqVerdict
from core.compile.combterm import parse_comb, interpret
from core.errors import ModelError, TermSyntaxError
from core.logger import get_logger
from core.models.tree_sets import (
    AppL, AppR, DagSet, DotSet, FiniteSet, TreeSet, TreeUniverse, finite, named,
)
from core.models.trees import IntegerGroup, OrderedGroup, Tree, format_set, parse_trees

logger = get_logger(__name__)

DEFAULT_BOUND = 7


class TreeVariant(Enum):
    T = "t"
    TPRIME = "tprime"
    TDOUBLEPRIME = "tdoubleprime"
    TE = "te"

    @property
    def title(self) -> str:
        return {"t": "T", "tprime": "T'", "tdoubleprime": "T''", "te": "T_e"}[self.value]

    @property
    def constructors(self) -> tuple:
        if self is TreeVariant.TPRIME:
            return ("rimp", "tens")
        if self is TreeVariant.TDOUBLEPRIME:
            return ("rimp", "limp")
        return ("rimp",)


class TreeModel(ApplicativeStructure):
    """
    A tree model with its combinator sets installed

    Elements are TreeSets. Unary operations build DotSet and DagSet nodes.
    """

    def __init__(self, group: Optional[OrderedGroup] = None, variant: TreeVariant = TreeVariant.T,
                 bound: int = DEFAULT_BOUND, alphabet: Optional[Sequence] = None,
                 sample_leaves: int = 3):
        group = group or IntegerGroup()
        super().__init__(f"{variant.title}({group.name})")
        self.group = group
        self.variant = variant
        self.bound = bound
        self.sample_leaves = sample_leaves
        leaf_values = tuple(group.parse(str(a)) for a in (alphabet or _default_alphabet(group)))
        self.u = TreeUniverse(group, leaf_values, variant.constructors, bound,
                              exact=variant is TreeVariant.TE)
        self.two_sided = variant in (TreeVariant.T, TreeVariant.TDOUBLEPRIME)
        self._install_combinators()

    def _install_combinators(self):
        u = self.u
        if self.variant is TreeVariant.TE:
            # B and I range over all trees; only C needs |t1| = |t2| = |t3| = e
            self.install("B", named(u, "B"))
            self.install("C", named(u, "C", "unit"))
            self.install("I", named(u, "I"))
            return

        for symbol in ("B", "I", "Ix"):
            self.install(symbol, named(u, symbol))
        if self.group.commutative:
            self.install("C", named(u, "C"))
        if self.variant is TreeVariant.T:
            self.install("P", named(u, "P"))
            self.install("L", named(u, "L"))
        elif self.variant is TreeVariant.TPRIME:
            self.install("P", named(u, "P_tensor"))
            self.install("L", named(u, "L_tensor"))
        self.install_unary("dot", lambda a: DotSet(u, a))

        if self.variant is TreeVariant.TDOUBLEPRIME:
            self.install("Br", named(u, "B"))
            self.install("Ir", named(u, "I"))
            for symbol in ("Bl", "Dr", "Dl", "Il"):
                self.install(symbol, named(u, symbol))
            self.install_unary("dagr", lambda a: DagSet(u, a, right=True))
            self.install_unary("dagl", lambda a: DagSet(u, a, right=False))

    # ------------------------------------------------------------------
    # Application and equality
    # ------------------------------------------------------------------

    def rapp(self, a: TreeSet, b: TreeSet) -> TreeSet:
        return AppR(self.u, a, b)

    def lapp(self, a: TreeSet, f: TreeSet) -> TreeSet:
        if not self.two_sided:
            return super().lapp(a, f)
        return AppL(self.u, a, f, encoded=self.variant is TreeVariant.T)

    def eq(self, a: TreeSet, b: TreeSet) -> EqVerdict:
        """Agreement up to the bound; a disagreement is exact"""
        left, right = a.enumerate(self.bound), b.enumerate(self.bound)
        if left == right:
            return EqVerdict.EQUAL
        return EqVerdict.NOT_EQUAL

    def disagreement(self, a: TreeSet, b: TreeSet) -> Optional[Tree]:
        """A smallest tree in exactly one of the two sets, up to the bound"""
        diff = a.enumerate(self.bound) ^ b.enumerate(self.bound)
        if not diff:
            return None
        return min(diff, key=lambda t: (len(repr(t)), repr(t)))

    def includes(self, a: TreeSet, b: TreeSet) -> EqVerdict:
        """Whether a is a subset of b, up to the bound"""
        if a.enumerate(self.bound) <= b.enumerate(self.bound):
            return EqVerdict.EQUAL
        return EqVerdict.NOT_EQUAL

    # ------------------------------------------------------------------
    # Elements
    # ------------------------------------------------------------------

    def finite(self, trees: Iterable[Tree]) -> FiniteSet:
        """
        A finite element

        Raises:
            ModelError: a tree lies outside the carrier
        """
        trees = frozenset(trees)
        for t in trees:
            if not self.u.in_carrier(t):
                raise ModelError(f"{format_set([t], self.group)} is not in the carrier of {self.name}")
        return finite(self.u, trees)

    def element(self, text: str) -> FiniteSet:
        """Parse a tree or a finite set of trees"""
        parsed = parse_trees(text, self.group)
        return self.finite(parsed if isinstance(parsed, frozenset) else [parsed])

    def evaluate(self, text: str) -> TreeSet:
        """
        Evaluate a combinator expression over tree sets

        Finite sets are written in braces, named sets by symbol, for example
        ``B {1 <- 0} {0} {0}`` or ``{0} <@ dagl(I)``.
        """
        def hook(kind: str, literal: str):
            if kind != "set":
                raise TermSyntaxError(f"Term literals are not elements of {self.name}")
            return self.element(literal)

        return interpret(parse_comb(text, hook), self)

    def sample(self, seed: int, size: int) -> List[FiniteSet]:
        """Random finite sets of one to three small carrier trees"""
        rng = random.Random(seed)
        pool = self.u.carrier_trees(min(self.sample_leaves, self.bound))
        if not pool:
            return []
        out = []
        for _ in range(size):
            k = rng.randint(1, min(3, len(pool)))
            out.append(finite(self.u, rng.sample(pool, k)))
        return out

    def describe(self, a: Optional[TreeSet]) -> str:
        if a is None:
            return "undefined"
        fm = a.finite_members()
        return format_set(fm, self.group) if fm is not None else a.label

    def show(self, a: TreeSet, bound: Optional[int] = None) -> str:
        """Members up to a bound in tree notation"""
        return format_set(a.enumerate(bound or self.bound), self.group)


def _default_alphabet(group: OrderedGroup) -> Sequence[str]:
    if isinstance(group, IntegerGroup):
        return ("0", "1")
    return ("e",) + tuple(getattr(group, "generators", ()))


def tree_model(group: Optional[OrderedGroup] = None,
               variant: Union[TreeVariant, str] = TreeVariant.T,
               bound: int = DEFAULT_BOUND,
               alphabet: Optional[Sequence] = None) -> TreeModel:
    """
    Build a tree model

    Args:
        group: Ordered group of leaf values (integers by default)
        variant: T, T', T'' or T_e
        bound: Leaf bound for enumeration and equality
        alphabet: Leaf values used when enumerating trees

    Returns:
        TreeModel with its combinator sets installed
    """
    variant = TreeVariant(variant) if isinstance(variant, str) else variant
    model = TreeModel(group, variant, bound, alphabet)
    logger.debug(f"Built tree model {model.name} with bound {bound}, "
                 f"combinators {', '.join(model.installed_symbols())}")
    return model


def te_model(group: Optional[OrderedGroup] = None, bound: int = DEFAULT_BOUND,
             alphabet: Optional[Sequence] = None) -> TreeModel:
    """The BCI structure of trees with value e"""
    return tree_model(group, TreeVariant.TE, bound, alphabet)
