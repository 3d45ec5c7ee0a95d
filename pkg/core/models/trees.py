"""
Trees over an Ordered Group

Binary trees whose leaves are group elements and whose inner nodes are
colored by right implication (t2 <- t1), left implication (t1 -o t2) or
tensor (t1 * t2). Each tree has a group value:

    |g| = g,  |t2 <- t1| = |t2| |t1|^-1,  |t1 -o t2| = |t1|^-1 |t2|,
    |t1 * t2| = |t1| |t2|

Also the tree text notation and bounded enumeration of all trees.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, FrozenSet, Iterable, List, Tuple, Union

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from core.errors import TermSyntaxError


# ----------------------------------------------------------------------------
# Ordered groups
# ----------------------------------------------------------------------------

class OrderedGroup(ABC):
    """A group with a compatible partial order"""
    name: str = "group"
    commutative: bool = False

    @property
    @abstractmethod
    def identity(self) -> Any:
        pass

    @abstractmethod
    def mul(self, a: Any, b: Any) -> Any:
        pass

    @abstractmethod
    def inv(self, a: Any) -> Any:
        pass

    @abstractmethod
    def leq(self, a: Any, b: Any) -> bool:
        pass

    @abstractmethod
    def parse(self, text: str) -> Any:
        pass

    def format(self, a: Any) -> str:
        return str(a)


class IntegerGroup(OrderedGroup):
    """The integers under addition with the usual order"""
    name = "integers"
    commutative = True

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return a + b

    def inv(self, a: int) -> int:
        return -a

    def leq(self, a: int, b: int) -> bool:
        return a <= b

    def parse(self, text: str) -> int:
        try:
            return int(text)
        except ValueError:
            raise TermSyntaxError(f"Not an integer leaf: {text!r}") from None


Word = Tuple[Tuple[str, int], ...]


class FreeGroup(OrderedGroup):
    """
    Free group on named generators, ordered by equality

    Elements are reduced words, tuples of (generator, +1 | -1). The
    identity is written ``e`` and an inverse letter ``a^-1``.
    """
    name = "free"
    commutative = False

    def __init__(self, generators: Iterable[str] = ("a", "b")):
        self.generators = tuple(generators)

    @property
    def identity(self) -> Word:
        return ()

    def mul(self, a: Word, b: Word) -> Word:
        out = list(a)
        for letter in b:
            if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
                out.pop()
            else:
                out.append(letter)
        return tuple(out)

    def inv(self, a: Word) -> Word:
        return tuple((g, -s) for g, s in reversed(a))

    def leq(self, a: Word, b: Word) -> bool:
        return a == b

    def parse(self, text: str) -> Word:
        if text == "e":
            return ()
        word: Word = ()
        i = 0
        while i < len(text):
            g = text[i]
            if g not in self.generators:
                raise TermSyntaxError(f"Unknown generator {g!r} in {text!r}")
            i += 1
            sign = 1
            if text.startswith("^-1", i):
                sign = -1
                i += 3
            word = self.mul(word, ((g, sign),))
        return word

    def format(self, a: Word) -> str:
        if not a:
            return "e"
        return "".join(g if s == 1 else f"{g}^-1" for g, s in a)


def make_group(name: str) -> OrderedGroup:
    if name == "integers":
        return IntegerGroup()
    if name == "free":
        return FreeGroup()
    raise TermSyntaxError(f"Unknown group: {name}")


# ----------------------------------------------------------------------------
# Trees
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    g: Any


@dataclass(frozen=True)
class RImp:
    """``res <- arg``"""
    res: "Tree"
    arg: "Tree"


@dataclass(frozen=True)
class LImp:
    """``arg -o res``"""
    arg: "Tree"
    res: "Tree"


@dataclass(frozen=True)
class Tens:
    left: "Tree"
    right: "Tree"


Tree = Union[Leaf, RImp, LImp, Tens]

CONSTRUCTORS = {"rimp": RImp, "limp": LImp, "tens": Tens}


def value(t: Tree, G: OrderedGroup) -> Any:
    if isinstance(t, Leaf):
        return t.g
    if isinstance(t, RImp):
        return G.mul(value(t.res, G), G.inv(value(t.arg, G)))
    if isinstance(t, LImp):
        return G.mul(G.inv(value(t.arg, G)), value(t.res, G))
    return G.mul(value(t.left, G), value(t.right, G))


def leaves(t: Tree) -> int:
    if isinstance(t, Leaf):
        return 1
    if isinstance(t, RImp):
        return leaves(t.res) + leaves(t.arg)
    if isinstance(t, LImp):
        return leaves(t.arg) + leaves(t.res)
    return leaves(t.left) + leaves(t.right)


def format_tree(t: Tree, G: OrderedGroup, top: bool = True) -> str:
    if isinstance(t, Leaf):
        return G.format(t.g)
    if isinstance(t, RImp):
        text = f"{format_tree(t.res, G, False)} <- {format_tree(t.arg, G, False)}"
    elif isinstance(t, LImp):
        text = f"{format_tree(t.arg, G, False)} -o {format_tree(t.res, G, False)}"
    else:
        text = f"{format_tree(t.left, G, False)} * {format_tree(t.right, G, False)}"
    return text if top else f"({text})"


def format_set(trees: Iterable[Tree], G: OrderedGroup) -> str:
    items = sorted(format_tree(t, G) for t in trees)
    return "{" + ", ".join(items) + "}"


@lru_cache(maxsize=None)
def trees_with_leaves(n: int, alphabet: Tuple[Any, ...], constructors: Tuple[str, ...]) -> Tuple[Tree, ...]:
    """All trees with exactly n leaves"""
    if n == 1:
        return tuple(Leaf(g) for g in alphabet)
    out: List[Tree] = []
    for k in range(1, n):
        for left in trees_with_leaves(k, alphabet, constructors):
            for right in trees_with_leaves(n - k, alphabet, constructors):
                for name in constructors:
                    out.append(CONSTRUCTORS[name](left, right))
    return tuple(out)


def all_trees(bound: int, alphabet: Tuple[Any, ...], constructors: Tuple[str, ...]) -> Tuple[Tree, ...]:
    """All trees with at most ``bound`` leaves, smallest first"""
    out: List[Tree] = []
    for n in range(1, bound + 1):
        out.extend(trees_with_leaves(n, alphabet, constructors))
    return tuple(out)


# ----------------------------------------------------------------------------
# Text notation
# ----------------------------------------------------------------------------

TREE_GRAMMAR = r"""
?start: treeset | tree

treeset: "{" [tree ("," tree)*] "}"

?tree: atom
     | atom "<-" atom     -> rimp
     | atom "-o" atom     -> limp
     | atom "*" atom      -> tens

?atom: LEAF               -> leaf
     | "(" tree ")"

LEAF: /-?[0-9]+/ | /[a-z](\^-1)?([a-z](\^-1)?)*/

%import common.WS
%ignore WS
"""

_tree_parser = Lark(TREE_GRAMMAR, parser="lalr", maybe_placeholders=False)


@v_args(inline=True)
class ToTree(Transformer):
    def __init__(self, group: OrderedGroup):
        super().__init__()
        self.group = group

    def leaf(self, token):
        return Leaf(self.group.parse(str(token)))

    def rimp(self, res, arg):
        return RImp(res, arg)

    def limp(self, arg, res):
        return LImp(arg, res)

    def tens(self, left, right):
        return Tens(left, right)

    def treeset(self, *items):
        return frozenset(items)


def parse_trees(text: str, group: OrderedGroup) -> Union[Tree, FrozenSet[Tree]]:
    """
    Parse a tree ``(3 <- 1) <- 2`` or a finite set ``{0, 1 <- 1}``

    Args:
        text: Tree notation
        group: Group interpreting the leaves

    Returns:
        A Tree, or a frozenset of trees for braces
    """
    try:
        tree = _tree_parser.parse(text)
    except UnexpectedInput as e:
        raise TermSyntaxError(f"Malformed tree notation {text!r}", getattr(e, "line", None),
                              getattr(e, "column", None)) from None
    try:
        return ToTree(group).transform(tree)
    except VisitError as e:
        raise e.orig_exc from None
