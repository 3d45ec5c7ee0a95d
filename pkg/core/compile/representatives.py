"""
Lambda Representatives

The lambda term read for every combinator symbol and unary operation, and
`expand`, which reads a whole CombTerm as a lambda term. Holes must carry
terms.
"""

from functools import lru_cache
from typing import Callable, Dict

from core.calculus.grammar import parse
from core.calculus.syntax import (
    Const, LAbs, LApp, LetPair, RAbs, RApp, Tensor, Term, Var, fresh_name, free_vars,
)
from core.compile.combterm import CApp, CLApp, CombTerm, CVar, Hole, Sym, UnaryOp
from core.errors import MissingCombinatorError, TranslationError

REPRESENTATIVE_TEXT: Dict[str, str] = {
    "S": r"\x y z. x z (y z)",
    "K": r"\x y. x",
    "I": r"\x. x",
    "B": r"\x y z. x (y z)",
    "C": r"\x y z. x z y",
    "T": r"\x y. y x",
    "Ix": r"\x y z. x (y z)",
    "L": r"\t u. let x*y = u in t x y",
    "P": r"\x y. x * y",
    "Idot": r"\v. v (\x. x)",
    "Br": r"\x y z. x (y z)",
    "Bl": r"\<x y z. (z <@ y) <@ x",
    "Dr": r"\>y z. \<x. (x <@ y) z",
    "Dl": r"\<y z. \>x. z <@ (y x)",
    "Ir": r"\>x. x",
    "Il": r"\<x. x",
}


@lru_cache(maxsize=None)
def representative(symbol: str) -> Term:
    """The lambda term representing a combinator symbol"""
    if symbol not in REPRESENTATIVE_TEXT:
        raise MissingCombinatorError(symbol, "lambda representatives")
    return parse(REPRESENTATIVE_TEXT[symbol])


def _binder(avoid_in: Term, base: str = "v") -> str:
    return fresh_name(base, free_vars(avoid_in))


def dot(m: Term) -> Term:
    """M |-> \\v. v M"""
    v = _binder(m)
    return RAbs(v, RApp(Var(v), m))


def dagr(m: Term) -> Term:
    """M |-> \\>v. v <@ M"""
    v = _binder(m)
    return RAbs(v, LApp(Var(v), m))


def dagl(m: Term) -> Term:
    """M |-> \\<v. M v"""
    v = _binder(m)
    return LAbs(v, RApp(m, Var(v)))


def circ(m: Term) -> Term:
    """M |-> B (dot M) B"""
    b = representative("B")
    return RApp(RApp(b, dot(m)), b)


TERM_TYPES = (Var, Const, RApp, LApp, RAbs, LAbs, Tensor, LetPair)

UNARY_CONSTRUCTORS: Dict[str, Callable[[Term], Term]] = {
    "dot": dot,
    "dagr": dagr,
    "dagl": dagl,
    "circ": circ,
}


def expand(c: CombTerm) -> Term:
    """
    Read a CombTerm as a lambda term

    Symbols become their representatives, unary operations their lambda
    constructors, holes their term, variables free variables.

    Raises:
        TranslationError: a hole does not carry a term
    """
    if isinstance(c, Sym):
        return representative(c.symbol)
    if isinstance(c, CVar):
        return Var(c.name)
    if isinstance(c, Hole):
        if not isinstance(c.elem, TERM_TYPES):
            raise TranslationError(f"Hole does not carry a lambda term: {c.elem!r}")
        return c.elem
    if isinstance(c, UnaryOp):
        return UNARY_CONSTRUCTORS[c.op](expand(c.arg))
    if isinstance(c, CApp):
        return RApp(expand(c.fun), expand(c.arg))
    if isinstance(c, CLApp):
        return LApp(expand(c.arg), expand(c.fun))
    raise TypeError(f"Not a combinator term: {c!r}")
