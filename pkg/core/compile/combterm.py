"""
Combinator Terms

Applicative expressions over a combinator basis, used both as compiler
output and as polynomials (expressions with variables) during bracket
abstraction. Structure elements enter as holes.

Concrete syntax (lark):

    symbols        S K B C I Ix L P T Br Bl Dr Dl Ir Il Idot
    unary ops      dot(e) dagr(e) dagl(e) circ(e)
    variables      [a-z][a-zA-Z0-9_]*
    application    e1 e2          (left-associative)
    left app       e1 <@ e2       (e2 is the function)
    literals       [lambda term]  {tree set}
    equations      lhs = rhs
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple, Union

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, VisitError

from core.errors import MissingCombinatorError, TermSyntaxError


# ----------------------------------------------------------------------------
# Bases
# ----------------------------------------------------------------------------

SYMBOLS = ("S", "K", "B", "C", "I", "Ix", "L", "P", "T",
           "Br", "Bl", "Dr", "Dl", "Ir", "Il", "Idot")
UNARY_OPS = ("dot", "dagr", "dagl", "circ")


class Basis(Enum):
    """Combinator signatures of the class hierarchy"""
    SK = "sk"
    BCI = "bci"
    BIDOT = "bidot"
    BIIDOT = "biidot"
    BIILP = "biilp"
    BIBDI = "bibdi"
    BIIDOTCIRC = "biidotcirc"

    @property
    def symbols(self) -> Tuple[str, ...]:
        return _BASIS_SYMBOLS[self][0]

    @property
    def unary_ops(self) -> Tuple[str, ...]:
        return _BASIS_SYMBOLS[self][1]

    @property
    def two_sided(self) -> bool:
        return self is Basis.BIBDI


_BASIS_SYMBOLS: Dict[Basis, Tuple[Tuple[str, ...], Tuple[str, ...]]] = {
    Basis.SK: (("S", "K"), ()),
    Basis.BCI: (("B", "C", "I"), ()),
    Basis.BIDOT: (("B", "I"), ("dot",)),
    Basis.BIIDOT: (("B", "I", "Ix"), ("dot",)),
    Basis.BIILP: (("B", "I", "Ix", "L", "P"), ("dot",)),
    Basis.BIBDI: (("Br", "Bl", "Dr", "Dl", "Ir", "Il"), ("dagr", "dagl")),
    Basis.BIIDOTCIRC: (("B", "I", "Idot"), ("circ",)),
}


# ----------------------------------------------------------------------------
# Terms
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Sym:
    symbol: str


@dataclass(frozen=True)
class UnaryOp:
    op: str
    arg: "CombTerm"


@dataclass(frozen=True)
class CApp:
    fun: "CombTerm"
    arg: "CombTerm"


@dataclass(frozen=True)
class CLApp:
    """``arg <@ fun``"""
    arg: "CombTerm"
    fun: "CombTerm"


@dataclass(frozen=True)
class Hole:
    """A structure element embedded in an expression"""
    elem: Any
    label: str = field(default="", compare=False)


@dataclass(frozen=True)
class CVar:
    name: str


CombTerm = Union[Sym, UnaryOp, CApp, CLApp, Hole, CVar]


def capp(fun: CombTerm, *args: CombTerm) -> CombTerm:
    """Left-nested application ``fun a1 ... an``"""
    for arg in args:
        fun = CApp(fun, arg)
    return fun


def cvars(c: CombTerm) -> List[str]:
    """Variable occurrences in textual order (``a <@ f`` lists a first)"""
    if isinstance(c, CVar):
        return [c.name]
    if isinstance(c, UnaryOp):
        return cvars(c.arg)
    if isinstance(c, CApp):
        return cvars(c.fun) + cvars(c.arg)
    if isinstance(c, CLApp):
        return cvars(c.arg) + cvars(c.fun)
    return []


def is_ground(c: CombTerm) -> bool:
    return not cvars(c)


def symbols_of(c: CombTerm) -> Tuple[set, set]:
    """(nullary symbols, unary ops) used by c"""
    syms, ops = set(), set()

    def walk(t: CombTerm):
        if isinstance(t, Sym):
            syms.add(t.symbol)
        elif isinstance(t, UnaryOp):
            ops.add(t.op)
            walk(t.arg)
        elif isinstance(t, CApp):
            walk(t.fun)
            walk(t.arg)
        elif isinstance(t, CLApp):
            walk(t.arg)
            walk(t.fun)

    walk(c)
    return syms, ops


def csubstitute(c: CombTerm, mapping: Mapping[str, CombTerm]) -> CombTerm:
    """Replace variables (no binders, so no capture)"""
    if isinstance(c, CVar):
        return mapping.get(c.name, c)
    if isinstance(c, UnaryOp):
        return UnaryOp(c.op, csubstitute(c.arg, mapping))
    if isinstance(c, CApp):
        return CApp(csubstitute(c.fun, mapping), csubstitute(c.arg, mapping))
    if isinstance(c, CLApp):
        return CLApp(csubstitute(c.arg, mapping), csubstitute(c.fun, mapping))
    return c


def comb_size(c: CombTerm) -> int:
    if isinstance(c, UnaryOp):
        return 1 + comb_size(c.arg)
    if isinstance(c, CApp):
        return 1 + comb_size(c.fun) + comb_size(c.arg)
    if isinstance(c, CLApp):
        return 1 + comb_size(c.arg) + comb_size(c.fun)
    return 1


def render(c: CombTerm, hole_text: Optional[Callable[[Any], str]] = None) -> str:
    """Render in the concrete syntax; holes print their label or hole_text(elem)"""
    return _render(c, 0, hole_text)


def _render(c: CombTerm, level: int, hole_text) -> str:
    if isinstance(c, Sym):
        return c.symbol
    if isinstance(c, CVar):
        return c.name
    if isinstance(c, Hole):
        if c.label:
            return c.label
        return hole_text(c.elem) if hole_text else f"<{c.elem!r}>"
    if isinstance(c, UnaryOp):
        return f"{c.op}({_render(c.arg, 0, hole_text)})"
    if isinstance(c, CLApp):
        text = f"{_render(c.arg, 1, hole_text)} <@ {_render(c.fun, 2, hole_text)}"
        return f"({text})" if level > 1 else text
    text = f"{_render(c.fun, 2, hole_text)} {_render(c.arg, 3, hole_text)}"
    return f"({text})" if level > 2 else text


# ----------------------------------------------------------------------------
# Concrete syntax
# ----------------------------------------------------------------------------

COMB_GRAMMAR = r"""
?expr: lapp

equation: expr "=" expr

?lapp: app
     | lapp "<@" app                -> lapp

?app: atom
    | app atom                      -> app

?atom: SYMBOL                       -> sym
     | NAME                         -> var
     | OP "(" expr ")"              -> unary
     | TERM_LITERAL                 -> term_literal
     | SET_LITERAL                  -> set_literal
     | "(" expr ")"

SYMBOL: /[A-Z][A-Za-z]*/
OP.2: /(dot|dagr|dagl|circ)(?=\()/
NAME: /[a-z][A-Za-z0-9_]*/
TERM_LITERAL: /\[[^\]]*\]/
SET_LITERAL: /\{[^}]*\}/
COMMENT: /--[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

_parser = Lark(COMB_GRAMMAR, parser="lalr", start=["expr", "equation"])

LiteralHook = Callable[[str, str], Any]


@v_args(inline=True)
class ToCombTerm(Transformer):
    """Build CombTerms; literals are handed to a hook that returns elements"""

    def __init__(self, literal_hook: Optional[LiteralHook]):
        super().__init__()
        self.literal_hook = literal_hook

    def sym(self, token):
        if str(token) not in SYMBOLS:
            raise TermSyntaxError(f"Unknown combinator {str(token)!r}", token.line, token.column)
        return Sym(str(token))

    def var(self, token):
        return CVar(str(token))

    def unary(self, op, arg):
        return UnaryOp(str(op), arg)

    def app(self, fun, arg):
        return CApp(fun, arg)

    def lapp(self, arg, fun):
        return CLApp(arg, fun)

    def term_literal(self, token):
        return self._literal("term", str(token)[1:-1], str(token))

    def set_literal(self, token):
        return self._literal("set", str(token), str(token))

    def equation(self, left, right):
        return left, right

    def _literal(self, kind: str, text: str, label: str):
        if self.literal_hook is None:
            raise TermSyntaxError(f"Literal {label} not supported here")
        return Hole(self.literal_hook(kind, text), label=label)


def parse_comb(text: str, literal_hook: Optional[LiteralHook] = None) -> CombTerm:
    """
    Parse a combinator expression

    Args:
        text: Source text
        literal_hook: Called with ("term" | "set", text) for bracketed literals

    Returns:
        Parsed CombTerm
    """
    return _run(text, "expr", literal_hook)


def parse_equation(text: str, literal_hook: Optional[LiteralHook] = None) -> Tuple[CombTerm, CombTerm]:
    """Parse ``lhs = rhs``"""
    return _run(text, "equation", literal_hook)


def _run(text: str, start: str, literal_hook: Optional[LiteralHook]):
    try:
        tree = _parser.parse(text, start=start)
    except UnexpectedCharacters as e:
        raise TermSyntaxError(f"Unexpected character {text[e.pos_in_stream]!r}",
                              e.line, e.column) from None
    except UnexpectedInput as e:
        raise TermSyntaxError(f"Unexpected input in {text!r}", getattr(e, "line", None),
                              getattr(e, "column", None)) from None
    try:
        return ToCombTerm(literal_hook).transform(tree)
    except VisitError as e:
        raise e.orig_exc from None


# ----------------------------------------------------------------------------
# Interpretation
# ----------------------------------------------------------------------------

def interpret(c: CombTerm, structure, env: Optional[Mapping[str, Any]] = None) -> Optional[Any]:
    """
    Evaluate a CombTerm in an applicative structure

    Args:
        c: Expression; every variable must be bound in env
        structure: ApplicativeStructure supplying application and combinators
        env: Variable assignment

    Returns:
        Element, or None when some application is undefined

    Raises:
        MissingCombinatorError: a symbol or unary operation is not installed
    """
    env = env or {}
    if isinstance(c, Hole):
        return c.elem
    if isinstance(c, CVar):
        if c.name not in env:
            raise KeyError(f"Unbound variable {c.name}")
        return env[c.name]
    if isinstance(c, Sym):
        elem = structure.distinguished(c.symbol)
        if elem is None:
            raise MissingCombinatorError(c.symbol, structure.name)
        return elem
    if isinstance(c, UnaryOp):
        arg = interpret(c.arg, structure, env)
        if arg is None:
            return None
        if not structure.has_unary(c.op):
            raise MissingCombinatorError(c.op, structure.name)
        return structure.unary(c.op, arg)
    if isinstance(c, CApp):
        fun = interpret(c.fun, structure, env)
        arg = interpret(c.arg, structure, env)
        if fun is None or arg is None:
            return None
        return structure.rapp(fun, arg)
    if isinstance(c, CLApp):
        arg = interpret(c.arg, structure, env)
        fun = interpret(c.fun, structure, env)
        if fun is None or arg is None:
            return None
        return structure.lapp(arg, fun)
    raise TypeError(f"Not a combinator term: {c!r}")
