"""
Concrete Grammar

Lark grammar and transformer for terms of every calculus.

    variables      [a-z][a-zA-Z0-9_]*
    constants      #name
    application    M N            (left-associative, binds tightest)
    left app       N <@ M         (left-associative)
    tensor         M * N          (left-associative, binds loosest)
    abstraction    \\x.M  \\>x.M  (right)     \\<x.M  (left)
                   \\x y z.M      (nested, same direction)
    let            let x*y = M in N
    comments       -- to end of line

Abstractions and let extend as far to the right as possible.
"""

from typing import Optional

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from core.calculus.syntax import (
    Const, Discipline, LAbs, LApp, LetPair, RAbs, RApp, Tensor, Term, Var, validate,
)
from core.errors import DisciplineError, TermSyntaxError, UnknownConstantError


TERM_GRAMMAR = r"""
?start: term

?term: abstraction
     | tensor

abstraction: RLAMBDA NAME+ "." term                 -> rabs
           | LLAMBDA NAME+ "." term                 -> labs
           | "let" NAME "*" NAME "=" term "in" term -> letpair

?tensor: lapp
       | tensor "*" lapp                            -> pair

?lapp: app
     | lapp "<@" app                                -> lapp

?app: atom
    | app atom                                      -> rapp

?atom: NAME                                         -> var
     | CONST                                        -> const
     | "(" term ")"

RLAMBDA: "\\>" | "\\"
LLAMBDA: "\\<"
CONST: /#[A-Za-z0-9_]+/
NAME: /[a-z][A-Za-z0-9_]*/
COMMENT: /--[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

_parser = Lark(TERM_GRAMMAR, parser="lalr", maybe_placeholders=False)


@v_args(inline=True)
class ToTerm(Transformer):
    """Build Term values from the parse tree"""

    def __init__(self, discipline: Optional[Discipline]):
        super().__init__()
        self.discipline = discipline

    def var(self, name):
        return Var(str(name))

    def const(self, token):
        symbol = str(token)[1:]
        if self.discipline is not None and symbol not in self.discipline.constants:
            raise UnknownConstantError(symbol)
        return Const(symbol)

    def rapp(self, fun, arg):
        return RApp(fun, arg)

    def lapp(self, arg, fun):
        return LApp(arg, fun)

    def pair(self, left, right):
        return Tensor(left, right)

    def rabs(self, _lam, *rest):
        *names, body = rest
        for name in reversed(names):
            body = RAbs(str(name), body)
        return body

    def labs(self, _lam, *rest):
        *names, body = rest
        for name in reversed(names):
            body = LAbs(str(name), body)
        return body

    def letpair(self, x, y, scrutinee, body):
        return LetPair(str(x), str(y), scrutinee, body)


def parse(text: str, d: Optional[Discipline] = None) -> Term:
    """
    Parse concrete syntax into a Term

    The discipline is only consulted for declared constants; structural
    rules are checked separately by ``validate``.

    Args:
        text: Source text
        d: Discipline declaring the allowed constants (None accepts any)

    Returns:
        Parsed term

    Raises:
        TermSyntaxError: on malformed input
        UnknownConstantError: on a constant the discipline does not declare
    """
    try:
        tree = _parser.parse(text)
    except UnexpectedEOF as e:
        raise TermSyntaxError("Unexpected end of input", getattr(e, "line", None),
                              getattr(e, "column", None)) from None
    except UnexpectedCharacters as e:
        raise TermSyntaxError(f"Unexpected character {text[e.pos_in_stream]!r}",
                              e.line, e.column) from None
    except UnexpectedInput as e:
        token = getattr(e, "token", None)
        raise TermSyntaxError(f"Unexpected token {str(token)!r}", getattr(e, "line", None),
                              getattr(e, "column", None)) from None
    try:
        return ToTerm(d).transform(tree)
    except VisitError as e:
        raise e.orig_exc from None


def parse_valid(text: str, d: Discipline) -> Term:
    """
    Parse and validate against a discipline

    Raises:
        TermSyntaxError, UnknownConstantError: as ``parse``
        DisciplineError: the term breaks a structural rule of d
    """
    t = parse(text, d)
    report = validate(t, d)
    if not report.ok:
        details = "; ".join(str(v) for v in report.violations)
        raise DisciplineError(f"{text.strip()} is not valid in {d.describe()}: {details}")
    return t
