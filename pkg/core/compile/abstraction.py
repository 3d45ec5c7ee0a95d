"""
Bracket Abstraction

The five combinatory-completeness procedures: over S,K; over B,C,I for
variables used exactly once; the planar procedure over B,I and dot for the
rightmost variable; and the right and left abstractions over the bi-BDI
basis. Each maps a polynomial M and a variable x to a CombTerm A with
FV(A) = FV(M) minus x such that A a equals M[a/x].
"""

from typing import Callable, Dict, Sequence

from core.compile.combterm import (
    Basis, CApp, CLApp, CombTerm, CVar, Sym, UnaryOp, capp, cvars, is_ground,
)
from core.errors import AbstractionError
from core.logger import get_logger

logger = get_logger(__name__)

S, K, B, C, I = Sym("S"), Sym("K"), Sym("B"), Sym("C"), Sym("I")
BR, BL, DR, DL, IR, IL = Sym("Br"), Sym("Bl"), Sym("Dr"), Sym("Dl"), Sym("Ir"), Sym("Il")


def _require_once(m: CombTerm, x: str, procedure: str):
    uses = cvars(m).count(x)
    if uses != 1:
        raise AbstractionError(f"{procedure}: {x} occurs {uses} times, expected exactly once")


def _require_no_lapp(m: CombTerm, procedure: str):
    if isinstance(m, CLApp):
        raise AbstractionError(f"{procedure}: left application not in this basis")


# ----------------------------------------------------------------------------
# S, K
# ----------------------------------------------------------------------------

def abstract_sk(m: CombTerm, x: str) -> CombTerm:
    """
    Abstraction over S and K

    x |-> S K K, atoms |-> K atom, M N |-> S (λ*x.M) (λ*x.N)
    """
    _require_no_lapp(m, "abstract_sk")
    if m == CVar(x):
        return capp(S, K, K)
    if isinstance(m, CApp):
        return capp(S, abstract_sk(m.fun, x), abstract_sk(m.arg, x))
    if x in cvars(m):
        raise AbstractionError(f"abstract_sk: cannot abstract {x} under a unary operation")
    return CApp(K, m)


# ----------------------------------------------------------------------------
# B, C, I
# ----------------------------------------------------------------------------

def abstract_bci(m: CombTerm, x: str) -> CombTerm:
    """Abstraction over B, C, I for a variable occurring exactly once"""
    _require_once(m, x, "abstract_bci")
    return _bci(m, x)


def _bci(m: CombTerm, x: str) -> CombTerm:
    if m == CVar(x):
        return I
    if isinstance(m, CApp):
        if x in cvars(m.fun):
            return capp(C, _bci(m.fun, x), m.arg)
        return capp(B, m.fun, _bci(m.arg, x))
    raise AbstractionError(f"abstract_bci: {x} occurs under {type(m).__name__}")


# ----------------------------------------------------------------------------
# B, I, dot (planar)
# ----------------------------------------------------------------------------

def abstract_planar(m: CombTerm, x: str, dot: Callable[[CombTerm], CombTerm] = None) -> CombTerm:
    """
    Planar abstraction of the rightmost variable

    Args:
        m: Polynomial in which x is the rightmost variable, used once
        x: Variable to abstract
        dot: Builds the pre-applied element for a closed operand
            (defaults to the dot operation)

    Returns:
        CombTerm over B, I and dot
    """
    _require_once(m, x, "abstract_planar")
    if cvars(m)[-1] != x:
        raise AbstractionError(f"abstract_planar: {x} is not the rightmost variable")
    return _planar(m, x, dot or (lambda n: UnaryOp("dot", n)))


def _planar(m: CombTerm, x: str, dot) -> CombTerm:
    if m == CVar(x):
        return I
    if isinstance(m, CApp):
        if x in cvars(m.fun):
            if not is_ground(m.arg):
                raise AbstractionError("abstract_planar: operand right of x is not closed")
            return capp(B, dot(m.arg), _planar(m.fun, x, dot))
        return capp(B, m.fun, _planar(m.arg, x, dot))
    raise AbstractionError(f"abstract_planar: {x} occurs under {type(m).__name__}")


def dot_via_idot(n: CombTerm) -> CombTerm:
    """Pre-application in the B, I, Idot, circ basis: only dot(I) is available"""
    if n == I:
        return Sym("Idot")
    raise AbstractionError("basis biidotcirc provides dot only for I")


# ----------------------------------------------------------------------------
# bi-BDI
# ----------------------------------------------------------------------------

def abstract_right(m: CombTerm, x: str) -> CombTerm:
    """Right abstraction of the rightmost variable over the bi-BDI basis"""
    _require_once(m, x, "abstract_right")
    if cvars(m)[-1] != x:
        raise AbstractionError(f"abstract_right: {x} is not the rightmost variable")
    return _right(m, x)


def _right(m: CombTerm, x: str) -> CombTerm:
    if m == CVar(x):
        return IR
    if isinstance(m, CApp):
        fun, arg = m.fun, m.arg
        if x in cvars(arg):
            return capp(BR, fun, _right(arg, x))
        return capp(BR, UnaryOp("dagr", capp(DR, IL, arg)), _right(fun, x))
    if isinstance(m, CLApp):
        arg, fun = m.arg, m.fun
        if x in cvars(fun):
            return CLApp(arg, CLApp(_right(fun, x), DL))
        return capp(BR, UnaryOp("dagr", fun), _right(arg, x))
    raise AbstractionError(f"abstract_right: {x} occurs under {type(m).__name__}")


def abstract_left(m: CombTerm, y: str) -> CombTerm:
    """Left abstraction of the leftmost variable over the bi-BDI basis"""
    _require_once(m, y, "abstract_left")
    if cvars(m)[0] != y:
        raise AbstractionError(f"abstract_left: {y} is not the leftmost variable")
    return _left(m, y)


def _left(m: CombTerm, y: str) -> CombTerm:
    if m == CVar(y):
        return IL
    if isinstance(m, CLApp):
        arg, fun = m.arg, m.fun
        if y in cvars(arg):
            return CLApp(_left(arg, y), CLApp(fun, BL))
        inner = UnaryOp("dagl", CLApp(arg, CLApp(IR, DL)))
        return CLApp(_left(fun, y), CLApp(inner, BL))
    if isinstance(m, CApp):
        fun, arg = m.fun, m.arg
        if y in cvars(fun):
            return capp(DR, _left(fun, y), arg)
        return CLApp(_left(arg, y), CLApp(UnaryOp("dagl", fun), BL))
    raise AbstractionError(f"abstract_left: {y} occurs under {type(m).__name__}")


# ----------------------------------------------------------------------------
# Dispatch
# ----------------------------------------------------------------------------

PROCEDURES: Dict[Basis, Callable[[CombTerm, str], CombTerm]] = {
    Basis.SK: abstract_sk,
    Basis.BCI: abstract_bci,
    Basis.BIDOT: abstract_planar,
    Basis.BIIDOT: abstract_planar,
    Basis.BIILP: abstract_planar,
    Basis.BIBDI: abstract_right,
    Basis.BIIDOTCIRC: lambda m, x: abstract_planar(m, x, dot_via_idot),
}


def abstract(m: CombTerm, x: str, basis: Basis) -> CombTerm:
    """Abstract one variable with the basis' procedure (right abstraction for bi-BDI)"""
    return PROCEDURES[basis](m, x)


def abstract_many(m: CombTerm, xs: Sequence[str], basis: Basis, left: bool = False) -> CombTerm:
    """
    Abstract several variables, the last one innermost

    Args:
        m: Polynomial
        xs: Variables, outermost first
        basis: Basis selecting the procedure
        left: Use left abstraction (bi-BDI only)

    Returns:
        Closed-in-xs CombTerm
    """
    if left and basis is not Basis.BIBDI:
        raise AbstractionError("left abstraction needs the bi-BDI basis")
    procedure = abstract_left if left else PROCEDURES[basis]
    result = m
    for x in reversed(list(xs)):
        result = procedure(result, x)
    logger.debug(f"Abstracted {list(xs)} over {basis.value}")
    return result
