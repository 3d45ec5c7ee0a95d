"""
Derived Combinators

Constructions of combinators of one class from those of another, as
CombTerms over the source basis. Unary operations are returned as functions
from the operand expression to an expression.
"""

from typing import Callable, Dict

from core.compile.abstraction import abstract_left, abstract_many, abstract_sk, abstract_right
from core.compile.combterm import (
    Basis, CApp, CLApp, CombTerm, CVar, Sym, UnaryOp, capp,
)

UnaryDerivation = Callable[[CombTerm], CombTerm]

B, C, I = Sym("B"), Sym("C"), Sym("I")
BR, IR, IL = Sym("Br"), Sym("Ir"), Sym("Il")

_x, _y, _z = CVar("x"), CVar("y"), CVar("z")


def derive_c_from_t(t: CombTerm) -> CombTerm:
    """B (B (T (B B T)) B) T, which satisfies the C law when T x y = y x"""
    return capp(B, capp(B, CApp(t, capp(B, B, t)), B), t)


def sk_to_bci() -> Dict[str, CombTerm]:
    """B, C and I by abstraction over S and K"""
    def sk_abstract(body: CombTerm, names) -> CombTerm:
        result = body
        for name in reversed(names):
            result = abstract_sk(result, name)
        return result

    return {
        "B": sk_abstract(CApp(_x, CApp(_y, _z)), ["x", "y", "z"]),
        "C": sk_abstract(capp(_x, _z, _y), ["x", "y", "z"]),
        "I": sk_abstract(_x, ["x"]),
    }


def bci_dot() -> UnaryDerivation:
    """dot(a) := C I a"""
    return lambda a: capp(C, I, a)


def bci_to_bibdi() -> Dict[str, CombTerm]:
    """
    The bi-BDI symbols of a BCI-algebra read two-sidedly

    Left application is flipped right application and both daggers are the
    identity; see the structure view that supplies those.
    """
    return {"Br": B, "Bl": B, "Dr": C, "Dl": C, "Ir": I, "Il": I}


def bibdi_to_biilp() -> Dict[str, CombTerm]:
    """B, I, Ix, L and P from the bi-BDI basis by two-sided abstraction"""
    pairing = abstract_left(capp(CVar("t"), _x, _y), "t")
    return {
        "B": BR,
        "I": IR,
        "Ix": abstract_many(CLApp(_x, CApp(_y, IL)), ["x", "y"], Basis.BIBDI),
        "L": abstract_many(CLApp(_x, _y), ["x", "y"], Basis.BIBDI),
        "P": abstract_right(abstract_right(pairing, "y"), "x"),
    }


def bibdi_dot() -> UnaryDerivation:
    """dot(a) := dagr(λ←x. x a)"""
    return lambda a: UnaryOp("dagr", abstract_left(CApp(CVar("x"), a), "x"))


def bidot_to_biidotcirc() -> Dict[str, CombTerm]:
    """Idot := dot(I)"""
    return {"Idot": UnaryOp("dot", I)}


def bidot_circ() -> UnaryDerivation:
    """circ(a) := B (dot a) B"""
    return lambda a: capp(B, UnaryOp("dot", a), B)
