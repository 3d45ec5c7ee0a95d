"""
Tensor Translation

Compiles closed terms of the planar calculus with tensor into CombTerms over
B, I, Ix, L, P and dot. Pairs become P, let-pairs become L applied to the
abstracted body, and abstractions use the planar procedure.
"""

from core.calculus.syntax import (
    Const, LAbs, LApp, LetPair, RAbs, RApp, Tensor, Term, Var, free_var_sequence, pretty,
)
from core.compile.abstraction import abstract_planar
from core.compile.combterm import CApp, CombTerm, CVar, Hole, Sym, capp
from core.errors import TranslationError

L, P = Sym("L"), Sym("P")


def compile_tensor(m: Term) -> CombTerm:
    """
    Translate a closed planar tensor term into the B, I, Ix, L, P, dot basis

    Args:
        m: Closed term valid under the planar-tensor discipline

    Returns:
        CombTerm whose lambda reading is beta-eta equal to m

    Raises:
        TranslationError: m is open or uses left operations
    """
    if free_var_sequence(m):
        raise TranslationError(f"compile_tensor needs a closed term: {pretty(m)}")
    return _translate(m)


def _translate(m: Term) -> CombTerm:
    if isinstance(m, Var):
        return CVar(m.name)
    if isinstance(m, Const):
        return Hole(m, label=f"#{m.symbol}")
    if isinstance(m, RApp):
        return CApp(_translate(m.fun), _translate(m.arg))
    if isinstance(m, Tensor):
        return capp(P, _translate(m.left), _translate(m.right))
    if isinstance(m, RAbs):
        return abstract_planar(_translate(m.body), m.binder)
    if isinstance(m, LetPair):
        body = abstract_planar(abstract_planar(_translate(m.body), m.y), m.x)
        return capp(L, body, _translate(m.scrutinee))
    if isinstance(m, (LApp, LAbs)):
        raise TranslationError("compile_tensor: left operations are not part of the tensor calculus")
    raise TypeError(f"Not a term: {m!r}")
