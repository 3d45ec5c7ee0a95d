"""
CPS Translation

Call-by-value continuation-passing translation of ordinary terms and the
computational equality it decides: M =c N iff the images are beta-eta equal.
"""

from typing import Set

from core.calculus.rewrite import EqVerdict, equal
from core.calculus.syntax import (
    Const, Discipline, RAbs, RApp, Term, Var, binders_of, constants_of, free_vars,
)
from core.errors import TranslationError


class CpsTranslator:
    """Translates one or more terms with continuation names kept apart from theirs"""

    def __init__(self, avoid: Set[str]):
        self.avoid = set(avoid)
        self.counter = 0

    def fresh(self, base: str) -> str:
        while True:
            self.counter += 1
            name = f"{base}{self.counter}"
            if name not in self.avoid:
                self.avoid.add(name)
                return name

    def translate(self, m: Term) -> Term:
        if isinstance(m, (Var, Const)):
            k = self.fresh("k")
            return RAbs(k, RApp(Var(k), m))
        if isinstance(m, RAbs):
            k = self.fresh("k")
            return RAbs(k, RApp(Var(k), RAbs(m.binder, self.translate(m.body))))
        if isinstance(m, RApp):
            k, f, x = self.fresh("k"), self.fresh("f"), self.fresh("x")
            inner = RAbs(x, RApp(RApp(Var(f), Var(x)), Var(k)))
            tail = RAbs(f, RApp(self.translate(m.arg), inner))
            return RAbs(k, RApp(self.translate(m.fun), tail))
        raise TranslationError(f"CPS translation covers ordinary terms only, got {type(m).__name__}")


def _names(*terms: Term) -> Set[str]:
    names: Set[str] = set()
    for t in terms:
        names |= free_vars(t) | binders_of(t)
    return names


def cps_translate(m: Term) -> Term:
    """
    Call-by-value CPS image of an ordinary term

    [x] = \\k. k x,  [\\x.M] = \\k. k (\\x.[M]),
    [M N] = \\k. [M] (\\f. [N] (\\x. f x k))
    """
    return CpsTranslator(_names(m)).translate(m)


def computational_eq(m: Term, n: Term, fuel: int = 1_000_000) -> EqVerdict:
    """
    Decide computational equality through the CPS images

    Args:
        m: Ordinary term
        n: Ordinary term
        fuel: Normalization budget per side

    Returns:
        Verdict of beta-eta equality of the images (Unknown on fuel exhaustion)
    """
    translator = CpsTranslator(_names(m, n))
    d = Discipline.ordinary(constants_of(m) | constants_of(n), eta=True)
    return equal(translator.translate(m), translator.translate(n), d, fuel)
