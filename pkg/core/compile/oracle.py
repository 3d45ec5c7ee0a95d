"""
Translation Oracles

Checks of the translations against the rewrite engine: an abstraction
applied to fresh constants must normalize to the substituted body, the
tensor translation must read back to a beta-eta equal term, and a left
inverse applied to its term must normalize to the identity.
"""

import random
from typing import Dict, Iterable, List, Sequence

from core.calculus.rewrite import EqVerdict, equal
from core.calculus.syntax import (
    Const, Discipline, LApp, RAbs, RApp, Term, Var, constants_of, substitute_many,
)
from core.compile.combterm import Basis, CApp, CLApp, CombTerm, CVar, Sym
from core.compile.representatives import expand
from core.compile.tensor import compile_tensor

BASIS_DISCIPLINE: Dict[Basis, str] = {
    Basis.SK: "ordinary",
    Basis.BCI: "linear",
    Basis.BIDOT: "planar",
    Basis.BIIDOT: "planar",
    Basis.BIIDOTCIRC: "planar",
    Basis.BIILP: "planar-tensor",
    Basis.BIBDI: "biplanar",
}

IDENTITY = RAbs("x", Var("x"))


def oracle_discipline(basis: Basis, constants: Iterable[str] = ()) -> Discipline:
    """Discipline whose term model reads the basis' representatives"""
    return Discipline.named(BASIS_DISCIPLINE[basis], constants)


def fresh_arguments(n: int, avoid: Iterable[str] = ()) -> List[Const]:
    taken = set(avoid)
    names = (f"a{i}" for i in range(n + len(taken) + 1))
    return [Const(name) for name in names if name not in taken][:n]


def abstraction_sound(m: CombTerm, xs: Sequence[str], result: CombTerm, basis: Basis,
                      left: bool = False, fuel: int = 1_000_000) -> EqVerdict:
    """
    Apply an abstraction to fresh constants and compare with substitution

    Right abstractions are applied with ``@``, left ones with ``<@``, the
    outermost variable first.
    """
    body = expand(m)
    args = fresh_arguments(len(xs), constants_of(body))
    applied: Term = expand(result)
    for a in args:
        applied = LApp(a, applied) if left else RApp(applied, a)
    expected = substitute_many(body, {x: a for x, a in zip(xs, args)})
    d = oracle_discipline(basis, constants_of(applied) | constants_of(expected))
    return equal(applied, expected, d, fuel)


def tensor_round_trip(m: Term, fuel: int = 1_000_000) -> EqVerdict:
    """The lambda reading of the tensor translation against the source term"""
    d = Discipline.planar_tensor(constants_of(m), eta=True)
    return equal(expand(compile_tensor(m)), m, d, fuel)


def left_inverse_sound(n: Term, m: Term, fuel: int = 1_000_000) -> EqVerdict:
    """n m normalizes to the identity"""
    return equal(RApp(n, m), IDENTITY, Discipline.planar(), fuel)


def random_polynomial(basis: Basis, seed: int, depth: int = 8, var: str = "x") -> CombTerm:
    """
    A random polynomial in one variable that the basis' procedure accepts

    Over S, K the variable may occur any number of times. Elsewhere it
    occurs once; the planar bases keep every operand right of it closed,
    and over B, I, Idot, circ that operand is I.
    """
    rng = random.Random(seed)
    symbols = list(basis.symbols)

    def ground(d: int) -> CombTerm:
        if d <= 0 or rng.random() < 0.4:
            return Sym(rng.choice(symbols))
        if basis.two_sided and rng.random() < 0.5:
            return CLApp(ground(d - 1), ground(d - 1))
        return CApp(ground(d - 1), ground(d - 1))

    def free(d: int) -> CombTerm:
        if d <= 0 or rng.random() < 0.3:
            return CVar(var) if rng.random() < 0.5 else Sym(rng.choice(symbols))
        return CApp(free(d - 1), free(d - 1))

    def once(d: int) -> CombTerm:
        if d <= 0 or rng.random() < 0.25:
            return CVar(var)
        on_left = rng.random() < 0.5
        if basis.two_sided and rng.random() < 0.5:
            return CLApp(once(d - 1), ground(d - 1)) if on_left else CLApp(ground(d - 1), once(d - 1))
        if on_left:
            operand = Sym("I") if basis is Basis.BIIDOTCIRC else ground(d - 1)
            return CApp(once(d - 1), operand)
        return CApp(ground(d - 1), once(d - 1))

    return free(depth) if basis is Basis.SK else once(depth)
