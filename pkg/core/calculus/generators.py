"""
Term Generators

Seeded random generators for discipline-valid terms, closed planar normal
forms, one-hole contexts and call-by-value evaluation contexts. Every
generator takes an integer seed and is reproducible.

Linear-style generators build a term whose free-variable sequence is exactly
a given context: planar splits keep the context order, linear splits take
arbitrary sub-sequences. Ordinary terms draw variables from a scope.
"""

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence

from core.calculus.syntax import (
    Const, Discipline, LAbs, LApp, LetPair, RAbs, RApp, Tensor, Term, Var,
    substitute,
)
from core.calculus.rewrite import normal_form

HOLE = "hole"


class _Gen:
    """Generator state: random source and binder counter"""

    def __init__(self, d: Discipline, seed: int):
        self.d = d
        self.rng = random.Random(seed)
        self.counter = 0

    def fresh(self) -> str:
        name = f"v{self.counter}"
        self.counter += 1
        return name

    def closed_atom(self) -> Term:
        if self.d.constants and self.rng.random() < 0.5:
            return Const(self.rng.choice(sorted(self.d.constants)))
        if self.d.allow_left_ops and self.rng.random() < 0.5:
            v = self.fresh()
            return LAbs(v, Var(v))
        v = self.fresh()
        return RAbs(v, Var(v))

    # ------------------------------------------------------------------
    # Linear-style generation (planar, tensor, bi-planar, linear)
    # ------------------------------------------------------------------

    def ordered(self, ctx: List[str], depth: int) -> Term:
        """A term whose free-variable sequence equals ctx"""
        rng = self.rng
        if len(ctx) == 1 and (depth <= 0 or rng.random() < 0.3):
            return Var(ctx[0])
        if not ctx and (depth <= 0 or rng.random() < 0.25):
            return self.closed_atom()
        if depth <= 0:
            return self._split(ctx, depth)

        choices = ["abs", "app"]
        if self.d.allow_left_ops:
            choices += ["labs", "lapp"]
        if self.d.allow_tensor:
            choices += ["pair", "let"]
        kind = rng.choice(choices)

        if kind == "abs":
            v = self.fresh()
            if self.d.allow_exchange:
                body_ctx = list(ctx)
                body_ctx.insert(rng.randint(0, len(ctx)), v)
            else:
                body_ctx = ctx + [v]
            return RAbs(v, self.ordered(body_ctx, depth - 1))
        if kind == "labs":
            v = self.fresh()
            return LAbs(v, self.ordered([v] + ctx, depth - 1))
        if kind == "let":
            x, y = self.fresh(), self.fresh()
            k = rng.randint(0, len(ctx))
            body = self.ordered(ctx[:k] + [x, y], depth - 1)
            scrutinee = self.ordered(ctx[k:], depth - 1)
            return LetPair(x, y, scrutinee, body)
        return self._split(ctx, depth, kind)

    def _split(self, ctx: List[str], depth: int, kind: str = "app") -> Term:
        rng = self.rng
        if len(ctx) > 1:
            k = rng.randint(1, len(ctx) - 1)
        else:
            k = rng.randint(0, len(ctx))
        if self.d.allow_exchange:
            picked = set(rng.sample(range(len(ctx)), k))
            left = [v for i, v in enumerate(ctx) if i in picked]
            right = [v for i, v in enumerate(ctx) if i not in picked]
        else:
            left, right = ctx[:k], ctx[k:]
        a = self.ordered(left, depth - 1)
        b = self.ordered(right, depth - 1)
        if kind == "lapp":
            return LApp(a, b)
        if kind == "pair":
            return Tensor(a, b)
        return RApp(a, b)

    # ------------------------------------------------------------------
    # Ordinary generation
    # ------------------------------------------------------------------

    def scoped(self, scope: List[str], depth: int) -> Term:
        rng = self.rng
        if depth <= 0 or rng.random() < 0.2:
            if scope and rng.random() < 0.8:
                return Var(rng.choice(scope))
            return self.closed_atom()
        if rng.random() < 0.5:
            v = self.fresh()
            return RAbs(v, self.scoped(scope + [v], depth - 1))
        return RApp(self.scoped(scope, depth - 1), self.scoped(scope, depth - 1))


def random_term(d: Discipline, seed: int, depth: int = 5,
                context: Optional[Sequence[str]] = None) -> Term:
    """
    Generate a random term valid under a discipline

    Args:
        d: Discipline the term must validate under
        seed: Random seed
        depth: Soft depth bound for constructors
        context: Free variables of the result, in order (closed when None)

    Returns:
        Generated term
    """
    gen = _Gen(d, seed)
    ctx = list(context or [])
    if d.allow_contraction and d.allow_weakening:
        return gen.scoped(ctx, depth)
    return gen.ordered(ctx, depth)


def random_closed_normal_planar(seed: int, depth: int = 5) -> Term:
    """A closed, constant-free, beta-normal planar term"""
    d = Discipline.planar()
    return normal_form(random_term(d, seed, depth), d)


@dataclass(frozen=True)
class OneHoleContext:
    """A term with exactly one occurrence of the hole variable"""
    term: Term
    hole: str = HOLE

    def plug(self, t: Term) -> Term:
        return substitute(self.term, self.hole, t)


def random_context(d: Discipline, seed: int, depth: int = 4) -> OneHoleContext:
    """
    Generate a one-hole context valid under d

    Plugging any closed term valid under d yields a valid term. Ordinary
    contexts are drawn from the linear generator so the hole occurs once.
    """
    if d.allow_contraction and d.allow_weakening:
        d = Discipline.linear(d.constants)
    return OneHoleContext(_Gen(d, seed).ordered([HOLE], depth))


def random_value(seed: int, depth: int = 3, scope: Sequence[str] = ()) -> Term:
    """A call-by-value value: a variable from scope or an abstraction"""
    gen = _Gen(Discipline.ordinary(), seed)
    if scope and gen.rng.random() < 0.4:
        return Var(gen.rng.choice(list(scope)))
    v = gen.fresh()
    return RAbs(v, gen.scoped(list(scope) + [v], depth))


def random_evaluation_context(seed: int, depth: int = 2,
                              scope: Sequence[str] = ()) -> OneHoleContext:
    """
    A call-by-value evaluation context

    E ::= [] | E N | V E
    """
    gen = _Gen(Discipline.ordinary(), seed)
    term: Term = Var(HOLE)
    for i in range(gen.rng.randint(0, depth)):
        if gen.rng.random() < 0.5:
            term = RApp(term, gen.scoped(list(scope), 2))
        else:
            term = RApp(random_value(seed * 31 + i, 2, scope), term)
    return OneHoleContext(term)
