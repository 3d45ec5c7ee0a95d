"""
Left Inverses

Every closed constant-free planar term M has a closed planar N with
N M = \\x.x. The construction recurses on the beta-normal form
M = \\x y1 .. ym. x P1 .. Pn.
"""

from typing import List, Tuple

from core.calculus.rewrite import normal_form
from core.calculus.syntax import (
    Discipline, RAbs, RApp, Term, Var, alpha_eq, app, constants_of, is_closed,
    pretty, substitute_many, validate,
)
from core.errors import TranslationError
from core.logger import get_logger

logger = get_logger(__name__)

PLANAR = Discipline.planar()
IDENTITY = RAbs("x", Var("x"))


def _spine(t: Term) -> Tuple[Term, List[Term]]:
    args: List[Term] = []
    while isinstance(t, RApp):
        args.append(t.arg)
        t = t.fun
    return t, list(reversed(args))


def left_inverse(m: Term) -> Term:
    """
    Construct a left inverse of a closed planar term

    Args:
        m: Closed, constant-free term valid under the planar discipline

    Returns:
        Closed planar N with N m beta-equal to \\x.x

    Raises:
        TranslationError: m has constants, is open or is not planar
    """
    if constants_of(m):
        raise TranslationError("left_inverse needs a constant-free term")
    if not is_closed(m):
        raise TranslationError(f"left_inverse needs a closed term: {pretty(m)}")
    if not validate(m, PLANAR).ok:
        raise TranslationError(f"left_inverse needs a planar term: {pretty(m)}")
    return _left_inverse(normal_form(m, PLANAR), 0)


def _left_inverse(m: Term, depth: int) -> Term:
    if alpha_eq(m, IDENTITY):
        return IDENTITY

    binders: List[str] = []
    body = m
    while isinstance(body, RAbs):
        binders.append(body.binder)
        body = body.body
    head, args = _spine(body)
    if not binders or not isinstance(head, Var) or head.name != binders[0]:
        raise TranslationError(f"Unexpected planar normal form: {pretty(m)}")

    x, ys = binders[0], binders[1:]
    ident = {y: IDENTITY for y in ys}
    logger.debug(f"left_inverse depth {depth}: {len(args)} arguments, {len(ys)} extra binders")

    ws = [f"w{i}" for i in range(len(args))]
    parts = []
    for w, arg in zip(ws, args):
        q = normal_form(substitute_many(arg, ident), PLANAR)
        parts.append(RApp(_left_inverse(q, depth + 1), Var(w)))
    inner: Term = app(parts[0], *parts[1:]) if parts else IDENTITY
    n_prime = inner
    for w in reversed(ws):
        n_prime = RAbs(w, n_prime)

    u = "u"
    return RAbs(u, app(Var(u), n_prime, *([IDENTITY] * len(ys))))
