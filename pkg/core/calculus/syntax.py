"""
Term Syntax

Unified abstract syntax for the ordinary, linear, planar, planar-with-tensor
and bi-planar lambda calculi, together with:
- Structural disciplines (which structural rules a calculus admits)
- Discipline validation of raw terms
- Ordered free-variable sequences
- Capture-avoiding substitution, alpha-equivalence and pretty printing

Variables are named; binders are freshened on demand during substitution.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple, Union

from core.errors import DisciplineError


# ----------------------------------------------------------------------------
# Terms
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    symbol: str


@dataclass(frozen=True)
class RApp:
    """Right application ``fun arg`` (plain application in one-sided calculi)"""
    fun: "Term"
    arg: "Term"


@dataclass(frozen=True)
class LApp:
    """Left application ``arg <@ fun``: the function sits on the right"""
    arg: "Term"
    fun: "Term"


@dataclass(frozen=True)
class RAbs:
    """Right abstraction (plain abstraction in one-sided calculi)"""
    binder: str
    body: "Term"


@dataclass(frozen=True)
class LAbs:
    binder: str
    body: "Term"


@dataclass(frozen=True)
class Tensor:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class LetPair:
    """``let x * y = scrutinee in body``"""
    x: str
    y: str
    scrutinee: "Term"
    body: "Term"


Term = Union[Var, Const, RApp, LApp, RAbs, LAbs, Tensor, LetPair]


def app(fun: Term, *args: Term) -> Term:
    """Left-nested right application ``fun a1 ... an``"""
    result = fun
    for arg in args:
        result = RApp(result, arg)
    return result


def lam(binders: Union[str, Iterable[str]], body: Term) -> Term:
    """Nested right abstraction over one or more binders"""
    names = binders.split() if isinstance(binders, str) else list(binders)
    result = body
    for name in reversed(names):
        result = RAbs(name, result)
    return result


# ----------------------------------------------------------------------------
# Disciplines
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Discipline:
    """Structural-rule profile selecting a calculus"""
    allow_weakening: bool = False
    allow_contraction: bool = False
    allow_exchange: bool = False
    allow_tensor: bool = False
    allow_left_ops: bool = False
    constants: FrozenSet[str] = field(default_factory=frozenset)
    eta: bool = False
    name: str = "custom"

    def __post_init__(self):
        if self.allow_left_ops and self.allow_tensor:
            raise DisciplineError("Left operations and tensor cannot be combined")
        if not isinstance(self.constants, frozenset):
            object.__setattr__(self, "constants", frozenset(self.constants))

    @classmethod
    def ordinary(cls, constants: Iterable[str] = (), eta: bool = False) -> "Discipline":
        return cls(True, True, True, constants=frozenset(constants), eta=eta, name="ordinary")

    @classmethod
    def linear(cls, constants: Iterable[str] = (), eta: bool = False) -> "Discipline":
        return cls(allow_exchange=True, constants=frozenset(constants), eta=eta, name="linear")

    @classmethod
    def planar(cls, constants: Iterable[str] = (), eta: bool = False) -> "Discipline":
        return cls(constants=frozenset(constants), eta=eta, name="planar")

    @classmethod
    def planar_tensor(cls, constants: Iterable[str] = (), eta: bool = True) -> "Discipline":
        return cls(allow_tensor=True, constants=frozenset(constants), eta=eta, name="planar-tensor")

    @classmethod
    def biplanar(cls, constants: Iterable[str] = (), eta: bool = False) -> "Discipline":
        return cls(allow_left_ops=True, constants=frozenset(constants), eta=eta, name="biplanar")

    @classmethod
    def named(cls, name: str, constants: Iterable[str] = (), eta: Optional[bool] = None) -> "Discipline":
        """
        Build a preset by its CLI name

        Args:
            name: One of ordinary, linear, planar, planar-tensor, biplanar
            constants: Declared constant symbols (without '#')
            eta: Enable eta; None keeps the preset default

        Returns:
            Discipline preset
        """
        factories = {
            "ordinary": cls.ordinary,
            "linear": cls.linear,
            "planar": cls.planar,
            "planar-tensor": cls.planar_tensor,
            "biplanar": cls.biplanar,
        }
        if name not in factories:
            raise DisciplineError(f"Unknown discipline: {name}")
        preset = factories[name](constants)
        return preset if eta is None else preset.with_eta(eta)

    def with_constants(self, constants: Iterable[str]) -> "Discipline":
        return _replace(self, constants=frozenset(self.constants | frozenset(constants)))

    def with_eta(self, eta: bool = True) -> "Discipline":
        return _replace(self, eta=eta)

    @property
    def strongly_normalizing(self) -> bool:
        """Every valid term has a normal form (no contraction)"""
        return not self.allow_contraction

    def describe(self) -> str:
        extras = []
        if self.constants:
            extras.append("constants=" + ",".join(sorted(self.constants)))
        if self.eta:
            extras.append("eta")
        return self.name + (f"[{'; '.join(extras)}]" if extras else "")


def _replace(d: Discipline, **changes) -> Discipline:
    values = dict(
        allow_weakening=d.allow_weakening,
        allow_contraction=d.allow_contraction,
        allow_exchange=d.allow_exchange,
        allow_tensor=d.allow_tensor,
        allow_left_ops=d.allow_left_ops,
        constants=d.constants,
        eta=d.eta,
        name=d.name,
    )
    values.update(changes)
    return Discipline(**values)


# ----------------------------------------------------------------------------
# Validation
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    position: str  # dot-separated child path, "" for the root
    rule: str

    def __str__(self):
        return f"{self.rule} at {self.position or '<root>'}"


@dataclass(frozen=True)
class ValidationReport:
    violations: Tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __repr__(self):
        if self.ok:
            return "ValidationReport(ok=True)"
        return f"ValidationReport(ok=False, violations={[str(v) for v in self.violations]})"


def children(t: Term) -> List[Term]:
    """Immediate subterms in textual order"""
    if isinstance(t, RApp):
        return [t.fun, t.arg]
    if isinstance(t, LApp):
        return [t.arg, t.fun]
    if isinstance(t, (RAbs, LAbs)):
        return [t.body]
    if isinstance(t, Tensor):
        return [t.left, t.right]
    if isinstance(t, LetPair):
        return [t.scrutinee, t.body]
    return []


def validate(t: Term, d: Discipline) -> ValidationReport:
    """
    Check that a raw term is derivable under a discipline

    Binder usage is checked against weakening and contraction. Without
    exchange, a right abstraction must bind the rightmost free variable of
    its body, a left abstraction the leftmost, and a let-pair must bind the
    two rightmost free variables of its body in order.

    Args:
        t: Term to check
        d: Discipline

    Returns:
        ValidationReport listing every violation found
    """
    violations: List[Violation] = []
    _validate(t, d, (), violations)
    return ValidationReport(tuple(violations))


def _validate(t: Term, d: Discipline, path: Tuple[int, ...], out: List[Violation]):
    pos = ".".join(str(i) for i in path)

    if isinstance(t, Const):
        if t.symbol not in d.constants:
            out.append(Violation(pos, "unknown-constant"))
    elif isinstance(t, (LApp, LAbs)) and not d.allow_left_ops:
        out.append(Violation(pos, "left-operation"))
    elif isinstance(t, (Tensor, LetPair)) and not d.allow_tensor:
        out.append(Violation(pos, "tensor"))

    if isinstance(t, (RAbs, LAbs)):
        _check_usage(t.binder, t.body, d, pos, out)
        if not d.allow_exchange:
            seq = free_var_sequence(t.body)
            if t.binder in seq:
                edge = seq[-1] if isinstance(t, RAbs) else seq[0]
                if edge != t.binder:
                    rule = "rightmost-binding" if isinstance(t, RAbs) else "leftmost-binding"
                    out.append(Violation(pos, rule))
    elif isinstance(t, LetPair):
        if t.x == t.y:
            out.append(Violation(pos, "duplicate-binder"))
        _check_usage(t.x, t.body, d, pos, out)
        _check_usage(t.y, t.body, d, pos, out)
        if not d.allow_exchange:
            seq = free_var_sequence(t.body)
            if t.x in seq and t.y in seq and seq[-2:] != [t.x, t.y]:
                out.append(Violation(pos, "let-binding-order"))

    for i, child in enumerate(children(t)):
        _validate(child, d, path + (i,), out)


def _check_usage(x: str, body: Term, d: Discipline, pos: str, out: List[Violation]):
    uses = free_var_sequence(body).count(x)
    if uses == 0 and not d.allow_weakening:
        out.append(Violation(pos, "weakening"))
    elif uses > 1 and not d.allow_contraction:
        out.append(Violation(pos, "contraction"))


# ----------------------------------------------------------------------------
# Free variables
# ----------------------------------------------------------------------------

def free_var_sequence(t: Term) -> List[str]:
    """
    Left-to-right sequence of free-variable occurrences

    For ``N <@ M`` the occurrences of N precede those of M. For a let-pair the
    body's remaining occurrences precede the scrutinee's.

    Args:
        t: Term

    Returns:
        List of variable names, one entry per occurrence
    """
    if isinstance(t, Var):
        return [t.name]
    if isinstance(t, Const):
        return []
    if isinstance(t, (RAbs, LAbs)):
        return [v for v in free_var_sequence(t.body) if v != t.binder]
    if isinstance(t, LetPair):
        body = [v for v in free_var_sequence(t.body) if v not in (t.x, t.y)]
        return body + free_var_sequence(t.scrutinee)
    seq: List[str] = []
    for child in children(t):
        seq.extend(free_var_sequence(child))
    return seq


def free_vars(t: Term) -> Set[str]:
    return set(free_var_sequence(t))


def is_closed(t: Term) -> bool:
    return not free_var_sequence(t)


def constants_of(t: Term) -> Set[str]:
    if isinstance(t, Const):
        return {t.symbol}
    found: Set[str] = set()
    for child in children(t):
        found |= constants_of(child)
    return found


def term_size(t: Term) -> int:
    return 1 + sum(term_size(c) for c in children(t))


def binders_of(t: Term) -> Set[str]:
    names: Set[str] = set()
    if isinstance(t, (RAbs, LAbs)):
        names.add(t.binder)
    elif isinstance(t, LetPair):
        names.update((t.x, t.y))
    for child in children(t):
        names |= binders_of(child)
    return names


# ----------------------------------------------------------------------------
# Substitution
# ----------------------------------------------------------------------------

_SUFFIX = re.compile(r"_\d+$")


def fresh_name(base: str, avoid: Set[str]) -> str:
    """First name ``base_N`` not in ``avoid`` (base itself if free)"""
    if base not in avoid:
        return base
    stem = _SUFFIX.sub("", base)
    n = 1
    while f"{stem}_{n}" in avoid:
        n += 1
    return f"{stem}_{n}"


def substitute(t: Term, x: str, s: Term) -> Term:
    """
    Capture-avoiding substitution t[s/x]

    Args:
        t: Term substituted into
        x: Variable name
        s: Replacement term

    Returns:
        New term with free occurrences of x replaced by s
    """
    return substitute_many(t, {x: s})


def substitute_many(t: Term, mapping: Mapping[str, Term]) -> Term:
    """Simultaneous capture-avoiding substitution"""
    if not mapping:
        return t
    incoming: Set[str] = set()
    for s in mapping.values():
        incoming |= free_vars(s)
    return _subst(t, dict(mapping), incoming)


def _subst(t: Term, mapping: Dict[str, Term], incoming: Set[str]) -> Term:
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    if isinstance(t, Const):
        return t
    if isinstance(t, RApp):
        return RApp(_subst(t.fun, mapping, incoming), _subst(t.arg, mapping, incoming))
    if isinstance(t, LApp):
        return LApp(_subst(t.arg, mapping, incoming), _subst(t.fun, mapping, incoming))
    if isinstance(t, Tensor):
        return Tensor(_subst(t.left, mapping, incoming), _subst(t.right, mapping, incoming))
    if isinstance(t, (RAbs, LAbs)):
        binder, body, inner = _enter_binder(t.binder, t.body, mapping, incoming)
        if not inner:
            return type(t)(binder, body)
        return type(t)(binder, _subst(body, inner, incoming))
    if isinstance(t, LetPair):
        scrutinee = _subst(t.scrutinee, mapping, incoming)
        x, body, inner = _enter_binder(t.x, t.body, mapping, incoming, extra_avoid={t.y})
        y, body, inner = _enter_binder(t.y, body, inner, incoming, extra_avoid={x})
        if inner:
            body = _subst(body, inner, incoming)
        return LetPair(x, y, scrutinee, body)
    raise TypeError(f"Not a term: {t!r}")


def _enter_binder(binder: str, body: Term, mapping: Dict[str, Term], incoming: Set[str],
                  extra_avoid: Optional[Set[str]] = None):
    """Drop a shadowed mapping entry and rename the binder if it would capture"""
    inner = {k: v for k, v in mapping.items() if k != binder}
    if not inner:
        return binder, body, inner
    relevant = free_vars(body)
    if not any(k in relevant for k in inner):
        return binder, body, {}
    if binder in incoming:
        avoid = incoming | relevant | set(inner) | (extra_avoid or set())
        renamed = fresh_name(binder, avoid)
        body = _subst(body, {binder: Var(renamed)}, {renamed})
        binder = renamed
    return binder, body, inner


# ----------------------------------------------------------------------------
# Alpha-equivalence
# ----------------------------------------------------------------------------

def alpha_key(t: Term) -> tuple:
    """Nameless structural key: alpha-equivalent terms have equal keys"""
    return _key(t, {}, 0)


def _key(t: Term, env: Dict[str, int], depth: int) -> tuple:
    if isinstance(t, Var):
        return ("b", depth - env[t.name]) if t.name in env else ("f", t.name)
    if isinstance(t, Const):
        return ("c", t.symbol)
    if isinstance(t, RApp):
        return ("@", _key(t.fun, env, depth), _key(t.arg, env, depth))
    if isinstance(t, LApp):
        return ("<@", _key(t.arg, env, depth), _key(t.fun, env, depth))
    if isinstance(t, Tensor):
        return ("*", _key(t.left, env, depth), _key(t.right, env, depth))
    if isinstance(t, (RAbs, LAbs)):
        tag = "\\" if isinstance(t, RAbs) else "\\<"
        return (tag, _key(t.body, {**env, t.binder: depth + 1}, depth + 1))
    if isinstance(t, LetPair):
        inner = {**env, t.x: depth + 1, t.y: depth + 2}
        return ("let", _key(t.scrutinee, env, depth), _key(t.body, inner, depth + 2))
    raise TypeError(f"Not a term: {t!r}")


def alpha_eq(t1: Term, t2: Term) -> bool:
    return alpha_key(t1) == alpha_key(t2)


# ----------------------------------------------------------------------------
# Pretty printing
# ----------------------------------------------------------------------------

# Precedence levels: 0 binders, 1 tensor, 2 left application, 3 application, 4 atom
def pretty(t: Term) -> str:
    """Render a term in the concrete grammar (parseable back)"""
    return _pretty(t, 0)


def _pretty(t: Term, level: int) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return f"#{t.symbol}"
    if isinstance(t, (RAbs, LAbs)):
        text = _pretty_binders(t)
        return f"({text})" if level > 0 else text
    if isinstance(t, LetPair):
        text = f"let {t.x}*{t.y} = {_pretty(t.scrutinee, 0)} in {_pretty(t.body, 0)}"
        return f"({text})" if level > 0 else text
    if isinstance(t, Tensor):
        text = f"{_pretty(t.left, 1)} * {_pretty(t.right, 2)}"
        return f"({text})" if level > 1 else text
    if isinstance(t, LApp):
        text = f"{_pretty(t.arg, 2)} <@ {_pretty(t.fun, 3)}"
        return f"({text})" if level > 2 else text
    if isinstance(t, RApp):
        text = f"{_pretty(t.fun, 3)} {_pretty(t.arg, 4)}"
        return f"({text})" if level > 3 else text
    raise TypeError(f"Not a term: {t!r}")


def _pretty_binders(t: Union[RAbs, LAbs]) -> str:
    kind = type(t)
    names = []
    body: Term = t
    while isinstance(body, kind):
        names.append(body.binder)
        body = body.body
    lead = "\\" if kind is RAbs else "\\<"
    return f"{lead}{' '.join(names)}. {_pretty(body, 0)}"
