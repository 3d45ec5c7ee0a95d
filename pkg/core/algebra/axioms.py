"""
Axioms

Combinator laws as equations between CombTerms with variables, loaded from
a declarative text file, and their checking in an applicative structure.

    -- comment
    axiom B: B x y z = x (y z)
"""

import itertools
import random
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from core.algebra.structure import ApplicativeStructure
from core.calculus.rewrite import EqVerdict
from core.compile.combterm import CombTerm, cvars, interpret, parse_equation, render, symbols_of
from core.errors import ConfigurationError, MissingCombinatorError, TermSyntaxError, UnsupportedModeError
from core.logger import get_logger

logger = get_logger(__name__)

DEFAULT_AXIOMS_FILE = Path(__file__).resolve().parents[2] / "data" / "axioms.txt"

_AXIOM_LINE = re.compile(r"^axiom\s+([A-Za-z][A-Za-z0-9_]*)\s*:\s*(.+)$")


@dataclass(frozen=True)
class Axiom:
    name: str
    left: CombTerm
    right: CombTerm
    vars: Tuple[str, ...]

    @classmethod
    def from_text(cls, name: str, text: str) -> "Axiom":
        left, right = parse_equation(text)
        names = list(dict.fromkeys(cvars(left) + cvars(right)))
        return cls(name, left, right, tuple(names))

    def requirements(self) -> Tuple[set, set]:
        """(symbols, unary ops) the axiom mentions"""
        ls, lo = symbols_of(self.left)
        rs, ro = symbols_of(self.right)
        return ls | rs, lo | ro

    def __str__(self):
        return f"{render(self.left)} = {render(self.right)}"


def load_axioms(path: Optional[Path] = None) -> Dict[str, Axiom]:
    """
    Load axiom definitions

    Args:
        path: Axioms file (defaults to the shipped catalogue)

    Returns:
        Mapping from axiom name to Axiom, in file order
    """
    path = Path(path) if path else DEFAULT_AXIOMS_FILE
    if not path.exists():
        raise ConfigurationError(f"Axioms file not found: {path}")

    axioms: Dict[str, Axiom] = {}
    with open(path, "r", encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.split("--", 1)[0].strip()
            if not line:
                continue
            match = _AXIOM_LINE.match(line)
            if not match:
                raise TermSyntaxError(f"{path.name}: expected 'axiom NAME: lhs = rhs'", lineno, 1)
            name, equation = match.groups()
            axioms[name] = Axiom.from_text(name, equation)
    logger.debug(f"Loaded {len(axioms)} axioms from {path}")
    return axioms


# ----------------------------------------------------------------------------
# Checking
# ----------------------------------------------------------------------------

class ModeKind(Enum):
    FRESH_CONSTANTS = "fresh-constants"
    SAMPLED = "sampled"
    EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class CheckMode:
    kind: ModeKind = ModeKind.FRESH_CONSTANTS
    n: int = 200
    seed: int = 0

    @classmethod
    def fresh_constants(cls, n: int = 200, seed: int = 0) -> "CheckMode":
        """n and seed drive the sampled confirmation of a failure"""
        return cls(ModeKind.FRESH_CONSTANTS, n, seed)

    @classmethod
    def sampled(cls, n: int = 200, seed: int = 0) -> "CheckMode":
        return cls(ModeKind.SAMPLED, n, seed)

    @classmethod
    def exhaustive(cls) -> "CheckMode":
        return cls(ModeKind.EXHAUSTIVE)

    def describe(self) -> str:
        if self.kind is ModeKind.SAMPLED:
            return f"sampled(n={self.n}, seed={self.seed})"
        return self.kind.value


class AxiomVerdict(Enum):
    HOLDS = "Holds"
    FAILS_AT = "FailsAt"
    UNKNOWN = "Unknown"


@dataclass
class AxiomReport:
    axiom: str
    mode: str
    verdict: AxiomVerdict
    witness: Dict[str, str] = field(default_factory=dict)
    sides: Tuple[str, str] = ("", "")
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.verdict is AxiomVerdict.HOLDS

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {"axiom": self.axiom, "mode": self.mode, "verdict": self.verdict.value}
        if self.witness:
            data["witness"] = dict(self.witness)
            data["sides"] = list(self.sides)
        if self.note:
            data["note"] = self.note
        return data

    def __str__(self):
        text = f"{self.axiom}: {self.verdict.value} [{self.mode}]"
        if self.witness:
            assignment = ", ".join(f"{k}={v}" for k, v in self.witness.items())
            text += f" at {assignment}: {self.sides[0]} vs {self.sides[1]}"
        if self.note:
            text += f" ({self.note})"
        return text


def _require(A: ApplicativeStructure, ax: Axiom):
    symbols, ops = ax.requirements()
    for symbol in sorted(symbols):
        if A.distinguished(symbol) is None:
            raise MissingCombinatorError(symbol, A.name)
    for op in sorted(ops):
        if not A.has_unary(op):
            raise MissingCombinatorError(op, A.name)


def _instance(A: ApplicativeStructure, ax: Axiom, values) -> Tuple[EqVerdict, object, object]:
    env = dict(zip(ax.vars, values))
    left = interpret(ax.left, A, env)
    right = interpret(ax.right, A, env)
    return A.kleene_eq(left, right), left, right


def _witness(A: ApplicativeStructure, ax: Axiom, values) -> Dict[str, str]:
    return {name: A.describe(v) for name, v in zip(ax.vars, values)}


def check_axiom(A: ApplicativeStructure, ax: Axiom, mode: CheckMode = CheckMode()) -> AxiomReport:
    """
    Check one axiom in a structure

    Fresh-constant mode decides the generic instance; a pass is universal by
    substitutivity. A generic failure is confirmed by sampling closed
    instances and is Unknown when no closed counterexample turns up.
    Sampled mode checks n random tuples; exhaustive mode every tuple of a
    finite carrier.

    Args:
        A: Structure with every symbol of the axiom installed
        ax: Axiom
        mode: Check mode

    Returns:
        AxiomReport

    Raises:
        MissingCombinatorError: a symbol or operation is not installed
        UnsupportedModeError: the structure cannot run the mode
    """
    _require(A, ax)

    if mode.kind is ModeKind.FRESH_CONSTANTS:
        generic = A.fresh_constants(len(ax.vars))
        if generic is None:
            raise UnsupportedModeError(f"{A.name} has no fresh constants")
        verdict, left, right = _instance(A, ax, generic)
        if verdict is EqVerdict.EQUAL:
            return AxiomReport(ax.name, mode.describe(), AxiomVerdict.HOLDS)
        sides = (A.describe(left), A.describe(right))
        if verdict is EqVerdict.UNKNOWN:
            return AxiomReport(ax.name, mode.describe(), AxiomVerdict.UNKNOWN,
                               _witness(A, ax, generic), sides, "fuel exhausted")
        confirmed = _sampled(A, ax, CheckMode.sampled(mode.n, mode.seed))
        if confirmed.verdict is AxiomVerdict.FAILS_AT:
            confirmed.mode = mode.describe()
            return confirmed
        return AxiomReport(ax.name, mode.describe(), AxiomVerdict.UNKNOWN,
                           _witness(A, ax, generic), sides,
                           "fails on the generic instance only; no closed counterexample sampled")

    if mode.kind is ModeKind.EXHAUSTIVE:
        elems = A.carrier()
        if elems is None:
            raise UnsupportedModeError(f"{A.name} has no finite carrier")
        for values in itertools.product(elems, repeat=len(ax.vars)):
            verdict, left, right = _instance(A, ax, values)
            if verdict is not EqVerdict.EQUAL:
                return _failure(A, ax, mode, verdict, values, left, right)
        return AxiomReport(ax.name, mode.describe(), AxiomVerdict.HOLDS)

    return _sampled(A, ax, mode)


def _sampled(A: ApplicativeStructure, ax: Axiom, mode: CheckMode) -> AxiomReport:
    pool = A.sample(mode.seed, max(mode.n, 1))
    if not pool:
        return AxiomReport(ax.name, mode.describe(), AxiomVerdict.UNKNOWN, note="empty sample")
    rng = random.Random(mode.seed)
    unknown = None
    tuples = [tuple(rng.choice(pool) for _ in ax.vars) for _ in range(mode.n)]
    for values in tuples:
        verdict, left, right = _instance(A, ax, values)
        if verdict is EqVerdict.NOT_EQUAL:
            return _failure(A, ax, mode, verdict, values, left, right)
        if verdict is EqVerdict.UNKNOWN and unknown is None:
            unknown = (values, left, right)
    if unknown is not None:
        values, left, right = unknown
        return _failure(A, ax, mode, EqVerdict.UNKNOWN, values, left, right)
    logger.debug(f"{ax.name}: {len(tuples)} sampled instances agree in {A.name}")
    return AxiomReport(ax.name, mode.describe(), AxiomVerdict.HOLDS)


def _failure(A, ax, mode, verdict, values, left, right) -> AxiomReport:
    kind = AxiomVerdict.FAILS_AT if verdict is EqVerdict.NOT_EQUAL else AxiomVerdict.UNKNOWN
    note = "" if kind is AxiomVerdict.FAILS_AT else "undecided instance"
    return AxiomReport(ax.name, mode.describe(), kind, _witness(A, ax, values),
                       (A.describe(left), A.describe(right)), note)
