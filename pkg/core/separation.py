"""
Separation Checks

A separation argument shows that some structure has no element satisfying
a law. The checks here take concrete candidate combinators and confirm by
normalization that the law instance fails for them. Passing the suite
refutes the listed candidates only; it proves nothing about all candidates.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import yaml

from core.calculus.rewrite import EqVerdict
from core.calculus.syntax import Discipline
from core.compile.combterm import CombTerm, cvars, interpret, parse_equation, render, symbols_of
from core.errors import ConfigurationError, WorkbenchError
from core.logger import get_logger
from core.models.term_model import TermModel, term_model

logger = get_logger(__name__)

DEFAULT_CANDIDATES_FILE = Path(__file__).resolve().parents[1] / "data" / "candidates.yaml"

REFUTATION_NOTE = ("Candidate refutations by normalization: each listed candidate fails its "
                   "law instance. No statement is made about candidates not listed.")


@dataclass
class Candidate:
    """A candidate assignment of combinators and the law instance it must fail"""
    name: str
    refutes: str
    discipline: Discipline
    install: Dict[str, str]
    left: CombTerm
    right: CombTerm
    values: Dict[str, str] = field(default_factory=dict)

    @property
    def instance(self) -> str:
        return f"{render(self.left)} = {render(self.right)}"


@dataclass
class Refutation:
    """Outcome for one candidate"""
    candidate: str
    refutes: str
    instance: str
    verdict: EqVerdict
    sides: Tuple[str, str] = ("", "")
    note: str = ""

    @property
    def refuted(self) -> bool:
        return self.verdict is EqVerdict.NOT_EQUAL

    @property
    def status(self) -> str:
        if self.note and self.verdict is EqVerdict.UNKNOWN:
            return "error"
        return {EqVerdict.NOT_EQUAL: "refuted", EqVerdict.EQUAL: "survives",
                EqVerdict.UNKNOWN: "unknown"}[self.verdict]

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {"candidate": self.candidate, "refutes": self.refutes,
                                   "instance": self.instance, "status": self.status,
                                   "normal_forms": list(self.sides)}
        if self.note:
            data["note"] = self.note
        return data

    def __str__(self):
        text = f"{self.candidate} ({self.refutes}): {self.status}: {self.sides[0]} vs {self.sides[1]}"
        return text + (f" [{self.note}]" if self.note else "")


def _candidate(entry: dict, source: Path) -> Candidate:
    try:
        name = str(entry["name"])
        left, right = parse_equation(str(entry["instance"]))
        d = Discipline.named(entry.get("discipline", "planar"),
                             [str(c) for c in entry.get("constants") or []],
                             entry.get("eta"))
    except KeyError as e:
        raise ConfigurationError(f"{source}: candidate entry misses {e}") from None
    install = {str(k): str(v) for k, v in (entry.get("install") or {}).items()}
    values = {str(k): str(v) for k, v in (entry.get("values") or {}).items()}
    unbound = [v for v in dict.fromkeys(cvars(left) + cvars(right)) if v not in values]
    if unbound:
        raise ConfigurationError(f"{source}: {name} leaves {', '.join(unbound)} unbound")
    return Candidate(name, str(entry.get("refutes", "")), d, install, left, right, values)


def load_candidates(path: Optional[Path] = None) -> List[Candidate]:
    """
    Load the candidates file

    Args:
        path: YAML file with a top-level ``candidates`` list

    Returns:
        Candidates in file order

    Raises:
        ConfigurationError: the file is missing or malformed
    """
    path = Path(path) if path else DEFAULT_CANDIDATES_FILE
    if not path.exists():
        raise ConfigurationError(f"Candidates file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Error parsing {path}: {e}") from None
    entries = data.get("candidates") or []
    if not isinstance(entries, list):
        raise ConfigurationError(f"{path}: 'candidates' must be a list")
    candidates = [_candidate(entry, path) for entry in entries]
    logger.debug(f"Loaded {len(candidates)} candidates from {path}")
    return candidates


def _model(c: Candidate, fuel: int) -> TermModel:
    A = term_model(c.discipline, fuel)
    for symbol, text in c.install.items():
        A.install_candidate(symbol, text)
    symbols, _ops = symbols_of(c.left)
    more, _ = symbols_of(c.right)
    rest = sorted((symbols | more) - set(c.install))
    rejected = A.install_representatives(rest)
    if rejected:
        logger.debug(f"{c.name}: no representative for {', '.join(rejected)}")
    return A


def refute(c: Candidate, fuel: int = 1_000_000) -> Refutation:
    """
    Normalize both sides of the candidate's law instance

    Returns:
        Refutation; the candidate is refuted when the normal forms differ
    """
    try:
        A = _model(c, fuel)
        env = {name: A.element(text) for name, text in c.values.items()}
        left = interpret(c.left, A, env)
        right = interpret(c.right, A, env)
    except WorkbenchError as e:
        return Refutation(c.name, c.refutes, c.instance, EqVerdict.UNKNOWN, note=str(e))
    verdict = A.kleene_eq(left, right)
    return Refutation(c.name, c.refutes, c.instance, verdict, (A.describe(left), A.describe(right)))


def separation_suite(candidates: List[Candidate], fuel: int = 1_000_000) -> List[Refutation]:
    """Refute every candidate; an empty list refutes nothing and fails nothing"""
    results = [refute(c, fuel) for c in candidates]
    for r in results:
        logger.debug(str(r))
    return results
