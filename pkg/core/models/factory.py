"""
Structure Factory

Builds any of the workbench's applicative structures from a plain
description, as found in assembly files or assembled from command-line
flags:

    {kind: term, discipline: planar, constants: [], eta: false,
     candidates: {Ix: '\\x y z. x (y z)'}}
    {kind: tree, group: integers, variant: t, bound: 7, alphabet: [0, 1]}
    {kind: magma, file: data/magmas/nonmodest.yaml}
    {kind: magma, elements: [...], table: [[...]], combinators: {...}}
"""

from typing import Any, Dict, Optional

from core.algebra.axioms import CheckMode
from core.algebra.structure import ApplicativeStructure
from core.calculus.rewrite import Strategy
from core.calculus.syntax import Discipline
from core.compile.combterm import SYMBOLS
from core.errors import ConfigurationError
from core.logger import get_logger
from core.models.magma import FiniteMagma, finite_magma, load_magma
from core.models.term_model import TermModel, term_model
from core.models.tree_model import DEFAULT_BOUND, tree_model
from core.models.trees import make_group

logger = get_logger(__name__)

KINDS = ("term", "tree", "magma")


def build_structure(spec: Dict[str, Any], fuel: int = 1_000_000,
                    strategy: Strategy = Strategy()) -> ApplicativeStructure:
    """
    Build a structure from its description

    A term model gets the given candidates, or the standard representatives
    that are valid in its discipline when none are given.

    Raises:
        ConfigurationError: unknown kind or malformed table
        DisciplineError: a candidate is not an element of the term model
    """
    kind = spec.get("kind", "term")
    if kind == "term":
        d = Discipline.named(spec.get("discipline", "planar"), spec.get("constants") or [],
                             spec.get("eta"))
        model = term_model(d, fuel, strategy)
        candidates = spec.get("candidates")
        if candidates:
            for symbol, text in candidates.items():
                model.install_candidate(symbol, text)
        elif spec.get("representatives", True):
            model.install_representatives(SYMBOLS)
        return model

    if kind == "tree":
        group = make_group(spec.get("group", "integers"))
        alphabet = spec.get("alphabet")
        return tree_model(group, spec.get("variant", "t"), int(spec.get("bound", DEFAULT_BOUND)),
                          [str(a) for a in alphabet] if alphabet else None)

    if kind == "magma":
        if spec.get("file"):
            return load_magma(spec["file"])
        rows = [[None if v is None else str(v) for v in row] for row in spec.get("table", [])]
        return finite_magma(rows, [str(e) for e in spec.get("elements", [])],
                            spec.get("name", "magma"), spec.get("combinators"))

    raise ConfigurationError(f"Unknown structure kind: {kind} (expected one of {', '.join(KINDS)})")


def default_mode(A: ApplicativeStructure, n: int = 200, seed: int = 0,
                 name: Optional[str] = None) -> CheckMode:
    """
    The check mode a structure supports best

    Finite magmas are checked exhaustively, term models with fresh
    constants, everything else on samples. ``name`` forces a mode.
    """
    if name == "exhaustive" or (name is None and isinstance(A, FiniteMagma)):
        return CheckMode.exhaustive()
    if name == "fresh-constants" or (name is None and isinstance(A, TermModel)):
        return CheckMode.fresh_constants(n, seed)
    return CheckMode.sampled(n, seed)
