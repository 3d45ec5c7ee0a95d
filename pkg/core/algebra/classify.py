"""
Classification

Decides which classes of the hierarchy a structure belongs to, relative to
the candidate combinators installed in it. With derivation enabled, passing
a class installs the canonical candidates of the next class along the
inclusion chain.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional

from core.algebra.axioms import Axiom, AxiomReport, AxiomVerdict, CheckMode, check_axiom, load_axioms
from core.algebra.structure import ApplicativeStructure, DerivedView, bi_view
from core.compile.combterm import CombTerm, Hole, interpret
from core.compile.derived import (
    bci_dot, bci_to_bibdi, bibdi_dot, bibdi_to_biilp, bidot_circ, bidot_to_biidotcirc, sk_to_bci,
)
from core.logger import get_logger

logger = get_logger(__name__)

# Inclusion order: each class is contained in the next
CLASS_CHAIN = ["SK", "BCI", "biBDI", "BIILP", "BIIdot", "BIdot", "BIIdotCirc"]

CLASS_AXIOMS: Dict[str, List[str]] = {
    "SK": ["S", "K"],
    "BCI": ["B", "C", "I"],
    "biBDI": ["Br", "Bl", "Dr", "Dl", "Ir", "Il", "dagr", "dagl"],
    "BIILP": ["B", "I", "Ix", "L", "dot"],
    "BIIdot": ["B", "I", "Ix", "dot"],
    "BIdot": ["B", "I", "dot"],
    "BIIdotCirc": ["B", "I", "Idot", "circ"],
}

CANDIDATE_NOTE = ("Classification is relative to the installed candidates: "
                  "a class that is not shown is not refuted.")

MEMBER = "member"
REFUTED = "candidates-refuted"
UNDECIDED = "undecided"
NOT_CHECKED = "not-checked"


@dataclass
class ClassResult:
    name: str
    status: str
    reports: List[AxiomReport] = field(default_factory=list)
    missing: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {"class": self.name, "status": self.status}
        if self.reports:
            data["axioms"] = [r.to_dict() for r in self.reports]
        if self.missing:
            data["missing"] = list(self.missing)
        return data


@dataclass
class Classification:
    structure: str
    mode: str
    results: Dict[str, ClassResult] = field(default_factory=dict)
    derived: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def classes(self) -> List[str]:
        return [name for name in CLASS_CHAIN
                if name in self.results and self.results[name].status == MEMBER]

    def to_dict(self) -> Dict[str, object]:
        return {
            "structure": self.structure,
            "mode": self.mode,
            "classes": self.classes,
            "results": [self.results[name].to_dict() for name in CLASS_CHAIN if name in self.results],
            "derived": list(self.derived),
            "notes": list(self.notes),
        }


def classify(A: ApplicativeStructure,
             candidates: Optional[Mapping[str, object]] = None,
             mode: CheckMode = CheckMode(),
             derive: bool = True,
             unary: Optional[Mapping[str, Callable]] = None,
             axioms: Optional[Mapping[str, Axiom]] = None) -> Classification:
    """
    Classify a structure along the hierarchy

    Args:
        A: Structure (left untouched; candidates go into a view)
        candidates: Symbol to element map of candidate combinators
        mode: Axiom check mode
        derive: Install canonical derived candidates after each passing class
        unary: Extra unary operations by symbol
        axioms: Axiom catalogue (defaults to the shipped file)

    Returns:
        Classification with per-class axiom reports
    """
    axioms = axioms or load_axioms()
    view = DerivedView(A)
    for symbol, elem in (candidates or {}).items():
        view.install(symbol, elem)
    for op, fn in (unary or {}).items():
        view.install_unary(op, fn)

    report = Classification(A.name, mode.describe())
    for name in CLASS_CHAIN:
        if derive:
            view = _derive_before(name, view, report)
        report.results[name] = _check_class(view, name, axioms, mode)
        logger.debug(f"{A.name}: class {name} -> {report.results[name].status}")

    report.notes.append(CANDIDATE_NOTE)
    report.notes.extend(view.open_questions)
    logger.info(f"Classified {A.name}: {', '.join(report.classes) or 'no class shown'}")
    return report


def _passed(report: Classification, name: str) -> bool:
    result = report.results.get(name)
    return result is not None and result.status == MEMBER


def _install_symbols(view: DerivedView, table: Mapping[str, CombTerm], source: str,
                     report: Classification):
    for symbol, expr in table.items():
        if view.distinguished(symbol) is not None:
            continue
        elem = interpret(expr, view)
        if elem is None:
            report.derived.append(f"{symbol} from {source}: undefined")
            continue
        view.install(symbol, elem)
        report.derived.append(f"{symbol} from {source}")


def _install_unary(view: DerivedView, op: str, derivation: Callable[[CombTerm], CombTerm],
                   source: str, report: Classification):
    if view.has_unary(op):
        return
    view.install_unary(op, lambda a: interpret(derivation(Hole(a)), view))
    report.derived.append(f"{op} from {source}")


def _derive_before(name: str, view: DerivedView, report: Classification) -> DerivedView:
    if name == "BCI" and _passed(report, "SK"):
        _install_symbols(view, sk_to_bci(), "SK", report)
    elif name == "biBDI" and _passed(report, "BCI"):
        _install_unary(view, "dot", bci_dot(), "BCI", report)
        if not view.two_sided:
            view = bi_view(view)
            report.derived.append("two-sided reading of BCI (flipped left application)")
        _install_symbols(view, bci_to_bibdi(), "BCI", report)
    elif name == "BIILP" and _passed(report, "biBDI"):
        _install_symbols(view, bibdi_to_biilp(), "biBDI", report)
        _install_unary(view, "dot", bibdi_dot(), "biBDI", report)
    elif name == "BIIdotCirc" and _passed(report, "BIdot"):
        _install_symbols(view, bidot_to_biidotcirc(), "BIdot", report)
        _install_unary(view, "circ", bidot_circ(), "BIdot", report)
    return view


def _check_class(view: DerivedView, name: str, axioms: Mapping[str, Axiom],
                 mode: CheckMode) -> ClassResult:
    result = ClassResult(name, NOT_CHECKED)
    if name == "biBDI" and not view.two_sided:
        result.missing.append("left application")
        return result
    for axiom_name in CLASS_AXIOMS[name]:
        symbols, ops = axioms[axiom_name].requirements()
        result.missing.extend(s for s in sorted(symbols) if view.distinguished(s) is None)
        result.missing.extend(op for op in sorted(ops) if not view.has_unary(op))
    if result.missing:
        result.missing = sorted(set(result.missing))
        return result

    result.reports = [check_axiom(view, axioms[a], mode) for a in CLASS_AXIOMS[name]]
    verdicts = {r.verdict for r in result.reports}
    if verdicts == {AxiomVerdict.HOLDS}:
        result.status = MEMBER
    elif AxiomVerdict.FAILS_AT in verdicts:
        result.status = REFUTED
    else:
        result.status = UNDECIDED
    return result
