"""
Applicative Morphisms

Total relations between applicative structures, given as element maps to
finite lists of images, with their realizers. Conditions are checked on
sampled elements.
"""

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from core.algebra.structure import ApplicativeStructure
from core.assemblies.assembly import MapReport, MapVerdict
from core.calculus.rewrite import EqVerdict
from core.logger import get_logger

logger = get_logger(__name__)

Elem = Any
Relation = Callable[[Elem], List[Elem]]


@dataclass
class MorphismSpec:
    """
    An applicative morphism gamma: source -> target

    ``realizer`` lies in the target and satisfies r (gamma a) (gamma a')
    below gamma (a a').
    """
    name: str
    source: ApplicativeStructure
    target: ApplicativeStructure
    relation: Relation
    realizer: Optional[Elem] = None

    def __call__(self, a: Elem) -> List[Elem]:
        return self.relation(a)


def identity_morphism(A: ApplicativeStructure) -> MorphismSpec:
    return MorphismSpec(f"id_{A.name}", A, A, lambda a: [a], A.distinguished("I"))


def compose(second: MorphismSpec, first: MorphismSpec) -> MorphismSpec:
    """second after first, without a realizer"""
    return MorphismSpec(f"{second.name}.{first.name}", first.source, second.target,
                        lambda a: [c for b in first(a) for c in second(b)])


@dataclass
class MorphismReport:
    name: str
    items: List[MapReport] = field(default_factory=list)

    @property
    def verdict(self) -> MapVerdict:
        verdicts = {item.verdict for item in self.items}
        if MapVerdict.FAIL in verdicts:
            return MapVerdict.FAIL
        if MapVerdict.UNKNOWN in verdicts:
            return MapVerdict.UNKNOWN
        return MapVerdict.PASS

    @property
    def passed(self) -> bool:
        return self.verdict is MapVerdict.PASS

    def to_dict(self) -> Dict[str, object]:
        return {"name": self.name, "verdict": self.verdict.value,
                "items": [item.to_dict() for item in self.items]}


def _below_some(B: ApplicativeStructure, x: Optional[Elem], targets: Sequence[Elem]) -> EqVerdict:
    if x is None:
        return EqVerdict.NOT_EQUAL if B.undefined_is_exact else EqVerdict.UNKNOWN
    unknown = False
    for t in targets:
        verdict = B.includes(x, t)
        if verdict is EqVerdict.EQUAL:
            return verdict
        unknown = unknown or verdict is EqVerdict.UNKNOWN
    return EqVerdict.UNKNOWN if unknown else EqVerdict.NOT_EQUAL


def _record(report: MapReport, verdict: EqVerdict, witness: Dict[str, str]) -> bool:
    """Fold one instance into the report; True to stop"""
    report.checked += 1
    if verdict is EqVerdict.NOT_EQUAL:
        report.verdict, report.witness = MapVerdict.FAIL, witness
        return True
    if verdict is EqVerdict.UNKNOWN and report.verdict is MapVerdict.PASS:
        report.verdict, report.witness = MapVerdict.UNKNOWN, witness
    return False


def check_realizer(m: MorphismSpec, samples: Sequence[Elem], pairs: Optional[int] = None) -> MapReport:
    """
    Check r (gamma a) (gamma a') below gamma (a a') on sampled pairs

    Args:
        m: Morphism with a realizer
        samples: Source elements
        pairs: Number of pairs (consecutive samples); all pairs when None
    """
    A, B = m.source, m.target
    report = MapReport(f"{m.name} realizer", MapVerdict.PASS)
    if pairs is None:
        instances = list(itertools.product(samples, repeat=2))
    else:
        instances = [(samples[i], samples[(i + 1) % len(samples)]) for i in range(min(pairs, len(samples)))]
    for a, a2 in instances:
        aa = A.rapp(a, a2)
        if aa is None:
            continue
        targets = m(aa)
        for b, b2 in itertools.product(m(a), m(a2)):
            step = B.rapp(m.realizer, b)
            x = None if step is None else B.rapp(step, b2)
            witness = {"a": A.describe(a), "a'": A.describe(a2), "result": B.describe(x)}
            if _record(report, _below_some(B, x, targets), witness):
                return report
    return report


def check_preorder(m1: MorphismSpec, m2: MorphismSpec, r: Elem, samples: Sequence[Elem],
                   name: Optional[str] = None) -> MapReport:
    """m1 below m2 realized by r: r b lies below some image of m2 for b in m1(a)"""
    B = m1.target
    report = MapReport(name or f"{m1.name} <= {m2.name}", MapVerdict.PASS)
    for a in samples:
        targets = m2(a)
        for b in m1(a):
            x = B.rapp(r, b)
            witness = {"a": m1.source.describe(a), "result": B.describe(x)}
            if _record(report, _below_some(B, x, targets), witness):
                return report
    return report


def check_morphism(m: MorphismSpec, samples: Sequence[Elem], pairs: Optional[int] = None) -> MorphismReport:
    """Totality on the samples and the realizer condition"""
    report = MorphismReport(m.name)
    total = MapReport(f"{m.name} total", MapVerdict.PASS)
    for a in samples:
        total.checked += 1
        if not m(a):
            total.verdict, total.witness = MapVerdict.FAIL, {"a": m.source.describe(a)}
            break
    report.items.append(total)
    if m.realizer is not None:
        report.items.append(check_realizer(m, samples, pairs))
    return report


def check_adjoint(delta: MorphismSpec, gamma: MorphismSpec, counit: Elem, unit: Elem,
                  samples_a: Sequence[Elem], samples_b: Sequence[Elem],
                  pairs: Optional[int] = None) -> MorphismReport:
    """
    Check that delta is left adjoint to gamma: A -> B

    The four conditions: both realizers, delta.gamma below id_A (realized by
    ``counit`` in A) and id_B below gamma.delta (realized by ``unit`` in B).
    """
    A, B = gamma.source, gamma.target
    report = MorphismReport(f"{delta.name} -| {gamma.name}")
    report.items.append(check_realizer(gamma, samples_a, pairs))
    report.items.append(check_realizer(delta, samples_b, pairs))
    report.items.append(check_preorder(compose(delta, gamma), identity_morphism(A), counit, samples_a,
                                       f"{delta.name}.{gamma.name} <= id"))
    report.items.append(check_preorder(identity_morphism(B), compose(gamma, delta), unit, samples_b,
                                       f"id <= {gamma.name}.{delta.name}"))
    logger.info(f"Adjoint check {report.name}: {report.verdict.value}")
    return report


def check_comonadic(gamma: MorphismSpec, e: Elem, d: Elem, samples: Sequence[Elem]) -> MorphismReport:
    """
    Check an endomorphism is comonadic: e (gamma a) below a and
    d (gamma a) below gamma (gamma a)
    """
    report = MorphismReport(f"{gamma.name} comonadic")
    report.items.append(check_preorder(gamma, identity_morphism(gamma.source), e, samples, "counit e"))
    report.items.append(check_preorder(gamma, compose(gamma, gamma), d, samples, "comultiplication d"))
    return report
