"""
Assemblies

Finite assemblies over an applicative structure: points carrying non-empty
sets of realizers. Maps are checked pointwise against a realizer; hom
assemblies decide realizers by tracking.
"""

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from core.algebra.structure import ApplicativeStructure
from core.calculus.rewrite import EqVerdict
from core.compile.abstraction import abstract_left
from core.compile.combterm import CApp, CVar, Hole, Sym, interpret
from core.errors import AssemblyError, MissingCombinatorError
from core.logger import get_logger

logger = get_logger(__name__)

Point = Hashable
Elem = Any


class MapVerdict(Enum):
    PASS = "pass"
    FAIL = "fail"
    UNKNOWN = "unknown"


@dataclass
class MapReport:
    """Outcome of a realizer check, with the first failing instance"""
    name: str
    verdict: MapVerdict
    checked: int = 0
    witness: Dict[str, str] = field(default_factory=dict)
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict is MapVerdict.PASS

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {"name": self.name, "verdict": self.verdict.value,
                                   "checked": self.checked}
        if self.witness:
            data["witness"] = dict(self.witness)
        if self.note:
            data["note"] = self.note
        return data

    def __str__(self):
        text = f"{self.name}: {self.verdict.value} ({self.checked} instances)"
        if self.witness:
            text += " at " + ", ".join(f"{k}={v}" for k, v in self.witness.items())
        if self.note:
            text += f" [{self.note}]"
        return text


class Assembly:
    """
    A finite assembly

    Args:
        name: Display name
        structure: Structure the realizers live in
        realizers: Point to non-empty list of realizers

    Raises:
        AssemblyError: a point has no realizer
    """

    def __init__(self, name: str, structure: ApplicativeStructure,
                 realizers: Mapping[Point, Sequence[Elem]]):
        self.name = name
        self.structure = structure
        self._realizers: Dict[Point, List[Elem]] = {p: list(rs) for p, rs in realizers.items()}
        for point, rs in self._realizers.items():
            if not rs:
                raise AssemblyError(f"Point {point!r} of {name} has no realizer")

    @property
    def carrier(self) -> List[Point]:
        return list(self._realizers)

    def realizers(self, point: Point) -> List[Elem]:
        return self._realizers[point]

    def realizes(self, point: Point, a: Elem) -> EqVerdict:
        """Whether a is a realizer of the point"""
        unknown = False
        for r in self._realizers[point]:
            verdict = self.structure.eq(a, r)
            if verdict is EqVerdict.EQUAL:
                return EqVerdict.EQUAL
            unknown = unknown or verdict is EqVerdict.UNKNOWN
        return EqVerdict.UNKNOWN if unknown else EqVerdict.NOT_EQUAL

    def modesty_witness(self) -> Optional[Tuple[Point, Point, Elem]]:
        """Two distinct points sharing a realizer, if any"""
        points = self.carrier
        for i, x in enumerate(points):
            for y in points[i + 1:]:
                for a in self._realizers[x]:
                    if self.realizes(y, a) is EqVerdict.EQUAL:
                        return x, y, a
        return None

    @property
    def modest(self) -> bool:
        return self.modesty_witness() is None

    def describe_point(self, point: Point) -> str:
        return str(point)

    def __repr__(self):
        return f"Assembly({self.name!r}, {len(self._realizers)} points)"


# ----------------------------------------------------------------------------
# Maps
# ----------------------------------------------------------------------------

@dataclass
class AssemblyMap:
    """A function between carriers with a candidate realizer

    ``side`` is ``left`` when the realizer acts by left application.
    """
    source: Assembly
    target: Assembly
    function: Mapping[Point, Point]
    realizer: Elem
    name: str = "map"
    side: str = "right"


def _apply(A: ApplicativeStructure, r: Elem, a: Elem, side: str) -> Optional[Elem]:
    return A.lapp(a, r) if side == "left" else A.rapp(r, a)


def check_map(m: AssemblyMap) -> MapReport:
    """
    Check the realizer condition of a map

    For every point x and every a in its realizers, r a is defined and
    realizes f(x).

    Returns:
        MapReport with the first failing point and realizer
    """
    A = m.source.structure
    report = MapReport(m.name, MapVerdict.PASS)
    for x in m.source.carrier:
        if x not in m.function:
            raise AssemblyError(f"{m.name} is not defined on {x!r}")
        y = m.function[x]
        for a in m.source.realizers(x):
            report.checked += 1
            b = _apply(A, m.realizer, a, m.side)
            witness = {"point": m.source.describe_point(x), "realizer": A.describe(a),
                       "result": A.describe(b)}
            if b is None:
                report.verdict = MapVerdict.FAIL if A.undefined_is_exact else MapVerdict.UNKNOWN
                report.witness, report.note = witness, "application undefined"
                return report
            verdict = m.target.realizes(y, b)
            if verdict is EqVerdict.NOT_EQUAL:
                report.verdict, report.witness = MapVerdict.FAIL, witness
                report.note = f"not a realizer of {m.target.describe_point(y)}"
                return report
            if verdict is EqVerdict.UNKNOWN and report.verdict is MapVerdict.PASS:
                report.verdict, report.witness = MapVerdict.UNKNOWN, witness
    logger.debug(f"check_map {m.name}: {report.verdict.value} over {report.checked} instances")
    return report


def check_multimap(sources: Sequence[Assembly], target: Assembly,
                   function: Mapping[Tuple[Point, ...], Point], realizer: Elem,
                   name: str = "multimap") -> MapReport:
    """
    Check r a1 ... an realizes f(x1, ..., xn) for all points and realizers
    """
    A = target.structure
    report = MapReport(name, MapVerdict.PASS)
    for xs in itertools.product(*(X.carrier for X in sources)):
        if xs not in function:
            raise AssemblyError(f"{name} is not defined on {xs!r}")
        for args in itertools.product(*(X.realizers(x) for X, x in zip(sources, xs))):
            report.checked += 1
            b = realizer
            for a in args:
                b = None if b is None else A.rapp(b, a)
            witness = {"points": ", ".join(X.describe_point(x) for X, x in zip(sources, xs)),
                       "realizers": ", ".join(A.describe(a) for a in args),
                       "result": A.describe(b)}
            if b is None:
                report.verdict = MapVerdict.FAIL if A.undefined_is_exact else MapVerdict.UNKNOWN
                report.witness, report.note = witness, "application undefined"
                return report
            verdict = target.realizes(function[xs], b)
            if verdict is EqVerdict.NOT_EQUAL:
                report.verdict, report.witness = MapVerdict.FAIL, witness
                return report
            if verdict is EqVerdict.UNKNOWN and report.verdict is MapVerdict.PASS:
                report.verdict, report.witness = MapVerdict.UNKNOWN, witness
    return report


def tracks(r: Elem, function: Mapping[Point, Point], X: Assembly, Y: Assembly,
           side: str = "right") -> bool:
    """Whether r realizes the function X -> Y"""
    return check_map(AssemblyMap(X, Y, function, r, side=side)).passed


def search_realizer(function: Mapping[Point, Point], X: Assembly, Y: Assembly,
                    universe: Iterable[Elem], cap: int = 500, side: str = "right") -> Optional[Elem]:
    """First element of the universe realizing the function, if any"""
    for i, r in enumerate(universe):
        if i >= cap:
            break
        if tracks(r, function, X, Y, side):
            return r
    return None


def all_functions(X: Assembly, Y: Assembly) -> List[Dict[Point, Point]]:
    """Every function between the carriers, in a fixed order"""
    return [dict(zip(X.carrier, images))
            for images in itertools.product(Y.carrier, repeat=len(X.carrier))]


# ----------------------------------------------------------------------------
# Constructions
# ----------------------------------------------------------------------------

class HomAssembly(Assembly):
    """
    The hom assembly Y <- X over a realizer universe

    Points are functions tracked by some element of the universe, stored as
    sorted item tuples. A realizer belongs to a point when it tracks the
    function.
    """

    def __init__(self, X: Assembly, Y: Assembly, universe: Sequence[Elem], cap: int = 500,
                 side: str = "right"):
        self.source, self.target, self.side = X, Y, side
        arrow = "-o" if side == "left" else "<-"
        name = f"{X.name} {arrow} {Y.name}" if side == "left" else f"{Y.name} {arrow} {X.name}"
        universe = list(universe)[:cap]
        realizers: Dict[Point, List[Elem]] = {}
        for fn in all_functions(X, Y):
            found = [r for r in universe if tracks(r, fn, X, Y, side)]
            if found:
                realizers[self.point(fn)] = found
        super().__init__(name, X.structure, realizers)
        logger.debug(f"Hom assembly {name}: {len(realizers)} tracked maps")

    @staticmethod
    def point(fn: Mapping[Point, Point]) -> Point:
        return tuple(sorted(fn.items(), key=repr))

    @staticmethod
    def function(point: Point) -> Dict[Point, Point]:
        return dict(point)

    def realizes(self, point: Point, a: Elem) -> EqVerdict:
        report = check_map(AssemblyMap(self.source, self.target, self.function(point), a,
                                       side=self.side))
        if report.verdict is MapVerdict.PASS:
            return EqVerdict.EQUAL
        return EqVerdict.UNKNOWN if report.verdict is MapVerdict.UNKNOWN else EqVerdict.NOT_EQUAL

    def describe_point(self, point: Point) -> str:
        return "{" + ", ".join(f"{x}->{y}" for x, y in point) + "}"


class LeftHomAssembly(HomAssembly):
    """The left hom X -o Y: realizers act by left application"""

    def __init__(self, X: Assembly, Y: Assembly, universe: Sequence[Elem], cap: int = 500):
        super().__init__(X, Y, universe, cap, side="left")


UNIT_POINT = "*"


def unit_assembly(A: ApplicativeStructure, style: str = "P") -> Assembly:
    """
    The unit object: one point realized by I, or by Il for the bi-planar tensor
    """
    symbol = "Il" if style == "bi" else "I"
    elem = A.distinguished(symbol)
    if elem is None:
        raise MissingCombinatorError(symbol, A.name)
    return Assembly("I", A, {UNIT_POINT: [elem]})


def pair_realizer(A: ApplicativeStructure, p: Elem, q: Elem, style: str = "P") -> Optional[Elem]:
    """
    A realizer of a pair: ``P p q``, or ``\\<t. t p q`` for the bi-planar tensor
    """
    if style == "bi":
        body = CApp(CApp(CVar("t"), Hole(p)), Hole(q))
        return interpret(abstract_left(body, "t"), A)
    return interpret(CApp(CApp(Sym("P"), Hole(p)), Hole(q)), A)


def tensor_assembly(X: Assembly, Y: Assembly, A: Optional[ApplicativeStructure] = None,
                    style: str = "P") -> Assembly:
    """
    The tensor X * Y: pairs of points realized by pairs of realizers

    Realizers that are equal in the structure are kept once.

    Raises:
        MissingCombinatorError: P (or the bi-planar combinators) not installed
    """
    A = A or X.structure
    realizers: Dict[Point, List[Elem]] = {}
    for x, y in itertools.product(X.carrier, Y.carrier):
        found: List[Elem] = []
        for p, q in itertools.product(X.realizers(x), Y.realizers(y)):
            elem = pair_realizer(A, p, q, style)
            if elem is None:
                raise AssemblyError(f"Pairing undefined on realizers of ({x}, {y})")
            if not any(A.eq(elem, other) is EqVerdict.EQUAL for other in found):
                found.append(elem)
        realizers[(x, y)] = found
    return Assembly(f"{X.name} * {Y.name}", A, realizers)


def compose_functions(g: Mapping[Point, Point], f: Mapping[Point, Point]) -> Dict[Point, Point]:
    return {x: g[y] for x, y in f.items()}


