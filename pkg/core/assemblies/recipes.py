"""
Realizer Recipes

Builds the realizers of the categorical structure of assemblies (closed
multicategory, closed category, monoidal closed, monoidal bi-closed) as
combinator expressions, compiles them by bracket abstraction and checks
them on given finite assemblies. The data checked depend on which
combinators the structure has.
"""

import itertools
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from core.algebra.structure import ApplicativeStructure, DerivedView
from core.calculus.rewrite import EqVerdict
from core.assemblies.assembly import (
    Assembly, AssemblyMap, HomAssembly, LeftHomAssembly, MapReport, MapVerdict, Point,
    all_functions, check_map, check_multimap, compose_functions, search_realizer,
    tensor_assembly, unit_assembly, UNIT_POINT,
)
from core.compile.abstraction import abstract_left, abstract_many, abstract_right
from core.compile.combterm import Basis, CApp, CLApp, CVar, CombTerm, Hole, Sym, UnaryOp, capp, interpret
from core.compile.derived import bibdi_dot, bibdi_to_biilp
from core.logger import get_logger

logger = get_logger(__name__)

INSTANCE_NOTE = "Recipes verified on the given instances only."

BI_SYMBOLS = ("Br", "Bl", "Dr", "Dl", "Ir", "Il")


@dataclass
class SuiteReport:
    structure: str
    items: List[MapReport] = field(default_factory=list)
    skipped: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def verdict(self) -> MapVerdict:
        verdicts = {item.verdict for item in self.items}
        if MapVerdict.FAIL in verdicts:
            return MapVerdict.FAIL
        if MapVerdict.UNKNOWN in verdicts:
            return MapVerdict.UNKNOWN
        return MapVerdict.PASS

    def to_dict(self) -> Dict[str, object]:
        return {
            "structure": self.structure,
            "verdict": self.verdict.value,
            "items": [item.to_dict() for item in self.items],
            "skipped": list(self.skipped),
            "notes": list(self.notes),
        }


@dataclass
class RealizedMap:
    """A function with a realizer found for it"""
    function: Dict[Point, Point]
    realizer: Any


def prepare(A: ApplicativeStructure) -> DerivedView:
    """
    A view with the derived combinators a recipe may need

    A two-sided structure with the bi-BDI set gets B, I, Ix, L, P and dot
    by two-sided abstraction.
    """
    view = DerivedView(A)
    if A.two_sided and all(A.distinguished(s) is not None for s in BI_SYMBOLS):
        for symbol, expr in bibdi_to_biilp().items():
            if view.distinguished(symbol) is None:
                elem = interpret(expr, view)
                if elem is not None:
                    view.install(symbol, elem)
        if not view.has_unary("dot"):
            derivation = bibdi_dot()
            view.install_unary("dot", lambda a: interpret(derivation(Hole(a)), view))
    return view


class Recipes:
    """Realizer constructions over one structure"""

    def __init__(self, view: DerivedView):
        self.view = view
        self.bi = view.two_sided and all(view.distinguished(s) is not None for s in BI_SYMBOLS)
        self.basis = Basis.BIBDI if self.bi else Basis.BIDOT

    def has(self, *symbols: str) -> bool:
        return all(self.view.distinguished(s) is not None for s in symbols)

    def elem(self, expr: CombTerm):
        return interpret(expr, self.view)

    def lam(self, body: CombTerm, *xs: str):
        """Right-abstract xs (outermost first) and evaluate"""
        return self.elem(abstract_many(body, xs, self.basis))

    # closed multicategory
    def composition(self, r_g, r_f):
        return self.elem(capp(Sym("B"), Hole(r_g), Hole(r_f)))

    def hom_action(self, r_g, r_f):
        body = CApp(Hole(r_g), CApp(CVar("u"), CApp(Hole(r_f), CVar("v"))))
        return self.lam(body, "u", "v")

    # closed category
    def unit_inverse(self):
        return self.elem(UnaryOp("dot", Sym("I")))

    # monoidal closed
    def tensor_map(self, r_f, r_g):
        body = capp(Sym("P"), CApp(Hole(r_f), CVar("p")), CApp(Hole(r_g), CVar("q")))
        return self.elem(CApp(Sym("L"), abstract_many(body, ["p", "q"], self.basis)))

    def right_unitor_inverse(self):
        return self.lam(capp(Sym("P"), CVar("p"), Sym("I")), "p")

    def associator(self):
        body = capp(Sym("P"), CVar("p"), capp(Sym("P"), CVar("q"), CVar("r")))
        inner = abstract_many(body, ["p", "q", "r"], self.basis)
        return self.elem(CApp(Sym("L"), CApp(Sym("L"), inner)))

    def associator_inverse(self):
        body = capp(Sym("P"), capp(Sym("P"), CVar("p"), CVar("q")), CVar("r"))
        inner = CApp(Sym("L"), abstract_many(body, ["q", "r"], self.basis))
        return self.elem(CApp(Sym("L"), abstract_many(inner, ["p"], self.basis)))

    def tensor_curry(self, r_h):
        body = CApp(Hole(r_h), capp(Sym("P"), CVar("a"), CVar("b")))
        return self.lam(body, "a", "b")

    # monoidal bi-closed
    def bi_tensor_map(self, r_f, r_g):
        inner = abstract_many(capp(CVar("t"), CApp(Hole(r_f), CVar("p")), CApp(Hole(r_g), CVar("q"))),
                              ["p", "q"], Basis.BIBDI)
        return self.elem(abstract_right(abstract_left(CLApp(inner, CVar("s")), "t"), "s"))

    def bi_eval(self, inner: CombTerm):
        """``\\>s. inner <@ s``: hand the pair's components to inner"""
        return self.elem(abstract_right(CLApp(inner, CVar("s")), "s"))

    def bi_pair(self, a: CombTerm, b: CombTerm) -> CombTerm:
        return abstract_left(capp(CVar("t"), a, b), "t")

    def left_curry(self, r_h):
        body = CApp(Hole(r_h), self.bi_pair(CVar("a"), CVar("b")))
        return self.elem(abstract_right(abstract_left(body, "a"), "b"))

    def left_hom_action(self, r_g, r_f):
        body = CApp(Hole(r_g), CLApp(CApp(Hole(r_f), CVar("v")), CVar("u")))
        return self.elem(abstract_right(abstract_left(body, "v"), "u"))


def default_universe(view: DerivedView, assemblies: Sequence[Assembly], cap: int = 500) -> List[Any]:
    """Distinguished elements, dot(I) and every realizer, without repeats"""
    out: List[Any] = []

    def add(elem):
        if elem is not None and len(out) < cap and not any(view.eq(elem, o) is EqVerdict.EQUAL for o in out):
            out.append(elem)

    for symbol in view.installed_symbols():
        add(view.distinguished(symbol))
    if view.has_unary("dot") and view.distinguished("I") is not None:
        add(view.unary("dot", view.distinguished("I")))
    for X in assemblies:
        for x in X.carrier:
            for a in X.realizers(x):
                add(a)
    return out


def find_map(X: Assembly, Y: Assembly, universe: Sequence[Any], cap: int) -> Optional[RealizedMap]:
    for fn in all_functions(X, Y):
        r = search_realizer(fn, X, Y, universe, cap)
        if r is not None:
            return RealizedMap(fn, r)
    return None


def find_multimap(X: Assembly, Y: Assembly, Z: Assembly, universe: Sequence[Any],
                  cap: int) -> Optional[RealizedMap]:
    pairs = list(itertools.product(X.carrier, Y.carrier))
    for images in itertools.product(Z.carrier, repeat=len(pairs)):
        fn = dict(zip(pairs, images))
        for r in list(universe)[:cap]:
            if check_multimap([X, Y], Z, fn, r).passed:
                return RealizedMap(fn, r)
    return None


def closed_structure_suite(A: ApplicativeStructure, X: Assembly, Y: Assembly, Z: Assembly,
                           maps: Optional[Mapping[str, RealizedMap]] = None,
                           universe: Optional[Sequence[Any]] = None,
                           cap: int = 500) -> SuiteReport:
    """
    Check the realizer recipes on given assemblies

    Args:
        A: Structure with candidate combinators installed
        X, Y, Z: Finite assemblies over A
        maps: Optional ``f`` (X -> Y), ``g`` (Y -> Z) and ``h`` (X, Y -> Z)
        universe: Realizer universe for hom assemblies and searches
        cap: Universe cap

    Returns:
        SuiteReport with one item per checked datum
    """
    view = prepare(A)
    rec = Recipes(view)
    report = SuiteReport(A.name, notes=[INSTANCE_NOTE])
    universe = list(universe) if universe is not None else default_universe(view, [X, Y, Z], cap)
    maps = dict(maps or {})

    def add(item: MapReport):
        report.items.append(item)
        logger.debug(f"suite {A.name}: {item}")

    if not rec.has("B", "I"):
        report.skipped.append("all data: B and I not installed")
        return report

    f = maps.get("f") or find_map(X, Y, universe, cap)
    g = maps.get("g") or find_map(Y, Z, universe, cap)
    h = maps.get("h") or find_multimap(X, Y, Z, universe, cap)

    # closed multicategory
    I = view.distinguished("I")
    add(check_map(AssemblyMap(X, X, {x: x for x in X.carrier}, I, "identity")))
    hom_xy = HomAssembly(X, Y, universe, cap)
    add(check_multimap([hom_xy, X], Y, {(u, x): dict(u)[x] for u in hom_xy.carrier for x in X.carrier},
                       I, "evaluation"))
    if f and g:
        add(check_map(AssemblyMap(X, Z, compose_functions(g.function, f.function),
                                  rec.composition(g.realizer, f.realizer), "composition")))
        hom_yy, hom_xz = HomAssembly(Y, Y, universe, cap), HomAssembly(X, Z, universe, cap)
        action = {u: HomAssembly.point(compose_functions(g.function, compose_functions(dict(u), f.function)))
                  for u in hom_yy.carrier}
        add(check_map(AssemblyMap(hom_yy, hom_xz, action, rec.hom_action(g.realizer, f.realizer),
                                  "hom action g<-f")))
    else:
        report.skipped.append("composition and hom action: no realized maps X->Y, Y->Z in the universe")
    if h:
        hom_zy = HomAssembly(Y, Z, universe, cap)
        curried = {x: HomAssembly.point({y: h.function[(x, y)] for y in Y.carrier}) for x in X.carrier}
        add(check_map(AssemblyMap(X, hom_zy, curried, h.realizer, "multimap currying")))
    else:
        report.skipped.append("currying: no realized multimap X, Y -> Z in the universe")

    # closed category
    if rec.has("Ix") and view.has_unary("dot"):
        unit = unit_assembly(view)
        hom_unit = HomAssembly(unit, Y, universe, cap)
        add(check_map(AssemblyMap(Y, hom_unit, {y: HomAssembly.point({UNIT_POINT: y}) for y in Y.carrier},
                                  view.distinguished("Ix"), "i")))
        add(check_map(AssemblyMap(hom_unit, Y, {u: dict(u)[UNIT_POINT] for u in hom_unit.carrier},
                                  rec.unit_inverse(), "i inverse")))
        hom_xx = HomAssembly(X, X, universe, cap)
        add(check_map(AssemblyMap(unit, hom_xx, {UNIT_POINT: HomAssembly.point({x: x for x in X.carrier})},
                                  I, "j")))
        hom_yz = HomAssembly(Y, Z, universe, cap)
        hom_xz = HomAssembly(X, Z, universe, cap)
        composite = {(u, v): HomAssembly.point(compose_functions(dict(u), dict(v)))
                     for u in hom_yz.carrier for v in hom_xy.carrier}
        add(check_multimap([hom_yz, hom_xy], hom_xz, composite, view.distinguished("B"), "L"))
    else:
        report.skipped.append("closed category: Ix or dot missing")

    # monoidal closed
    if rec.has("P", "L"):
        _monoidal(view, rec, X, Y, Z, f, g, h, hom_xy, universe, cap, add)
    else:
        report.skipped.append("monoidal closed: P and L not installed")

    # monoidal bi-closed
    if rec.bi:
        _bi_closed(view, rec, X, Y, Z, f, g, h, universe, cap, add, report)
    elif view.two_sided:
        report.skipped.append("monoidal bi-closed: bi-BDI combinators not installed")

    report.notes.extend(view.open_questions)
    logger.info(f"Closed-structure suite on {A.name}: {report.verdict.value} "
                f"({len(report.items)} data, {len(report.skipped)} skipped)")
    return report


def _monoidal(view, rec: Recipes, X, Y, Z, f, g, h, hom_xy, universe, cap, add):
    unit = unit_assembly(view)
    identity = {x: x for x in X.carrier}
    if f and g:
        XY, YZ = tensor_assembly(X, Y, view), tensor_assembly(Y, Z, view)
        fn = {(x, y): (f.function[x], g.function[y]) for x, y in XY.carrier}
        add(check_map(AssemblyMap(XY, YZ, fn, rec.tensor_map(f.realizer, g.realizer), "tensor of maps")))

    IX, XI = tensor_assembly(unit, X, view), tensor_assembly(X, unit, view)
    add(check_map(AssemblyMap(IX, X, {(u, x): x for u, x in IX.carrier},
                              rec.elem(CApp(Sym("L"), Sym("I"))), "left unitor")))
    add(check_map(AssemblyMap(X, IX, {x: (UNIT_POINT, x) for x in identity},
                              rec.elem(CApp(Sym("P"), Sym("I"))), "left unitor inverse")))
    if rec.has("Ix"):
        add(check_map(AssemblyMap(XI, X, {(x, u): x for x, u in XI.carrier},
                                  rec.elem(CApp(Sym("L"), Sym("Ix"))), "right unitor")))
    if view.has_unary("dot"):
        add(check_map(AssemblyMap(X, XI, {x: (x, UNIT_POINT) for x in identity},
                                  rec.right_unitor_inverse(), "right unitor inverse")))

    XY = tensor_assembly(X, Y, view)
    left = tensor_assembly(XY, Z, view)
    right = tensor_assembly(X, tensor_assembly(Y, Z, view), view)
    add(check_map(AssemblyMap(left, right, {((x, y), z): (x, (y, z)) for (x, y), z in left.carrier},
                              rec.associator(), "associator")))
    add(check_map(AssemblyMap(right, left, {(x, (y, z)): ((x, y), z) for x, (y, z) in right.carrier},
                              rec.associator_inverse(), "associator inverse")))

    pairs = tensor_assembly(hom_xy, X, view)
    add(check_map(AssemblyMap(pairs, Y, {(u, x): dict(u)[x] for u, x in pairs.carrier},
                              rec.elem(CApp(Sym("L"), Sym("I"))), "evaluation (tensor)")))
    if h:
        r_h = rec.elem(CApp(Sym("L"), Hole(h.realizer)))
        add(check_map(AssemblyMap(XY, Z, dict(h.function), r_h, "multimap as tensor map")))
        hom_zy = HomAssembly(Y, Z, universe, cap)
        curried = {x: HomAssembly.point({y: h.function[(x, y)] for y in Y.carrier}) for x in X.carrier}
        add(check_map(AssemblyMap(X, hom_zy, curried, rec.tensor_curry(r_h), "currying (tensor)")))


def _bi_closed(view, rec: Recipes, X, Y, Z, f, g, h, universe, cap, add, report: SuiteReport):
    if f and g:
        XY, YZ = tensor_assembly(X, Y, view, "bi"), tensor_assembly(Y, Z, view, "bi")
        fn = {(x, y): (f.function[x], g.function[y]) for x, y in XY.carrier}
        add(check_map(AssemblyMap(XY, YZ, fn, rec.bi_tensor_map(f.realizer, g.realizer),
                                  "tensor of maps (bi)")))

        lhom_yy, lhom_xz = LeftHomAssembly(Y, Y, universe, cap), LeftHomAssembly(X, Z, universe, cap)
        action = {u: HomAssembly.point(compose_functions(g.function, compose_functions(dict(u), f.function)))
                  for u in lhom_yy.carrier}
        add(check_map(AssemblyMap(lhom_yy, lhom_xz, action, rec.left_hom_action(g.realizer, f.realizer),
                                  "f-og")))

        lhom_xy = LeftHomAssembly(X, Y, universe, cap)
        name = rec.elem(UnaryOp("dagl", Hole(f.realizer)))
        verdict = lhom_xy.realizes(HomAssembly.point(f.function), name)
        add(MapReport("dagl(r_f) names f in X -o Y",
                      MapVerdict.PASS if verdict is EqVerdict.EQUAL else MapVerdict.FAIL, 1))
    else:
        report.skipped.append("bi-closed map data: no realized maps X->Y, Y->Z in the universe")

    lhom_xy = LeftHomAssembly(X, Y, universe, cap)
    pairs = tensor_assembly(X, lhom_xy, view, "bi")
    x_v = abstract_right(abstract_right(CLApp(CVar("x"), CVar("v")), "v"), "x")
    add(check_map(AssemblyMap(pairs, Y, {(x, u): dict(u)[x] for x, u in pairs.carrier},
                              rec.bi_eval(x_v), "left-hom evaluation")))

    hom_xy = HomAssembly(X, Y, universe, cap)
    pairs = tensor_assembly(hom_xy, X, view, "bi")
    u_a = abstract_right(abstract_right(CApp(CVar("u"), CVar("a")), "a"), "u")
    add(check_map(AssemblyMap(pairs, Y, {(u, x): dict(u)[x] for u, x in pairs.carrier},
                              rec.bi_eval(u_a), "right-hom evaluation (bi)")))

    if h:
        XY = tensor_assembly(X, Y, view, "bi")
        r_h = rec.bi_eval(Hole(h.realizer))
        add(check_map(AssemblyMap(XY, Z, dict(h.function), r_h, "multimap as bi-tensor map")))
        lhom_xz = LeftHomAssembly(X, Z, universe, cap)
        curried = {y: HomAssembly.point({x: h.function[(x, y)] for x in X.carrier}) for y in Y.carrier}
        add(check_map(AssemblyMap(Y, lhom_xz, curried, rec.left_curry(r_h), "left currying")))
