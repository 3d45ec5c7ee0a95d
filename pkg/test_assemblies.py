"""
Tests for assemblies, realizer recipes, morphisms and separation checks

This module tests:
1. Assemblies, modesty and the realizer condition of maps
2. Hom, unit and tensor assemblies
3. Assembly files
4. Realizer recipes on the planar model
5. Applicative morphisms
6. Candidate refutations
"""

import sys
from pathlib import Path

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from core.assemblies import (
    INSTANCE_NOTE, Assembly, AssemblyMap, HomAssembly, MapVerdict, MorphismSpec, RealizedMap,
    UNIT_POINT, all_functions, check_map, check_morphism, check_multimap, check_preorder,
    closed_structure_suite, compose, identity_morphism, load_assembly_file, prepare,
    search_realizer, tensor_assembly, tracks, unit_assembly,
)
from core.calculus.rewrite import EqVerdict
from core.calculus.syntax import Discipline
from core.errors import AssemblyError, ConfigurationError, MissingCombinatorError
from core.models.factory import build_structure
from core.models.magma import finite_magma, load_magma
from core.models.term_model import LP_OPEN_QUESTION, term_model
from core.separation import REFUTATION_NOTE, load_candidates, refute, separation_suite

DATA = Path(__file__).parent / "data"
ASSEMBLIES = DATA / "assemblies"


@pytest.fixture(scope="module")
def planar():
    return load_assembly_file(ASSEMBLIES / "planar.yaml")


@pytest.fixture
def magma():
    return load_magma(DATA / "magmas" / "nonmodest.yaml")


# ----------------------------------------------------------------------------
# Assemblies and maps
# ----------------------------------------------------------------------------

def test_assembly_needs_realizers(magma):
    with pytest.raises(AssemblyError):
        Assembly("X", magma, {"x": []})
    X = Assembly("X", magma, {"x": ["a"], "y": ["b", "z"]})
    assert X.carrier == ["x", "y"]
    assert X.realizes("y", "z") is EqVerdict.EQUAL
    assert X.realizes("x", "b") is EqVerdict.NOT_EQUAL
    assert X.modest


def test_shared_realizer_breaks_modesty(magma):
    X = Assembly("X", magma, {"x": ["a"], "y": ["b", "a"]})
    assert X.modesty_witness() == ("x", "y", "a")
    assert not X.modest


def test_map_checks(planar):
    X, Y = planar.assemblies["X"], planar.assemblies["Y"]
    assert check_map(planar.maps["f"]).passed
    assert check_map(planar.maps["collapse"]).passed

    swap = AssemblyMap(X, X, {"a": "b", "b": "a"}, planar.maps["f"].realizer, "swap")
    report = check_map(swap)
    assert report.verdict is MapVerdict.FAIL
    assert report.witness["point"] == "a"
    assert report.note == "not a realizer of b"
    assert report.to_dict()["verdict"] == "fail"

    with pytest.raises(AssemblyError):
        check_map(AssemblyMap(X, Y, {"a": "u"}, planar.maps["f"].realizer))


def test_undefined_application_fails_in_exact_structure(magma):
    X = Assembly("X", magma, {"x": ["a"]})
    report = check_map(AssemblyMap(X, X, {"x": "x"}, "a", "stuck"))
    assert report.verdict is MapVerdict.FAIL
    assert report.note == "application undefined"


def test_multimap_and_tracking(planar):
    X = planar.assemblies["X"]
    identity = planar.maps["f"].realizer
    assert tracks(identity, {"a": "a", "b": "b"}, X, X)
    assert not tracks(identity, {"a": "b", "b": "b"}, X, X)
    # I x y = x y: the first argument acts on the second
    table = {("a", "a"): "a", ("a", "b"): "b", ("b", "a"): "a", ("b", "b"): "a"}
    assert check_multimap([X, X], X, table, identity).passed


def test_search_realizer(planar):
    X = planar.assemblies["X"]
    A = planar.structure
    universe = [A.element(r"\x. x"), A.element(r"\v. v (\x. x)")]
    constant = {"a": "a", "b": "a"}
    assert search_realizer(constant, X, X, universe) == universe[1]
    assert search_realizer({"a": "b", "b": "a"}, X, X, universe) is None
    assert search_realizer(constant, X, X, universe, cap=1) is None
    assert len(all_functions(X, X)) == 4


def test_hom_assembly(planar):
    X = planar.assemblies["X"]
    A = planar.structure
    universe = [A.element(r"\x. x"), A.element(r"\v. v (\x. x)")]
    hom = HomAssembly(X, X, universe)
    assert hom.name == "X <- X"
    assert [hom.describe_point(p) for p in hom.carrier] == ["{a->a, b->a}", "{a->a, b->b}"]
    identity = HomAssembly.point({"a": "a", "b": "b"})
    assert hom.realizes(identity, universe[0]) is EqVerdict.EQUAL
    assert hom.realizes(identity, universe[1]) is EqVerdict.NOT_EQUAL


def test_unit_assembly(planar, magma):
    unit = unit_assembly(planar.structure)
    assert unit.carrier == [UNIT_POINT]
    with pytest.raises(MissingCombinatorError):
        unit_assembly(magma)
    with pytest.raises(MissingCombinatorError):
        unit_assembly(planar.structure, style="bi")


def test_tensor_of_modest_assemblies_is_not_modest():
    loaded = load_assembly_file(ASSEMBLIES / "nonmodest_tensor.yaml")
    x_name, y_name = loaded.tensor_witness
    X, Y = loaded.assemblies[x_name], loaded.assemblies[y_name]
    assert X.modest and Y.modest
    XY = tensor_assembly(X, Y, loaded.structure)
    assert XY.carrier == [("x1", "y"), ("x2", "y")]
    assert XY.modesty_witness() == (("x1", "y"), ("x2", "y"), "z")


# ----------------------------------------------------------------------------
# Assembly files
# ----------------------------------------------------------------------------

def test_load_planar_file(planar):
    assert planar.name == "planar"
    assert planar.structure.name == "L_P"
    assert sorted(planar.assemblies) == ["X", "Y"]
    assert sorted(planar.maps) == ["collapse", "f", "g"]
    assert planar.suite == ("X", "X", "X")
    assert planar.tensor_witness is None


def test_load_left_map():
    loaded = load_assembly_file(ASSEMBLIES / "biplanar.yaml")
    m = loaded.maps["left-identity"]
    assert m.side == "left"
    assert check_map(m).passed


def test_load_assembly_file_errors(tmp_path):
    with pytest.raises(ConfigurationError):
        load_assembly_file(tmp_path / "missing.yaml")

    unknown = tmp_path / "unknown.yaml"
    unknown.write_text(
        "structure: {kind: term, discipline: planar}\n"
        "assemblies:\n"
        "  X: {a: ['\\x. x']}\n"
        "maps:\n"
        "  f: {source: X, target: W, function: {a: a}, realizer: '\\x. x'}\n"
    )
    with pytest.raises(AssemblyError):
        load_assembly_file(unknown)

    bad = tmp_path / "bad.yaml"
    bad.write_text("structure: {kind: term, discipline: planar, candidates: {C: '\\x y z. x z y'}}\n")
    with pytest.raises(AssemblyError):
        load_assembly_file(bad)

    suite = tmp_path / "suite.yaml"
    suite.write_text(
        "structure: {kind: magma, elements: [e], table: [[e]], combinators: {I: e}}\n"
        "assemblies:\n"
        "  X: {p: [e]}\n"
        "suite: {X: X, Y: X, Z: Q}\n"
    )
    with pytest.raises(AssemblyError):
        load_assembly_file(suite)


# ----------------------------------------------------------------------------
# Realizer recipes
# ----------------------------------------------------------------------------

def test_prepare_derives_dot_in_two_sided_model():
    model = build_structure({"kind": "term", "discipline": "biplanar"})
    view = prepare(model)
    assert view.has_unary("dot")
    assert not model.has_unary("dot")
    assert view.distinguished("B") is not None


def test_closed_structure_suite_on_planar(planar):
    X = planar.assemblies["X"]
    maps = {"f": planar.maps["f"], "g": planar.maps["g"]}
    realized = {k: RealizedMap(dict(m.function), m.realizer) for k, m in maps.items()}

    report = closed_structure_suite(planar.structure, X, X, X, realized)
    names = [item.name for item in report.items]
    assert names[:4] == ["identity", "evaluation", "composition", "hom action g<-f"]
    assert {"i", "i inverse", "j", "L"} <= set(names)
    assert "monoidal closed: P and L not installed" in report.skipped
    assert report.verdict is MapVerdict.PASS, [str(i) for i in report.items if not i.passed]
    assert INSTANCE_NOTE in report.notes
    assert LP_OPEN_QUESTION in report.notes
    assert report.to_dict()["verdict"] == "pass"


def test_suite_needs_b_and_i(magma):
    X = Assembly("X", magma, {"x": ["a"]})
    report = closed_structure_suite(magma, X, X, X)
    assert report.items == []
    assert report.skipped == ["all data: B and I not installed"]


# ----------------------------------------------------------------------------
# Applicative morphisms
# ----------------------------------------------------------------------------

def test_identity_morphism_on_trivial_magma():
    trivial = load_magma(DATA / "magmas" / "trivial.yaml")
    report = check_morphism(identity_morphism(trivial), trivial.carrier())
    assert report.passed
    assert [item.name for item in report.items] == ["id_trivial total", "id_trivial realizer"]


def test_identity_morphism_with_wrong_realizer():
    # x y = x, so "a" applied to anything stays "a"
    left_projection = finite_magma([["a", "a"], ["b", "b"]], ["a", "b"], "lp", {"I": "a"})
    report = check_morphism(identity_morphism(left_projection), ["a", "b"])
    assert report.verdict is MapVerdict.FAIL
    assert report.items[1].witness["a"] == "b"


def test_partial_relation_is_not_total():
    trivial = load_magma(DATA / "magmas" / "trivial.yaml")
    empty = MorphismSpec("empty", trivial, trivial, lambda a: [])
    report = check_morphism(empty, ["e"])
    assert report.items[0].verdict is MapVerdict.FAIL
    assert len(report.items) == 1


def test_compose_and_preorder():
    trivial = load_magma(DATA / "magmas" / "trivial.yaml")
    identity = identity_morphism(trivial)
    twice = compose(identity, identity)
    assert twice.name == "id_trivial.id_trivial"
    assert twice("e") == ["e"]
    assert twice.realizer is None
    assert check_preorder(identity, twice, "e", ["e"]).passed


# ----------------------------------------------------------------------------
# Separation
# ----------------------------------------------------------------------------

def test_shipped_candidates_are_refuted():
    candidates = load_candidates()
    assert len(candidates) == 8
    results = separation_suite(candidates)
    assert all(r.refuted for r in results), [str(r) for r in results if not r.refuted]
    assert {r.status for r in results} == {"refuted"}
    assert "No statement is made" in REFUTATION_NOTE


def test_refutation_reports_normal_forms():
    first = load_candidates()[0]
    result = refute(first)
    assert result.candidate == "ix-as-composition"
    assert result.instance == "Ix c I = c"
    assert result.sides[1] == "#c"
    assert result.to_dict()["status"] == "refuted"


def test_candidates_file_errors(tmp_path):
    with pytest.raises(ConfigurationError):
        load_candidates(tmp_path / "missing.yaml")

    unbound = tmp_path / "unbound.yaml"
    unbound.write_text("candidates:\n  - name: open\n    instance: 'I x = x'\n")
    with pytest.raises(ConfigurationError):
        load_candidates(unbound)

    not_a_list = tmp_path / "map.yaml"
    not_a_list.write_text("candidates: {name: x}\n")
    with pytest.raises(ConfigurationError):
        load_candidates(not_a_list)

    assert separation_suite([]) == []


def test_invalid_candidate_is_an_error(tmp_path):
    path = tmp_path / "exchange.yaml"
    path.write_text(
        "candidates:\n"
        "  - name: planar-exchange\n"
        "    discipline: planar\n"
        "    constants: [c]\n"
        "    install: {C: '\\x y z. x z y'}\n"
        "    instance: 'C c c c = c c c'\n"
        "    values: {c: '#c'}\n"
    )
    result = refute(load_candidates(path)[0])
    assert result.verdict is EqVerdict.UNKNOWN
    assert result.status == "error"
    assert not result.refuted


def test_term_model_assembly_realizers_are_normal():
    model = term_model(Discipline.planar())
    X = Assembly("X", model, {"a": [model.element(r"(\x. x) (\y. y)")]})
    assert X.realizes("a", model.element(r"\z. z")) is EqVerdict.EQUAL
