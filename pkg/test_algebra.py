"""
Tests for applicative structures, axioms and classification

This module tests:
1. Axiom catalogue loading
2. Axiom checking in every mode, with witnesses
3. Derived views and the two-sided reading
4. Classification along the class chain
"""

import sys
from pathlib import Path

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from core.algebra import (
    CANDIDATE_NOTE, CLASS_AXIOMS, CLASS_CHAIN, Axiom, AxiomVerdict, CheckMode, DerivedView,
    bi_view, check_axiom, classify, load_axioms,
)
from core.calculus.rewrite import EqVerdict
from core.calculus.syntax import Discipline
from core.errors import (
    ConfigurationError, DuplicateOperationError, MissingCombinatorError, TermSyntaxError,
    UnsupportedModeError,
)
from core.models.factory import build_structure
from core.models.magma import finite_magma, load_magma
from core.models.term_model import LP_OPEN_QUESTION, term_model

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="module")
def axioms():
    return load_axioms()


@pytest.fixture
def left_projection():
    """x y = x; I is a, which is no identity"""
    return finite_magma([["a", "a"], ["b", "b"]], ["a", "b"], "left-projection", {"I": "a"})


# ----------------------------------------------------------------------------
# Axiom catalogue
# ----------------------------------------------------------------------------

def test_catalogue_covers_every_class(axioms):
    for names in CLASS_AXIOMS.values():
        assert all(name in axioms for name in names)
    assert str(axioms["B"]) == "B x y z = x (y z)"


def test_axiom_variables_and_requirements():
    ax = Axiom.from_text("dot", "dot(a) x = x a")
    assert ax.vars == ("a", "x")
    assert ax.requirements() == (set(), {"dot"})
    assert Axiom.from_text("B", "B x y z = x (y z)").requirements() == ({"B"}, set())


def test_load_axioms_errors(tmp_path):
    with pytest.raises(ConfigurationError):
        load_axioms(tmp_path / "missing.txt")
    bad = tmp_path / "bad.txt"
    bad.write_text("-- header\naxiom I: I x = x\nnot an axiom\n")
    with pytest.raises(TermSyntaxError):
        load_axioms(bad)


def test_load_axioms_custom_file(tmp_path):
    path = tmp_path / "mine.txt"
    path.write_text("axiom I: I x = x   -- identity\n\naxiom K: K x y = x\n")
    assert list(load_axioms(path)) == ["I", "K"]


# ----------------------------------------------------------------------------
# Axiom checking
# ----------------------------------------------------------------------------

def test_exhaustive_failure_has_witness(axioms, left_projection):
    report = check_axiom(left_projection, axioms["I"], CheckMode.exhaustive())
    assert report.verdict is AxiomVerdict.FAILS_AT
    assert report.witness == {"x": "b"}
    assert report.sides == ("a", "b")
    assert str(report) == "I: FailsAt [exhaustive] at x=b: a vs b"
    assert report.to_dict()["sides"] == ["a", "b"]


def test_exhaustive_pass_on_trivial_magma(axioms):
    trivial = load_magma(DATA / "magmas" / "trivial.yaml")
    for name in ("S", "K", "B", "C", "I", "Ix", "L"):
        assert check_axiom(trivial, axioms[name], CheckMode.exhaustive()).holds


def test_missing_combinator(axioms):
    magma = load_magma(DATA / "magmas" / "nonmodest.yaml")
    with pytest.raises(MissingCombinatorError):
        check_axiom(magma, axioms["I"], CheckMode.exhaustive())
    with pytest.raises(MissingCombinatorError):
        check_axiom(magma, axioms["dot"], CheckMode.exhaustive())


def test_unsupported_modes(axioms, left_projection):
    with pytest.raises(UnsupportedModeError):
        check_axiom(left_projection, axioms["I"], CheckMode.fresh_constants())
    model = build_structure({"kind": "term", "discipline": "planar"})
    with pytest.raises(UnsupportedModeError):
        check_axiom(model, axioms["I"], CheckMode.exhaustive())


def test_fresh_constants_in_planar_model(axioms):
    model = build_structure({"kind": "term", "discipline": "planar"})
    for name in ("B", "I", "Ix", "dot", "Idot", "circ"):
        report = check_axiom(model, axioms[name], CheckMode.fresh_constants(n=20))
        assert report.verdict is AxiomVerdict.HOLDS, str(report)


def test_fresh_constants_in_ordinary_model(axioms):
    model = build_structure({"kind": "term", "discipline": "ordinary"})
    assert check_axiom(model, axioms["S"]).holds
    assert check_axiom(model, axioms["K"]).holds


def test_sampled_mode_on_magma(axioms, left_projection):
    report = check_axiom(left_projection, axioms["I"], CheckMode.sampled(n=50, seed=3))
    # both elements occur among 50 samples of two
    assert report.verdict is AxiomVerdict.FAILS_AT
    assert report.mode == "sampled(n=50, seed=3)"


def test_kleene_equality():
    magma = load_magma(DATA / "magmas" / "nonmodest.yaml")
    assert magma.kleene_eq(None, None) is EqVerdict.EQUAL
    assert magma.kleene_eq(None, "a") is EqVerdict.NOT_EQUAL
    assert magma.rapp("a", "a") is None
    ordinary = term_model(Discipline.ordinary())
    assert ordinary.kleene_eq(None, None) is EqVerdict.UNKNOWN


# ----------------------------------------------------------------------------
# Views
# ----------------------------------------------------------------------------

def test_derived_view_leaves_base_alone(left_projection):
    view = DerivedView(left_projection)
    view.install("K", "b")
    assert view.distinguished("K") == "b"
    assert view.distinguished("I") == "a"
    assert left_projection.distinguished("K") is None
    assert view.installed_symbols() == ["I", "K"]
    assert view.carrier() == ["a", "b"]


def test_bi_view_flips_application(left_projection):
    view = bi_view(left_projection)
    assert view.two_sided
    # a <@ b reads as b a
    assert view.lapp("a", "b") == "b"
    assert view.unary("dagr", "a") == "a"
    with pytest.raises(DuplicateOperationError):
        view.install_unary("dagl", lambda x: x)
    with pytest.raises(UnsupportedModeError):
        left_projection.lapp("a", "b")


def test_duplicate_unary_through_view():
    model = term_model(Discipline.planar())
    with pytest.raises(DuplicateOperationError):
        model.install_unary("dot", lambda a: a)
    with pytest.raises(DuplicateOperationError):
        DerivedView(model).install_unary("circ", lambda a: a)


# ----------------------------------------------------------------------------
# Classification
# ----------------------------------------------------------------------------

def test_classify_planar_term_model():
    model = build_structure({"kind": "term", "discipline": "planar"})
    result = classify(model, mode=CheckMode.fresh_constants(n=20))
    assert result.classes == ["BIIdot", "BIdot", "BIIdotCirc"]
    assert result.results["SK"].status == "not-checked"
    assert result.results["biBDI"].missing == ["left application"]
    assert result.results["BIILP"].missing == ["L", "P"]
    assert CANDIDATE_NOTE in result.notes
    assert LP_OPEN_QUESTION in result.notes


def test_classify_trivial_magma_reaches_every_class():
    trivial = load_magma(DATA / "magmas" / "trivial.yaml")
    result = classify(trivial, mode=CheckMode.exhaustive())
    assert result.classes == CLASS_CHAIN
    assert "two-sided reading of BCI (flipped left application)" in result.derived
    # the structure itself is untouched
    assert not trivial.has_unary("dot")


def test_classify_without_derivation():
    trivial = load_magma(DATA / "magmas" / "trivial.yaml")
    result = classify(trivial, mode=CheckMode.exhaustive(), derive=False)
    assert result.results["biBDI"].status == "not-checked"
    assert result.results["BIdot"].missing == ["dot"]
    assert result.derived == []


def test_classify_refutes_bad_candidates(left_projection):
    result = classify(left_projection, candidates={"B": "a", "Ix": "a"},
                      mode=CheckMode.exhaustive(), unary={"dot": lambda v: "a"})
    assert result.results["BIdot"].status == "candidates-refuted"
    assert result.classes == []
    data = result.to_dict()
    assert data["classes"] == []
    assert [r["class"] for r in data["results"]] == CLASS_CHAIN


def test_classify_linear_and_ordinary():
    linear = build_structure({"kind": "term", "discipline": "linear"})
    classes = classify(linear, mode=CheckMode.fresh_constants(n=20)).classes
    assert "BCI" in classes
    assert "BIdot" in classes

    ordinary = build_structure({"kind": "term", "discipline": "ordinary"})
    assert "SK" in classify(ordinary, mode=CheckMode.fresh_constants(n=20)).classes
