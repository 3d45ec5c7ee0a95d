"""
Tests for the models

This module tests:
1. Ordered groups, trees and the tree notation
2. Tree models: application, equality, carriers and the installed sets
3. Finite magmas and the structure factory
4. Term models: names, elements, candidates and sampling
5. The adjoint pair between T and T_e
"""

import sys
from pathlib import Path

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from core.algebra import AxiomVerdict, CheckMode, ModeKind, check_axiom, load_axioms
from core.assemblies.assembly import MapVerdict
from core.assemblies.morphisms import check_comonadic, compose
from core.calculus.rewrite import EqVerdict, is_normal
from core.calculus.syntax import Const, Discipline, RAbs, alpha_eq, validate
from core.calculus.grammar import parse
from core.errors import (
    ConfigurationError, DisciplineError, ModelError, TermSyntaxError, UnsupportedModeError,
)
from core.models.factory import build_structure, default_mode
from core.models.magma import finite_magma, load_magma
from core.models.te_adjoint import check_te_adjoint, check_te_comonad, te_adjoint_pair
from core.models.term_model import model_name, term_model
from core.models.tree_model import te_model, tree_model
from core.models.trees import (
    FreeGroup, IntegerGroup, LImp, Leaf, RImp, Tens, all_trees, format_set, format_tree, leaves,
    parse_trees, value,
)

DATA = Path(__file__).parent / "data"
Z = IntegerGroup()


@pytest.fixture(scope="module")
def T():
    return tree_model(bound=5)


# ----------------------------------------------------------------------------
# Groups and trees
# ----------------------------------------------------------------------------

def test_tree_values():
    assert value(RImp(Leaf(3), Leaf(1)), Z) == 2
    assert value(LImp(Leaf(1), Leaf(3)), Z) == 2
    assert value(Tens(Leaf(1), Leaf(3)), Z) == 4
    assert leaves(RImp(RImp(Leaf(3), Leaf(1)), Leaf(2))) == 3


def test_free_group_words():
    F = FreeGroup()
    ab = F.parse("ab^-1")
    assert ab == (("a", 1), ("b", -1))
    assert F.mul(ab, F.parse("b")) == F.parse("a")
    assert F.mul(ab, F.inv(ab)) == F.identity
    assert F.format(F.parse("e")) == "e"
    assert F.format(ab) == "ab^-1"
    assert not F.leq(F.identity, F.parse("a"))
    with pytest.raises(TermSyntaxError):
        F.parse("c")


def test_parse_trees():
    assert parse_trees("(3 <- 1) <- 2", Z) == RImp(RImp(Leaf(3), Leaf(1)), Leaf(2))
    assert parse_trees("1 -o 2", Z) == LImp(Leaf(1), Leaf(2))
    assert parse_trees("{0, 1 <- 1}", Z) == frozenset([Leaf(0), RImp(Leaf(1), Leaf(1))])
    assert parse_trees("{}", Z) == frozenset()
    with pytest.raises(TermSyntaxError):
        parse_trees("3 <- 1 <- 2", Z)


def test_format_trees():
    assert format_tree(RImp(RImp(Leaf(3), Leaf(1)), Leaf(2)), Z) == "(3 <- 1) <- 2"
    assert format_set([Leaf(1), Leaf(0)], Z) == "{0, 1}"


def test_all_trees_counts():
    # two leaves, plus two by two pairs under one constructor
    assert len(all_trees(2, (0, 1), ("rimp",))) == 6
    assert len(all_trees(2, (0, 1), ("rimp", "limp"))) == 10


# ----------------------------------------------------------------------------
# Tree models
# ----------------------------------------------------------------------------

def test_tree_model_t(T):
    assert T.name == "T(integers)"
    assert T.installed_symbols() == ["B", "C", "I", "Ix", "L", "P"]
    assert T.two_sided
    assert T.has_unary("dot")


def test_identity_and_dot_in_t(T):
    assert T.eq(T.evaluate("I {0}"), T.element("{0}")) is EqVerdict.EQUAL
    assert T.eq(T.evaluate("I {1 <- 1}"), T.element("{1 <- 1}")) is EqVerdict.EQUAL
    assert T.eq(T.evaluate("dot({0}) {1 <- 0}"), T.element("{1}")) is EqVerdict.EQUAL
    assert T.eq(T.element("{0}"), T.element("{1}")) is EqVerdict.NOT_EQUAL


def test_tree_model_carrier(T):
    with pytest.raises(ModelError):
        T.element("{0 <- 1}")
    with pytest.raises(TermSyntaxError):
        T.evaluate(r"I [\x. x]")


def test_disagreement_and_inclusion(T):
    zero, both = T.element("{0}"), T.element("{0, 1}")
    assert T.disagreement(zero, both) == Leaf(1)
    assert T.disagreement(zero, zero) is None
    assert T.includes(zero, both) is EqVerdict.EQUAL
    assert T.includes(both, zero) is EqVerdict.NOT_EQUAL
    assert T.show(both) == "{0, 1}"
    assert T.describe(zero) == "{0}"


def test_sampled_axioms_in_t(T):
    axioms = load_axioms()
    for name in ("I", "dot"):
        report = check_axiom(T, axioms[name], CheckMode.sampled(n=30, seed=2))
        assert report.verdict is AxiomVerdict.HOLDS, str(report)


def test_free_group_model_has_no_c():
    model = tree_model(FreeGroup(), bound=3)
    assert "C" not in model.installed_symbols()
    assert model.name == "T(free)"


def test_tprime_is_one_sided():
    model = tree_model(variant="tprime", bound=4)
    assert model.name == "T'(integers)"
    assert not model.two_sided
    with pytest.raises(UnsupportedModeError):
        model.lapp(model.element("{0}"), model.distinguished("I"))


def test_tdoubleprime_left_identity():
    model = tree_model(variant="tdoubleprime", bound=4)
    assert {"Bl", "Dr", "Dl", "Il", "Br", "Ir"} <= set(model.installed_symbols())
    assert model.eq(model.evaluate("{0} <@ Il"), model.element("{0}")) is EqVerdict.EQUAL
    assert model.eq(model.evaluate("Ir {1 -o 1}"), model.element("{1 -o 1}")) is EqVerdict.EQUAL


def test_te_carrier_is_exact():
    model = te_model(bound=4)
    assert model.installed_symbols() == ["B", "C", "I"]
    model.element("{1 <- 1}")
    with pytest.raises(ModelError):
        model.element("{1}")


def test_te_b_and_i_range_over_all_trees():
    model = te_model(bound=6)
    assert model.distinguished("I").member(RImp(Leaf(1), Leaf(1)))
    assert model.evaluate("B {1 <- 1}").member(parse_trees("(1 <- 0) <- (1 <- 0)", Z))


def test_te_c_needs_unit_components():
    C = te_model(bound=6).distinguished("C")
    assert C.member(parse_trees("((0 <- 0) <- 0) <- ((0 <- 0) <- 0)", Z))
    # value e overall, but t1 = 1
    assert not C.member(parse_trees("((0 <- 0) <- 1) <- ((0 <- 1) <- 0)", Z))


def test_te_adjoint_pair():
    pair = te_adjoint_pair(bound=4)
    report = check_te_adjoint(pair, samples=5, seed=1)
    assert report.name == "delta -| gamma"
    assert [item.name for item in report.items] == [
        "gamma realizer", "delta realizer", "delta.gamma <= id", "id <= gamma.delta",
    ]
    assert report.items[0].verdict is MapVerdict.PASS


def test_te_comonad():
    pair = te_adjoint_pair(bound=4)
    report = check_te_comonad(pair, samples=5, seed=1)
    assert report.name == "delta.gamma comonadic"
    assert [item.name for item in report.items] == ["counit e", "comultiplication d"]
    assert report.verdict is MapVerdict.PASS

    small = [pair.T.element("{0}"), pair.T.element("{0, 1}")]
    endo = compose(pair.delta, pair.gamma)
    assert check_comonadic(endo, pair.counit, pair.comult, small).verdict is MapVerdict.PASS


def test_te_comonad_wrong_counit():
    pair = te_adjoint_pair(bound=4)
    endo = compose(pair.delta, pair.gamma)
    # I sends {0 <- 0} to itself, which is not below {0}
    report = check_comonadic(endo, pair.T.distinguished("I"), pair.comult, [pair.T.element("{0}")])
    counit = report.items[0]
    assert counit.verdict is MapVerdict.FAIL
    assert counit.witness["a"] == "{0}"
    assert report.verdict is MapVerdict.FAIL


# ----------------------------------------------------------------------------
# Magmas and the factory
# ----------------------------------------------------------------------------

def test_magma_table_errors():
    with pytest.raises(ConfigurationError):
        finite_magma([["a"]], ["a", "b"])
    with pytest.raises(ConfigurationError):
        finite_magma([["c", "a"], ["a", "a"]], ["a", "b"])
    with pytest.raises(ConfigurationError):
        finite_magma([["a"]], ["a"], combinators={"I": "z"})
    with pytest.raises(ConfigurationError):
        load_magma(DATA / "magmas" / "missing.yaml")


def test_magma_partiality():
    magma = finite_magma([["0", "~"], [None, "-"]])
    assert magma.carrier() == ["0", "1"]
    assert magma.rapp("0", "0") == "0"
    assert magma.rapp("0", "1") is None
    assert not magma.total
    assert load_magma(DATA / "magmas" / "trivial.yaml").total


def test_build_structure_kinds():
    tree = build_structure({"kind": "tree", "variant": "tprime", "bound": 4})
    assert tree.name == "T'(integers)"
    magma = build_structure({"kind": "magma", "file": str(DATA / "magmas" / "trivial.yaml")})
    assert magma.name == "trivial"
    inline = build_structure({"kind": "magma", "elements": ["a"], "table": [["a"]],
                              "combinators": {"I": "a"}})
    assert inline.distinguished("I") == "a"
    with pytest.raises(ConfigurationError):
        build_structure({"kind": "graph"})


def test_build_term_structure_candidates():
    given = build_structure({"kind": "term", "discipline": "planar", "candidates": {"I": r"\x. x"}})
    assert given.installed_symbols() == ["I"]
    defaults = build_structure({"kind": "term", "discipline": "planar"})
    assert {"B", "I", "Ix", "Idot"} <= set(defaults.installed_symbols())
    assert "C" not in defaults.installed_symbols()
    with pytest.raises(DisciplineError):
        build_structure({"kind": "term", "discipline": "planar", "candidates": {"C": r"\x y z. x z y"}})


def test_default_mode():
    magma = load_magma(DATA / "magmas" / "trivial.yaml")
    assert default_mode(magma).kind is ModeKind.EXHAUSTIVE
    assert default_mode(term_model(Discipline.planar())).kind is ModeKind.FRESH_CONSTANTS
    assert default_mode(tree_model(bound=3), n=10, seed=4) == CheckMode.sampled(10, 4)
    assert default_mode(magma, name="sampled").kind is ModeKind.SAMPLED


# ----------------------------------------------------------------------------
# Term models
# ----------------------------------------------------------------------------

def test_model_names():
    assert model_name(Discipline.planar()) == "L_P"
    assert model_name(Discipline.planar(["c"])) == "L_Pc"
    assert model_name(Discipline.planar(["c"], eta=True)) == "L'_Pc"
    assert model_name(Discipline.planar(eta=True)) == "L_P+eta"
    assert model_name(Discipline.linear()) == "L_lin"
    assert model_name(Discipline.biplanar(["c"])) == "L_Bc"


def test_element_rejects():
    model = term_model(Discipline.planar())
    with pytest.raises(DisciplineError):
        model.element("x")
    with pytest.raises(DisciplineError):
        model.element(r"\x y. y x")
    with pytest.raises(DisciplineError):
        model.element(Const("c"))
    assert alpha_eq(model.element(r"(\x. x) (\y. y)"), parse(r"\z. z"))


def test_element_out_of_fuel():
    model = term_model(Discipline.ordinary(), fuel=20)
    with pytest.raises(UnsupportedModeError):
        model.element(r"(\x. x x) (\x. x x)")
    assert model.rapp(parse(r"\x. x x"), parse(r"\x. x x")) is None
    assert not model.undefined_is_exact


def test_representatives_rejected_by_discipline():
    model = term_model(Discipline.planar())
    rejected = model.install_representatives(["I", "C", "K", "P", "Il"])
    assert rejected == ["C", "K", "P", "Il"]
    assert model.installed_symbols() == ["I"]


def test_default_unary_by_side():
    assert term_model(Discipline.planar()).installed_unary() == ["circ", "dot"]
    assert term_model(Discipline.biplanar()).installed_unary() == ["dagl", "dagr"]
    assert term_model(Discipline.planar(), unary=False).installed_unary() == []


def test_fresh_constants():
    generic = term_model(Discipline.planar()).fresh_constants(2)
    assert all(isinstance(g, RAbs) for g in generic)
    assert term_model(Discipline.planar(["g0"])).fresh_constants(2) == [Const("g1"), Const("g2")]
    assert term_model(Discipline.planar_tensor()).fresh_constants(1) == [Const("g0")]


def test_term_model_sample():
    d = Discipline.planar()
    model = term_model(d)
    first = model.sample(7, 10)
    assert first == model.sample(7, 10)
    assert 0 < len(first) <= 10
    for t in first:
        assert validate(t, d).ok
        assert is_normal(t, d)
