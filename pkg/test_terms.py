"""
Tests for terms of the substructural calculi

This module tests:
1. Concrete grammar and pretty printing
2. Validation against each discipline
3. Substitution and alpha-equivalence
4. Normalization, strategies and equality
5. Random generators
"""

import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from core.calculus.generators import (
    random_closed_normal_planar, random_context, random_term,
)
from core.calculus.grammar import parse, parse_valid
from core.calculus.rewrite import (
    EqVerdict, FuelExhausted, Normal, ReductionRule, Strategy, equal, is_normal,
    normalize, step,
)
from core.calculus.syntax import (
    Const, Discipline, LAbs, LApp, LetPair, RAbs, RApp, Tensor, Var,
    alpha_eq, free_var_sequence, is_closed, pretty, substitute, validate,
)
from core.errors import DisciplineError, TermSyntaxError, UnknownConstantError

PLANAR = Discipline.planar()
DISCIPLINES = ["ordinary", "linear", "planar", "planar-tensor", "biplanar"]


def rules(text, d):
    return [v.rule for v in validate(parse(text, d), d).violations]


# ----------------------------------------------------------------------------
# Grammar
# ----------------------------------------------------------------------------

def test_parse_abstraction_and_application():
    assert parse(r"\x y. x y") == RAbs("x", RAbs("y", RApp(Var("x"), Var("y"))))
    assert parse(r"\>x. x") == RAbs("x", Var("x"))
    assert parse("f a b") == RApp(RApp(Var("f"), Var("a")), Var("b"))


def test_parse_left_operations():
    assert parse(r"\<x. x") == LAbs("x", Var("x"))
    # the argument is written on the left of the function
    assert parse("a <@ f") == LApp(Var("a"), Var("f"))


def test_parse_tensor_and_let():
    assert parse("x * y") == Tensor(Var("x"), Var("y"))
    assert parse(r"\p. let x*y = p in y * x") == RAbs(
        "p", LetPair("x", "y", Var("p"), Tensor(Var("y"), Var("x"))))


def test_parse_constants_and_comments():
    d = Discipline.planar(["c"])
    assert parse("#c -- a declared constant", d) == Const("c")
    with pytest.raises(UnknownConstantError):
        parse("#c", PLANAR)
    # without a discipline every constant is accepted
    assert parse("#k") == Const("k")


@pytest.mark.parametrize("text", ["(", r"\x x", "x <@", "#", "let x = y in x"])
def test_parse_errors(text):
    with pytest.raises(TermSyntaxError):
        parse(text)


def test_pretty():
    assert pretty(parse(r"\x y. x y")) == r"\x y. x y"
    assert pretty(parse(r"(\x. x) #c")) == r"(\x. x) #c"
    assert pretty(parse("a <@ f")) == "a <@ f"
    assert pretty(parse(r"\<x. x")) == r"\<x. x"


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(DISCIPLINES), st.integers(0, 10_000))
def test_pretty_parses_back(name, seed):
    d = Discipline.named(name)
    t = random_term(d, seed, depth=5)
    assert parse(pretty(t), d) == t


# ----------------------------------------------------------------------------
# Validation
# ----------------------------------------------------------------------------

def test_exchange_is_not_planar():
    text = r"\x y. y x"
    assert rules(text, PLANAR) == ["rightmost-binding"]
    assert validate(parse(text), Discipline.linear()).ok


def test_weakening_and_contraction():
    assert rules(r"\x y. x", PLANAR) == ["weakening"]
    assert rules(r"\x. x x", Discipline.linear()) == ["contraction"]
    assert validate(parse(r"\x y. x"), Discipline.ordinary()).ok
    assert validate(parse(r"\x. x x"), Discipline.ordinary()).ok


def test_left_operations_need_biplanar():
    assert rules(r"\<x. x", PLANAR) == ["left-operation"]
    assert validate(parse(r"\>y. \<x. x <@ y"), Discipline.biplanar()).ok
    assert validate(parse(r"\<x. \>y. x <@ y"), Discipline.biplanar()).ok
    assert rules(r"\<y. \>x. x <@ y", Discipline.biplanar()) == ["rightmost-binding"]


def test_left_abstraction_binds_leftmost():
    assert rules(r"\>x. \<y. x <@ y", Discipline.biplanar()) == ["leftmost-binding"]


def test_tensor_needs_its_discipline():
    assert rules(r"\x y. x * y", PLANAR) == ["tensor"]
    d = Discipline.planar_tensor()
    assert validate(parse(r"\p. let x*y = p in x * y"), d).ok
    assert rules(r"\p. let x*y = p in y * x", d) == ["let-binding-order"]


def test_parse_valid_rejects():
    with pytest.raises(DisciplineError):
        parse_valid(r"\x y. y x", PLANAR)
    assert parse_valid(r"\x. x", PLANAR) == RAbs("x", Var("x"))


def test_free_variable_order():
    assert free_var_sequence(parse("a <@ f")) == ["a", "f"]
    assert free_var_sequence(parse("f (g a)")) == ["f", "g", "a"]
    assert free_var_sequence(parse(r"let x*y = p in q x y")) == ["q", "p"]


# ----------------------------------------------------------------------------
# Substitution
# ----------------------------------------------------------------------------

def test_alpha_equivalence():
    assert alpha_eq(parse(r"\x. x"), parse(r"\y. y"))
    assert not alpha_eq(parse(r"\x y. x y"), parse(r"\x y. y x"))
    assert not alpha_eq(parse(r"\x. x"), parse(r"\<x. x"))


def test_substitution_avoids_capture():
    result = substitute(parse(r"\y. x y"), "x", Var("y"))
    assert alpha_eq(result, parse(r"\z. y z"))
    # bound occurrences are untouched
    assert substitute(parse(r"\x. x"), "x", Const("c")) == parse(r"\x. x")


# ----------------------------------------------------------------------------
# Normalization
# ----------------------------------------------------------------------------

def test_normalize_beta():
    outcome = normalize(parse(r"(\x. x) (\y. y)"), PLANAR)
    assert isinstance(outcome, Normal)
    assert outcome.steps == 1
    assert alpha_eq(outcome.term, parse(r"\y. y"))


def test_left_beta_and_trace():
    d = Discipline.biplanar(["a"])
    seen = []
    outcome = normalize(parse(r"#a <@ (\<x. x)", d), d, trace=lambda i, rule, path: seen.append(rule))
    assert outcome.term == Const("a")
    assert seen == [ReductionRule.LBETA]


def test_let_beta():
    d = Discipline.planar_tensor(["a", "b"])
    outcome = normalize(parse(r"let x*y = #a * #b in y * x", d), d)
    assert outcome.term == Tensor(Const("b"), Const("a"))


def test_eta_only_when_enabled():
    t, u = parse(r"\x y. x y"), parse(r"\x. x")
    assert equal(t, u, PLANAR) is EqVerdict.NOT_EQUAL
    assert equal(t, u, PLANAR.with_eta()) is EqVerdict.EQUAL


def test_fuel_exhaustion_is_unknown():
    omega = parse(r"(\x. x x) (\x. x x)")
    d = Discipline.ordinary()
    outcome = normalize(omega, d, fuel=50)
    assert isinstance(outcome, FuelExhausted)
    assert outcome.steps == 50
    assert equal(omega, omega, d, fuel=50) is EqVerdict.UNKNOWN


@pytest.mark.parametrize("strategy", [
    Strategy.leftmost_outermost(), Strategy.rightmost_innermost(), Strategy.random(3),
])
def test_strategies_agree(strategy):
    t = parse(r"(\x y. x y) (\z. z) (\w. w)")
    outcome = normalize(t, PLANAR, strategy=strategy)
    assert alpha_eq(outcome.term, parse(r"\w. w"))


def test_step_and_is_normal():
    t = parse(r"\x. x")
    assert step(t, PLANAR) is None
    assert is_normal(t, PLANAR)
    assert not is_normal(parse(r"(\x. x) (\y. y)"), PLANAR)
    assert not is_normal(parse(r"\x y. x y"), PLANAR.with_eta())


def test_strategy_names():
    assert Strategy.named("random", 5) == Strategy.random(5)
    with pytest.raises(ValueError):
        Strategy.named("outermost")


# ----------------------------------------------------------------------------
# Generators
# ----------------------------------------------------------------------------

@settings(max_examples=100, deadline=None)
@given(st.sampled_from(DISCIPLINES), st.integers(0, 100_000))
def test_random_terms_are_valid(name, seed):
    d = Discipline.named(name)
    t = random_term(d, seed, depth=6)
    assert validate(t, d).ok
    assert is_closed(t)


def test_random_term_is_reproducible():
    assert random_term(PLANAR, 11, depth=6) == random_term(PLANAR, 11, depth=6)


def test_random_term_with_context():
    t = random_term(PLANAR, 4, depth=5, context=["a", "b"])
    assert free_var_sequence(t) == ["a", "b"]


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 100_000))
def test_closed_normal_planar(seed):
    t = random_closed_normal_planar(seed)
    assert is_closed(t)
    assert is_normal(t, PLANAR)
    assert validate(t, PLANAR).ok


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(["planar", "biplanar", "linear"]), st.integers(0, 100_000))
def test_context_plugging_keeps_validity(name, seed):
    d = Discipline.named(name)
    ctx = random_context(d, seed)
    assert validate(ctx.plug(parse(r"\z. z")), d).ok
