"""
Tests for combinator terms and the translations

This module tests:
1. Combinator syntax, rendering and lambda reading
2. Bracket abstraction over every basis, checked by normalization
3. Tensor translation, derived combinators, CPS and left inverses
"""

import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from core.calculus.generators import random_closed_normal_planar, random_term
from core.calculus.grammar import parse
from core.calculus.rewrite import EqVerdict, equal
from core.calculus.syntax import Const, Discipline, RApp, Var, alpha_eq, app
from core.compile import (
    Basis, CApp, CLApp, CVar, Hole, Sym, UnaryOp,
    abstract, abstract_bci, abstract_left, abstract_many, abstract_planar,
    abstract_right, abstract_sk, abstraction_sound, bci_dot, capp, compile_tensor,
    computational_eq, cps_translate, cvars, derive_c_from_t, expand, fresh_arguments,
    left_inverse, left_inverse_sound, parse_comb, parse_equation, random_polynomial,
    render, sk_to_bci, tensor_round_trip,
)
from core.errors import AbstractionError, TermSyntaxError, TranslationError

S, K, B, I = Sym("S"), Sym("K"), Sym("B"), Sym("I")
x, y, f = CVar("x"), CVar("y"), CVar("f")


def applied_to_constants(c, n, d_name="ordinary"):
    """expand(c) applied to #a0 .. #a(n-1), with a discipline declaring them"""
    args = [Const(f"a{i}") for i in range(n)]
    return app(expand(c), *args), Discipline.named(d_name, [a.symbol for a in args])


# ----------------------------------------------------------------------------
# Combinator syntax
# ----------------------------------------------------------------------------

def test_parse_comb():
    assert parse_comb("S K K") == capp(S, K, K)
    assert parse_comb("a <@ f") == CLApp(CVar("a"), f)
    assert parse_comb("dot(I) x") == CApp(UnaryOp("dot", I), x)
    assert parse_comb("Idot") == Sym("Idot")


def test_parse_comb_rejects_unknown_symbols():
    with pytest.raises(TermSyntaxError):
        parse_comb("Q x")
    with pytest.raises(TermSyntaxError):
        parse_comb("S (K")


def test_literals_go_through_the_hook():
    with pytest.raises(TermSyntaxError):
        parse_comb(r"[\x. x]")
    seen = []

    def hook(kind, text):
        seen.append((kind, text))
        return text

    hole = parse_comb(r"I [\x. x]", hook)
    assert hole == CApp(I, Hole(r"\x. x"))
    assert seen == [("term", r"\x. x")]


def test_parse_equation():
    left, right = parse_equation("B x y z = x (y z)")
    assert left == capp(B, x, y, CVar("z"))
    assert right == CApp(x, CApp(y, CVar("z")))


def test_render():
    assert render(parse_comb("B (dot(I)) x")) == "B dot(I) x"
    assert render(parse_comb("x (y I)")) == "x (y I)"
    assert render(parse_comb("a <@ (f <@ Bl)")) == "a <@ (f <@ Bl)"


def test_cvars_textual_order():
    assert cvars(parse_comb("a <@ f")) == ["a", "f"]
    assert cvars(parse_comb("x (y z)")) == ["x", "y", "z"]


def test_expand_reads_representatives():
    assert alpha_eq(expand(I), parse(r"\x. x"))
    assert alpha_eq(expand(UnaryOp("dot", I)), parse(r"\v. v (\x. x)"))


# ----------------------------------------------------------------------------
# Bracket abstraction
# ----------------------------------------------------------------------------

def test_abstract_sk_identity():
    assert abstract_sk(x, "x") == capp(S, K, K)
    assert abstract_sk(y, "x") == CApp(K, y)


def test_abstract_bci_shapes():
    assert abstract_bci(CApp(f, x), "x") == capp(B, f, I)
    with pytest.raises(AbstractionError):
        abstract_bci(CApp(x, x), "x")
    with pytest.raises(AbstractionError):
        abstract_bci(y, "x")


def test_abstract_planar_needs_rightmost():
    assert abstract_planar(CApp(x, I), "x") == capp(B, UnaryOp("dot", I), I)
    assert abstract_planar(CApp(x, y), "y") == capp(B, x, I)
    with pytest.raises(AbstractionError):
        abstract_planar(CApp(x, y), "x")


def test_circ_basis_only_pre_applies_identity():
    assert abstract(CApp(x, I), "x", Basis.BIIDOTCIRC) == capp(B, Sym("Idot"), I)
    with pytest.raises(AbstractionError):
        abstract(CApp(x, B), "x", Basis.BIIDOTCIRC)


def test_sk_abstraction_is_sound():
    m = parse_comb("x (K x) S")
    result = abstract(m, "x", Basis.SK)
    assert "x" not in cvars(result)
    assert abstraction_sound(m, ["x"], result, Basis.SK) is EqVerdict.EQUAL


def test_abstract_many_outermost_first():
    m = parse_comb("x y")
    result = abstract_many(m, ["x", "y"], Basis.BCI)
    assert cvars(result) == []
    assert abstraction_sound(m, ["x", "y"], result, Basis.BCI) is EqVerdict.EQUAL
    with pytest.raises(AbstractionError):
        abstract_many(m, ["x"], Basis.BCI, left=True)


def test_right_abstraction_through_left_application():
    m = CLApp(Sym("Ir"), x)
    result = abstract_right(m, "x")
    assert result == CLApp(Sym("Ir"), CLApp(Sym("Ir"), Sym("Dl")))
    assert abstraction_sound(m, ["x"], result, Basis.BIBDI) is EqVerdict.EQUAL


def test_right_abstraction_of_argument():
    m = CApp(f, x)
    assert abstract_right(m, "x") == capp(Sym("Br"), f, Sym("Ir"))
    assert abstraction_sound(m, ["x"], abstract_right(m, "x"), Basis.BIBDI) is EqVerdict.EQUAL


def test_left_abstraction():
    m = CLApp(x, f)
    result = abstract_left(m, "x")
    assert result == CLApp(Sym("Il"), CLApp(f, Sym("Bl")))
    assert abstraction_sound(m, ["x"], result, Basis.BIBDI, left=True) is EqVerdict.EQUAL
    with pytest.raises(AbstractionError):
        abstract_left(m, "f")


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([Basis.BCI, Basis.BIDOT, Basis.BIIDOT, Basis.BIILP, Basis.BIIDOTCIRC]),
       st.integers(0, 1_000_000))
def test_abstraction_matches_substitution(basis, seed):
    m = random_polynomial(basis, seed, depth=4)
    assert cvars(m) == ["x"]
    assert abstraction_sound(m, ["x"], abstract(m, "x", basis), basis) is EqVerdict.EQUAL


def test_fresh_arguments_avoid_constants():
    assert fresh_arguments(2, {"a0"}) == [Const("a1"), Const("a2")]


# ----------------------------------------------------------------------------
# Tensor translation
# ----------------------------------------------------------------------------

def test_compile_pairing():
    t = parse(r"\x y. x * y")
    compiled = compile_tensor(t)
    assert cvars(compiled) == []
    assert tensor_round_trip(t) is EqVerdict.EQUAL


def test_compile_tensor_rejects():
    with pytest.raises(TranslationError):
        compile_tensor(parse("x"))
    with pytest.raises(TranslationError):
        compile_tensor(parse(r"\<x. x"))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 1_000_000))
def test_tensor_round_trip(seed):
    t = random_term(Discipline.planar_tensor(), seed, depth=5)
    assert tensor_round_trip(t) is EqVerdict.EQUAL


# ----------------------------------------------------------------------------
# Derived combinators
# ----------------------------------------------------------------------------

def test_b_from_s_and_k():
    term, d = applied_to_constants(sk_to_bci()["B"], 3)
    a0, a1, a2 = (Const(f"a{i}") for i in range(3))
    assert equal(term, RApp(a0, RApp(a1, a2)), d) is EqVerdict.EQUAL


def test_c_from_s_and_k():
    term, d = applied_to_constants(sk_to_bci()["C"], 3)
    a0, a1, a2 = (Const(f"a{i}") for i in range(3))
    assert equal(term, app(a0, a2, a1), d) is EqVerdict.EQUAL


def test_c_from_t():
    term, d = applied_to_constants(derive_c_from_t(Sym("T")), 3, "linear")
    a0, a1, a2 = (Const(f"a{i}") for i in range(3))
    assert equal(term, app(a0, a2, a1), d) is EqVerdict.EQUAL


def test_dot_from_c_and_i():
    a, b = Const("a"), Const("b")
    d = Discipline.linear(["a", "b"])
    derived = RApp(expand(bci_dot()(Hole(a))), b)
    assert equal(derived, RApp(b, a), d) is EqVerdict.EQUAL


# ----------------------------------------------------------------------------
# CPS
# ----------------------------------------------------------------------------

def test_cps_of_variable():
    assert alpha_eq(cps_translate(Var("v")), parse(r"\k. k v"))


def test_computational_equality():
    beta_v = (parse(r"(\x. x) (\y. y)"), parse(r"\y. y"))
    assert computational_eq(*beta_v) is EqVerdict.EQUAL
    assert computational_eq(parse(r"\z. (\w. w) z"), parse(r"\w. w")) is EqVerdict.EQUAL
    assert computational_eq(parse(r"\x y. x"), parse(r"\x y. y")) is EqVerdict.NOT_EQUAL


def test_cps_covers_ordinary_terms_only():
    with pytest.raises(TranslationError):
        cps_translate(parse(r"\<x. x"))


# ----------------------------------------------------------------------------
# Left inverses
# ----------------------------------------------------------------------------

@pytest.mark.parametrize("text", [r"\x. x", r"\x. x (\y. y)", r"\x y z. x (y z)"])
def test_left_inverse_examples(text):
    m = parse(text)
    assert left_inverse_sound(left_inverse(m), m) is EqVerdict.EQUAL


def test_left_inverse_rejects():
    with pytest.raises(TranslationError):
        left_inverse(parse(r"\x y. y x"))
    with pytest.raises(TranslationError):
        left_inverse(parse("#c"))
    with pytest.raises(TranslationError):
        left_inverse(parse("x"))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 1_000_000))
def test_left_inverse_random(seed):
    m = random_closed_normal_planar(seed, depth=5)
    assert left_inverse_sound(left_inverse(m), m) is EqVerdict.EQUAL
