r"""Bracket abstraction and the two translations."""

import pytest
from hypothesis import assume, given

from lmscl import scl, syntax as lm
from lmscl.rewrite import Budget, Verdict, lm_equal, normalize
from lmscl.scl import scl_equal, scl_join, scl_subst_stream, scl_subst_term
from lmscl.surface import parse_lm as P, parse_scl as S
from lmscl.translate import CONSTANT_TERMS, lam_star, mu_star, to_lm, to_lm_ctx, to_scl
from strategies import lm_terms, scl_streams, scl_terms, svars, tvars

B = Budget(2000, 50_000)


def test_lam_star_examples():
    assert lam_star("x", S("x")) == S("S0 K0 K0")
    assert lam_star("x", S("y")) == S("K0 y")
    assert lam_star("x", S("x * 'a")) == S("C10 (S0 K0 K0) * 'a")
    assert lam_star("x", S("x * (y :: 'a)")) == S("C10 (S0 (S0 K0 K0) (K0 y)) * 'a")


def test_mu_star_examples():
    assert mu_star("a", S("x")) == S("K1 x")
    assert mu_star("a", S("x * 'a")) == S("W1 (K1 x)")
    assert mu_star("a", S("x * 'a * 'b")) == S("C11 (W1 (K1 x)) * 'b")


def test_mu_star_prefers_constant_clause():
    # 'a is not free, so the K1 clause wins; the C11 form is equal
    got = mu_star("a", S("x * 'b"))
    assert got == S("K1 (x * 'b)")
    assert scl_equal(got, S("C11 (K1 x) * 'b")).verdict is Verdict.EQUAL


def test_to_scl_examples():
    assert to_scl(P(r"\x. x")) == S("S0 K0 K0")
    assert to_scl(P(r"#'a. x 'a")) == S("W1 (K1 x)")
    assert to_scl(P("x y")) == S("x y")


def test_to_lm_examples():
    assert to_lm(S("K0")) == P(r"\x y. x")
    assert to_lm(S("x * 'a")) == P("x 'a")
    assert to_lm(S("x * (y :: 'a)")) == P("x y 'a")
    assert to_lm_ctx(scl.make_stream([S("y"), S("z")], "a")) \
        == lm.Context((P("y"), P("z")), "a")


@pytest.mark.parametrize("name", [c.value for c in scl.SclConst])
def test_constants_are_closed_normal_forms(name):
    m = CONSTANT_TERMS[scl.SclConst(name)]
    assert lm.is_closed(m)
    assert normalize(m).term == m


@pytest.mark.parametrize("name", [c.value for c in scl.SclConst])
def test_constant_round_trip(name):
    t = scl.CONSTANTS[name]
    assert scl_equal(to_scl(to_lm(t)), t).verdict is Verdict.EQUAL


@given(scl_terms, tvars, scl_terms)
def test_lam_star_beta(t, x, u):
    assert scl_join(scl.App(lam_star(x, t), u), scl_subst_term(t, x, u), Budget(500)) \
        is not False


@given(scl_terms, svars, scl_streams)
def test_mu_star_beta(t, a, s):
    assert scl_join(scl.Star(mu_star(a, t), s), scl_subst_stream(t, a, s), Budget(500)) \
        is not False


@given(scl_terms, tvars)
def test_lam_star_eliminates(t, x):
    assert x not in scl.free_vars(lam_star(x, t))[0]


@given(scl_terms, svars)
def test_mu_star_eliminates(t, a):
    assert a not in scl.free_vars(mu_star(a, t))[1]


@given(lm_terms)
def test_round_trip_lm(m):
    assume(not normalize(m, B).exhausted)
    assert lm_equal(to_lm(to_scl(m)), m, B).verdict is Verdict.EQUAL


@given(scl_terms)
def test_round_trip_scl(t):
    assume(not normalize(to_lm(t), B).exhausted)
    assert scl_equal(to_scl(to_lm(t)), t, B).verdict is Verdict.EQUAL


@given(lm_terms, scl_streams)
def test_context_law(m, s):
    # (S_*[M])* = M* * S
    lhs = to_scl(lm.plug(to_lm_ctx(s), m))
    assume(not normalize(to_lm(lhs), B).exhausted)
    assert scl_equal(lhs, scl.Star(to_scl(m), s), B).verdict is Verdict.EQUAL


@given(lm_terms, tvars, lm_terms)
def test_term_substitution_commutes(m, x, n):
    lhs = to_scl(lm.subst_term(m, x, n))
    rhs = scl_subst_term(to_scl(m), x, to_scl(n))
    assume(not normalize(to_lm(lhs), B).exhausted)
    assert scl_equal(lhs, rhs, B).verdict is Verdict.EQUAL


@given(lm_terms, svars, lm_terms)
def test_structural_substitution_commutes(m, a, n):
    lhs = to_scl(lm.struct_subst(m, a, n))
    rhs = scl_subst_stream(to_scl(m), a, scl.Cons(to_scl(n), scl.SVar(a)))
    assume(not normalize(to_lm(lhs), B).exhausted)
    assert scl_equal(lhs, rhs, B).verdict is Verdict.EQUAL


def test_lam_star_congruence_extensional_pair():
    t = S("S0 K0 K0 x")
    u = S("S0 K0 (K0 K0) x")
    assert scl_equal(lam_star("x", t), lam_star("x", u)).verdict is Verdict.EQUAL
    assert scl_equal(mu_star("a", t), mu_star("a", u)).verdict is Verdict.EQUAL


@given(scl_terms, tvars)
def test_lam_star_congruence_on_reducts(t, x):
    s = scl.scl_step(t)
    assume(s is not None)
    assume(not normalize(to_lm(t), B).exhausted)
    assert scl_equal(lam_star(x, t), lam_star(x, s.term), B).verdict is Verdict.EQUAL


@given(scl_terms, svars)
def test_mu_star_congruence_on_reducts(t, a):
    s = scl.scl_step(t)
    assume(s is not None)
    assume(not normalize(to_lm(t), B).exhausted)
    assert scl_equal(mu_star(a, t), mu_star(a, s.term), B).verdict is Verdict.EQUAL
