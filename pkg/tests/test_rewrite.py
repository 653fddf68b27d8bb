r"""Oriented axioms, leftmost-outermost normalization and lm_equal."""

import random

import pytest
from hypothesis import assume, given

from lmscl import syntax as lm
from lmscl.gen import random_lm
from lmscl.rewrite import (
    Budget, Rule, Verdict, all_steps, contract, lm_equal, normalize, replace_at,
    step, subterm_at,
)
from lmscl.stdlib import builtin
from lmscl.surface import parse_lm as P
from strategies import lm_terms, tvars

OMEGA = P(r"(\x. x x) (\x. x x)")
SMALL = Budget(max_steps=50)


@pytest.mark.parametrize("src, rule, result", [
    (r"(\x. x) y", Rule.BETA_T, "y"),
    (r"(#'a. x 'a) 'b", Rule.BETA_S, "x 'b"),
    (r"(#'a. x) n", Rule.MU, r"#'a. x"),
    (r"\x. y x", Rule.ETA_T, "y"),
    (r"#'a. y 'a", Rule.ETA_S, "y"),
])
def test_step_examples(src, rule, result):
    s = step(P(src))
    assert s.rule is rule
    assert s.term == P(result)


def test_step_on_normal_form():
    assert step(P(r"\x. x")) is None
    assert step(P("x 'a y")) is None


def test_beta_s_wins_over_mu():
    # a stream argument selects BetaS even though the head is a mu
    assert step(P(r"(#'a. x 'a) 'b")).rule is Rule.BETA_S


def test_mu_inserts_argument():
    s = step(P(r"(#'a. x 'a (y 'a)) n"))
    assert s.rule is Rule.MU
    assert s.term == P(r"#'a. x n 'a (y n 'a)")


def test_hd_trace():
    n0, n1 = P(r"\z. z"), P(r"\x y. x")
    r = normalize(lm.app(builtin("hd").term, n0, n1, "b"))
    assert r.term == n0
    assert [s.rule for s in r.trace] == [Rule.BETA_T, Rule.MU, Rule.BETA_S]


def test_eta_example():
    r = normalize(P(r"\x. \y. x y"))
    assert r.term == P(r"\x. x")
    assert [s.rule for s in r.trace] == [Rule.ETA_T]


def test_omega_exhausts():
    r = normalize(OMEGA, SMALL)
    assert r.exhausted
    assert r.steps == 50


def test_size_bound():
    grow = P(r"(\x. x x x) (\x. x x x)")
    r = normalize(grow, Budget(max_steps=10_000, max_term_size=200))
    assert r.exhausted and r.steps < 100


def test_budget_validation():
    with pytest.raises(ValueError):
        Budget(max_steps=0)
    with pytest.raises(ValueError):
        step(P("x"), rules="nope")


def test_lm_equal_examples():
    assert lm_equal(P(r"\x y. x"), P(r"\x y. y")).verdict is Verdict.DISTINCT
    assert lm_equal(P(r"#'a. y 'a"), P(r"\x. #'a. y x 'a")).verdict is Verdict.EQUAL
    assert lm_equal(OMEGA, OMEGA, SMALL).verdict is Verdict.UNKNOWN


def test_fold_and_fst_forms():
    # #'a. y and \x. #'a. y are convertible through fst
    assert lm_equal(P(r"#'a. y"), P(r"\x. #'a. y")).verdict is Verdict.EQUAL
    s = step(P(r"\x. #'a. y x 'a"))
    assert s.rule in (Rule.FOLD, Rule.ETA_T)


@given(lm_terms, lm_terms)
def test_binding_free_streams_preserves_verdict(m, n):
    # M = N iff #'a. M = #'a. N
    b = Budget(300, 10_000)
    streams = sorted(lm.free_vars(m)[1] | lm.free_vars(n)[1])
    open_v = lm_equal(m, n, b).verdict
    closed_v = lm_equal(lm.mus(streams, m), lm.mus(streams, n), b).verdict
    assume(Verdict.UNKNOWN not in (open_v, closed_v))
    assert open_v is closed_v


def test_eq_result_truthiness():
    assert lm_equal(P("x"), P("x"))
    assert not lm_equal(P("x"), P("y"))


def _in_head(m, pos):
    if not pos:
        return False
    parent = subterm_at(m, pos[:-1])
    return type(parent) is lm.App and pos[-1] == 0


@pytest.mark.parametrize("rules", ["mu", "fst"])
def test_trace_replays(rules):
    rng = random.Random(7)
    for _ in range(200):
        m = random_lm(rng, 12)
        r = normalize(m, Budget(200), rules)
        cur = m
        for s in r.trace:
            rule, new = contract(subterm_at(cur, s.position), rules, _in_head(cur, s.position))
            assert rule is s.rule
            assert replace_at(cur, s.position, new) == s.term
            cur = s.term


def test_determinism():
    rng = random.Random(3)
    for _ in range(50):
        m = random_lm(rng, 14)
        a, b = normalize(m, Budget(300)), normalize(m, Budget(300))
        assert a.trace == b.trace and a.term == b.term


def _closed_streams(m):
    return lm.mus(sorted(lm.free_vars(m)[1]), m)


def test_local_confluence_sample():
    rng = random.Random(11)
    budget = Budget(500, 20_000)
    checked = 0
    while checked < 300:
        m = _closed_streams(random_lm(rng, 12))
        reducts = all_steps(m)
        if len(reducts) < 2:
            continue
        nfs = [normalize(s.term, budget) for s in reducts]
        nfs = [r.term for r in nfs if not r.exhausted]
        assert all(t == nfs[0] for t in nfs)
        checked += 1


@given(tvars, lm_terms, tvars, lm_terms, lm_terms)
def test_local_confluence_property(x, body, y, inner, other):
    # an outer beta redex whose argument holds a second redex
    m = lm.App(lm.lam(x, body), lm.App(lm.lam(y, inner), other))
    budget = Budget(300, 10_000)
    reducts = all_steps(m)
    assert len(reducts) >= 2
    first = reducts[0].term
    for s in reducts[1:]:
        assert lm_equal(first, s.term, budget).verdict is not Verdict.DISTINCT


@given(lm_terms)
def test_normal_forms_have_no_redex(m):
    r = normalize(m, Budget(300, 10_000))
    assume(not r.exhausted)
    assert all_steps(r.term) == []


@given(lm_terms, lm_terms)
def test_lm_equal_symmetric(m, n):
    b = Budget(300, 10_000)
    assert lm_equal(m, n, b).verdict is lm_equal(n, m, b).verdict


FST_PAIRS = [
    (r"(#'a. x 'a) n", r"#'a. x n 'a"),
    (r"(#'a. x) n", r"#'a. x"),
    (r"(#'a. x 'a y 'a) n", r"#'a. x n 'a y n 'a"),
    (r"#'a. y 'a", r"\x. #'a. y x 'a"),
    (r"\x y. x", r"\x y. y"),
]


@pytest.mark.parametrize("lhs, rhs", FST_PAIRS)
def test_fst_agrees_with_mu(lhs, rhs):
    a = lm_equal(P(lhs), P(rhs), rules="mu").verdict
    b = lm_equal(P(lhs), P(rhs), rules="fst").verdict
    assert a is b and a is not Verdict.UNKNOWN


def test_fst_mode_uses_fst_rule():
    r = normalize(P(r"(#'a. x 'a 'a) n"), rules="fst")
    assert Rule.FST in [s.rule for s in r.trace]
    assert Rule.MU not in [s.rule for s in r.trace]
    assert r.term == P(r"#'a. x n 'a n 'a")
    assert normalize(P(r"(#'a. x 'a 'a) n")).term == r.term
