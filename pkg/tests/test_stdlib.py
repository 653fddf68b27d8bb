r"""Named encodings and the stream examples."""

import pytest

from lmscl import syntax as lm
from lmscl.rewrite import Budget, Rule, Verdict, lm_equal, normalize
from lmscl.stdlib import BUILTIN_NAMES, BudgetExceeded, builtin, church, run_nth_demo
from lmscl.surface import parse_lm as P

ELEMENTS = [P(r"\z. z"), P(r"\x y. x"), P(r"\x y. y"), P(r"\f x. f (f x)"), P(r"\x y z. z y")]


def nf(m):
    r = normalize(m)
    assert not r.exhausted
    return r.term


def test_hd_is_verbatim():
    assert builtin("hd").term == P(r"\x. #'a. x")


def test_church():
    assert church(2) == P(r"\f x. f (f x)")
    assert builtin("church(3)").term == church(3)
    assert builtin("c0").term == church(0)
    with pytest.raises(ValueError):
        church(-1)


def test_unknown_builtin():
    with pytest.raises(KeyError):
        builtin("tail")


def test_builtins_closed():
    for name in BUILTIN_NAMES:
        if name != "church(n)":
            assert lm.is_closed(builtin(name).term), name


def test_booleans_and_if():
    t, f = builtin("true").term, builtin("false").term
    assert nf(lm.app(builtin("if").term, t, P("a"), P("b"))) == P("a")
    assert nf(lm.app(builtin("if").term, f, P("a"), P("b"))) == P("b")


def test_zero():
    z, t, f = builtin("zero?").term, builtin("true").term, builtin("false").term
    assert nf(lm.app(z, church(0))) == t
    for k in range(1, 6):
        assert nf(lm.app(z, church(k))) == f


def test_pred():
    p = builtin("pred").term
    # church(1) is an eta-redex, so compare normal forms
    for k in range(5):
        assert nf(lm.app(p, church(k + 1))) == nf(church(k))
    assert nf(lm.app(p, church(0))) == church(0)


def test_pairs():
    pair, fst, snd = (builtin(n).term for n in ("pair", "fst", "snd"))
    pq = lm.app(pair, P("p"), P("q"))
    assert nf(lm.app(fst, pq)) == P("p")
    assert nf(lm.app(snd, pq)) == P("q")


def test_fixed_point():
    y, f = builtin("Y").term, P(r"\g. \z. z")
    assert lm_equal(lm.app(y, f), lm.app(f, lm.app(y, f))).verdict is Verdict.EQUAL


@pytest.mark.parametrize("n", range(5))
def test_hd_chain(n):
    args = ELEMENTS[: n + 1]
    r = normalize(lm.app(builtin("hd").term, *args, "b"))
    assert r.term == args[0]
    rules = [s.rule for s in r.trace]
    assert rules == [Rule.BETA_T] + [Rule.MU] * n + [Rule.BETA_S]


def test_nth_examples():
    assert run_nth_demo(ELEMENTS[:3], 1) == P(r"\x y. x")
    assert run_nth_demo(ELEMENTS[:1], 0) == P(r"\z. z")


def test_nth_preconditions():
    with pytest.raises(ValueError):
        run_nth_demo(ELEMENTS[:2], 2)
    with pytest.raises(ValueError):
        run_nth_demo([], 0)
    with pytest.raises(ValueError):
        run_nth_demo([P("x")], 0)


def test_nth_budget():
    with pytest.raises(BudgetExceeded):
        run_nth_demo(ELEMENTS, 4, Budget(max_steps=20))
