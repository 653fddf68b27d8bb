"""Oriented Lambda-mu axioms, leftmost-outermost normalization, and a
budgeted three-valued convertibility check.

Rules (all contracting): ``BetaT``, ``BetaS``, ``Mu``, ``EtaT``, ``EtaS``
and ``Fold``.  ``Fold`` is the fst axiom read right to left::

    \\x. #'a. M[P 'a := P x 'a]  -->  #'a. M      (x only occurs as such)

Without it ``#'a. y`` and ``\\x. #'a. y`` are convertible but have distinct
normal forms.  ``Fst`` (the same axiom left to right) fires on ``#'a. M``
when ``M`` applies an abstraction directly to ``'a``; the exposed
``(\\x. N) y 'a`` then reduces by ``BetaT``.

Under ``rules="fst"`` the ``Mu`` rule is replaced by ``Fst``, which only
fires on a mu-abstraction sitting in function position of a term
application (unrestricted fst never terminates); the following ``BetaT``
step then completes what ``Mu`` would have done in one step.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from lmscl.syntax import (
    App, BVar, Lam, Mu, SApp, Term, ctx_at, free_vars, inst_stream, inst_term,
    mus, shift,
)

__all__ = [
    "Rule", "Budget", "Verdict", "EqResult", "Step", "Reduction",
    "PROFILES", "DEFAULT_BUDGET", "step", "contract", "normalize",
    "lm_equal", "replace_at", "subterm_at", "all_steps",
]


class Rule(str, enum.Enum):
    BETA_T = "BetaT"
    BETA_S = "BetaS"
    ETA_T = "EtaT"
    ETA_S = "EtaS"
    MU = "Mu"
    FST = "Fst"
    FOLD = "Fold"

    def __str__(self):
        return self.value


RULE_SETS = ("mu", "fst")


@dataclass(frozen=True)
class Budget:
    max_steps: int = 10_000
    max_term_size: int = 100_000

    def __post_init__(self):
        if self.max_steps <= 0 or self.max_term_size <= 0:
            raise ValueError("budget bounds must be strictly positive")


DEFAULT_BUDGET = Budget()

PROFILES = {
    "fast": DEFAULT_BUDGET,
    "thorough": Budget(max_steps=200_000, max_term_size=2_000_000),
}


class Verdict(str, enum.Enum):
    EQUAL = "Equal"
    DISTINCT = "Distinct"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


class Step(NamedTuple):
    rule: str
    position: tuple
    term: object


@dataclass
class Reduction:
    term: object
    trace: list = field(default_factory=list)
    exhausted: bool = False

    @property
    def steps(self) -> int:
        return len(self.trace)


@dataclass
class EqResult:
    verdict: Verdict
    left: object = None
    right: object = None

    def __bool__(self):
        return self.verdict is Verdict.EQUAL


# ---------------------------------------------------------------------------
# Fold side condition and transformation

def _fold_ok(m: Term, dt: int, ds: int) -> bool:
    # every occurrence of stream index ds must be (P x) ds with x = term
    # index dt, and x must occur nowhere else
    if not (m.tmask >> dt) & 1 and not (m.smask >> ds) & 1:
        return True
    t = type(m)
    if t is BVar:
        return False
    if t is Lam:
        return _fold_ok(m.body, dt + 1, ds)
    if t is Mu:
        return _fold_ok(m.body, dt, ds + 1)
    if t is App:
        return _fold_ok(m.fun, dt, ds) and _fold_ok(m.arg, dt, ds)
    if t is SApp:
        if m.stream == ds:
            f = m.fun
            # (\z. N) x 'a is left to BetaT, otherwise Fold undoes Fst
            return (type(f) is App and type(f.arg) is BVar
                    and f.arg.index == dt and type(f.fun) is not Lam
                    and _fold_ok(f.fun, dt, ds))
        return _fold_ok(m.fun, dt, ds)
    return True


def _lam_on(m: Term, ds: int) -> bool:
    """Does ``(\\x. N) s`` occur in ``m`` for loose stream index ``ds``?"""
    if not (m.smask >> ds) & 1:
        return False
    t = type(m)
    if t is SApp:
        if m.stream == ds and type(m.fun) is Lam:
            return True
        return _lam_on(m.fun, ds)
    if t is App:
        return _lam_on(m.fun, ds) or _lam_on(m.arg, ds)
    if t is Lam:
        return _lam_on(m.body, ds)
    if t is Mu:
        return _lam_on(m.body, ds + 1)
    return False


def _fold(m: Term, dt: int, ds: int) -> Term:
    if not (m.smask >> ds) & 1:
        return m
    t = type(m)
    if t is Lam:
        return Lam(_fold(m.body, dt + 1, ds), m.hint)
    if t is Mu:
        return Mu(_fold(m.body, dt, ds + 1), m.hint)
    if t is App:
        return App(_fold(m.fun, dt, ds), _fold(m.arg, dt, ds))
    if t is SApp:
        if m.stream == ds:
            return SApp(_fold(m.fun.fun, dt, ds), ds)
        return SApp(_fold(m.fun, dt, ds), m.stream)
    return m


# ---------------------------------------------------------------------------
# Contraction at the root

def contract(m: Term, rules: str = "mu", in_head: bool = False):
    """Contract ``m`` at its root; returns ``(rule, result)`` or ``None``.

    ``in_head`` tells whether ``m`` is the function of a term application,
    the only place the restricted fst rule fires.
    """
    t = type(m)
    if t is App:
        f = m.fun
        if type(f) is Lam:
            return Rule.BETA_T, inst_term(f.body, m.arg)
        if type(f) is Mu and rules == "mu":
            body = ctx_at(f.body, 0, (shift(m.arg, 0, 1),), 0)
            return Rule.MU, Mu(body, f.hint)
    elif t is SApp:
        f = m.fun
        if type(f) is Mu:
            return Rule.BETA_S, inst_stream(f.body, m.stream)
    elif t is Lam:
        b = m.body
        if type(b) is App and type(b.arg) is BVar and b.arg.index == 0 \
                and not b.fun.tmask & 1:
            return Rule.ETA_T, shift(b.fun, -1, 0)
        if type(b) is Mu and _fold_ok(b.body, 0, 0):
            return Rule.FOLD, Mu(shift(_fold(b.body, 0, 0), -1, 0), b.hint)
    elif t is Mu:
        b = m.body
        if type(b) is SApp and b.stream == 0 and not b.fun.smask & 1:
            return Rule.ETA_S, shift(b.fun, 0, -1)
        if (in_head and rules == "fst") or _lam_on(b, 0):
            body = ctx_at(shift(b, 1, 0), 0, (BVar(0),), 0)
            return Rule.FST, Lam(Mu(body, m.hint), "x")
    return None


def _step(m: Term, rules: str, in_head: bool):
    if m.nf and not (in_head and rules == "fst" and type(m) is Mu):
        return None
    r = contract(m, rules, in_head)
    if r is not None:
        return r[0], (), r[1]
    t = type(m)
    if t is App:
        r = _step(m.fun, rules, True)
        if r is not None:
            return r[0], (0,) + r[1], App(r[2], m.arg)
        r = _step(m.arg, rules, False)
        if r is not None:
            return r[0], (1,) + r[1], App(m.fun, r[2])
    elif t is SApp:
        r = _step(m.fun, rules, False)
        if r is not None:
            return r[0], (0,) + r[1], SApp(r[2], m.stream)
    elif t is Lam or t is Mu:
        r = _step(m.body, rules, False)
        if r is not None:
            return r[0], (0,) + r[1], t(r[2], m.hint)
    # fst-redexes only exist in head position; a head mu that is otherwise
    # normal must stay unmarked so the parent can still trigger it
    if not (t is Mu and rules == "fst"):
        m.nf = True
    return None


def step(m: Term, rules: str = "mu") -> Optional[Step]:
    """One leftmost-outermost step; ``None`` iff ``m`` is normal."""
    if rules not in RULE_SETS:
        raise ValueError(f"unknown rule set {rules!r}")
    r = _step(m, rules, False)
    if r is None:
        return None
    return Step(r[0], r[1], r[2])


def normalize(m: Term, budget: Budget = DEFAULT_BUDGET, rules: str = "mu") -> Reduction:
    trace = []
    while True:
        s = step(m, rules)
        if s is None:
            return Reduction(m, trace, False)
        if len(trace) >= budget.max_steps or s.term.size > budget.max_term_size:
            return Reduction(m, trace, True)
        trace.append(s)
        m = s.term


def lm_equal(m: Term, n: Term, budget: Budget = DEFAULT_BUDGET,
             rules: str = "mu") -> EqResult:
    """Compare normal forms; ``Unknown`` if either side runs out of budget.

    Distinct normal forms with free stream variables are compared once more
    after binding those variables with ``#``: ``M = N`` iff
    ``#'b. M = #'b. N``, and under the binder a stuck ``(\\x. P) 'b`` can
    be unblocked by ``Fst``.  The reported terms are the normal forms of
    the inputs themselves (or the unreduced input, for a side never
    normalized because the other one already ran out of budget).
    """
    a = normalize(m, budget, rules)
    if a.exhausted:
        # the verdict is Unknown whatever the other side does
        return EqResult(Verdict.UNKNOWN, a.term, n)
    b = normalize(n, budget, rules)
    if b.exhausted:
        return EqResult(Verdict.UNKNOWN, a.term, b.term)
    if a.term == b.term:
        return EqResult(Verdict.EQUAL, a.term, b.term)
    streams = sorted(free_vars(a.term)[1] | free_vars(b.term)[1])
    if streams:
        ca = normalize(mus(streams, a.term), budget, rules)
        if ca.exhausted:
            return EqResult(Verdict.UNKNOWN, a.term, b.term)
        cb = normalize(mus(streams, b.term), budget, rules)
        if cb.exhausted:
            return EqResult(Verdict.UNKNOWN, a.term, b.term)
        if ca.term == cb.term:
            return EqResult(Verdict.EQUAL, a.term, b.term)
    return EqResult(Verdict.DISTINCT, a.term, b.term)


# ---------------------------------------------------------------------------
# Positions

def subterm_at(m: Term, position: tuple) -> Term:
    for i in position:
        if type(m) is App:
            m = m.fun if i == 0 else m.arg
        else:
            m = m.fun if type(m) is SApp else m.body
    return m


def replace_at(m: Term, position: tuple, new: Term) -> Term:
    if not position:
        return new
    i, rest = position[0], position[1:]
    t = type(m)
    if t is App:
        if i == 0:
            return App(replace_at(m.fun, rest, new), m.arg)
        return App(m.fun, replace_at(m.arg, rest, new))
    if t is SApp:
        return SApp(replace_at(m.fun, rest, new), m.stream)
    return t(replace_at(m.body, rest, new), m.hint)


def all_steps(m: Term, rules: str = "mu"):
    """Every one-step reduct of ``m``, one per redex, outermost first."""
    out = []
    _collect(m, rules, False, (), out)
    return [Step(rule, pos, replace_at(m, pos, new)) for rule, pos, new in out]


def _collect(m, rules, in_head, pos, out):
    r = contract(m, rules, in_head)
    if r is not None:
        out.append((r[0], pos, r[1]))
    t = type(m)
    if t is App:
        _collect(m.fun, rules, True, pos + (0,), out)
        _collect(m.arg, rules, False, pos + (1,), out)
    elif t is SApp or t is Lam or t is Mu:
        _collect(m.fun if t is SApp else m.body, rules, False, pos + (0,), out)
