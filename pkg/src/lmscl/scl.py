"""SCL: the stream combinatory calculus.

Terms are constants, variables, term application ``T . U`` (``App``) and
stream application ``T * S`` (``Star``); streams are variables or
``T :: S``.  There are no binders, so substitution is textual.

Rewriting uses the seven combinator axioms plus the cons law
``T1 * (T2 :: S3) --> T1 . T2 * S3``.  Combinator redexes are matched on
the applicative spine with every cons stream unfolded, i.e. modulo the
cons law.  Matching syntactically instead leaves critical pairs such as
``K1 x * (y :: 'a)`` that rewrite to ``x`` and to the stuck ``K1 x y * 'a``.
Modulo the cons law the system is an orthogonal applicative system.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from lmscl.rewrite import (
    DEFAULT_BUDGET, Budget, EqResult, Reduction, Step, Verdict,
)

__all__ = [
    "SclConst", "Const", "Var", "App", "Star", "SVar", "Cons",
    "K0", "K1", "S0", "S1", "C10", "C11", "W1", "CONSTANTS",
    "measure", "node_count", "cons_count", "free_vars",
    "scl_subst_term", "scl_subst_stream", "scl_step", "scl_normalize",
    "scl_equal", "scl_join", "stream_items", "make_stream", "AXIOMS",
]


class SclConst(str, enum.Enum):
    K0 = "K0"
    K1 = "K1"
    S0 = "S0"
    S1 = "S1"
    C10 = "C10"
    C11 = "C11"
    W1 = "W1"

    def __str__(self):
        return self.value


class _Node:
    __slots__ = ()

    def __str__(self):
        from lmscl.surface import format_scl
        return format_scl(self)


@dataclass(frozen=True, slots=True, repr=False)
class Const(_Node):
    c: SclConst

    def __repr__(self):
        return self.c.value


@dataclass(frozen=True, slots=True, repr=False)
class Var(_Node):
    name: str

    def __repr__(self):
        return self.name


@dataclass(frozen=True, slots=True, repr=False)
class App(_Node):
    fun: "SclTerm"
    arg: "SclTerm"

    def __repr__(self):
        return f"<{self}>"


@dataclass(frozen=True, slots=True, repr=False)
class Star(_Node):
    fun: "SclTerm"
    stream: "SclStream"

    def __repr__(self):
        return f"<{self}>"


@dataclass(frozen=True, slots=True, repr=False)
class SVar(_Node):
    name: str

    def __repr__(self):
        return "'" + self.name


@dataclass(frozen=True, slots=True, repr=False)
class Cons(_Node):
    head: "SclTerm"
    tail: "SclStream"

    def __repr__(self):
        return f"<{self}>"


SclTerm = Union[Const, Var, App, Star]
SclStream = Union[SVar, Cons]

K0, K1, S0, S1, C10, C11, W1 = (Const(c) for c in SclConst)
CONSTANTS = {c.value: Const(c) for c in SclConst}


def node_count(t) -> int:
    n = 0
    stack = [t]
    while stack:
        u = stack.pop()
        n += 1
        if type(u) is App:
            stack += (u.fun, u.arg)
        elif type(u) is Star:
            stack += (u.fun, u.stream)
        elif type(u) is Cons:
            stack += (u.head, u.tail)
    return n


def cons_count(t) -> int:
    n = 0
    stack = [t]
    while stack:
        u = stack.pop()
        if type(u) is App:
            stack += (u.fun, u.arg)
        elif type(u) is Star:
            stack += (u.fun, u.stream)
        elif type(u) is Cons:
            n += 1
            stack += (u.head, u.tail)
    return n


def measure(t) -> int:
    """Node count plus the number of ``::`` occurrences."""
    return node_count(t) + cons_count(t)


def free_vars(t) -> tuple[set, set]:
    xs, als = set(), set()
    stack = [t]
    while stack:
        u = stack.pop()
        tu = type(u)
        if tu is Var:
            xs.add(u.name)
        elif tu is SVar:
            als.add(u.name)
        elif tu is App:
            stack += (u.fun, u.arg)
        elif tu is Star:
            stack += (u.fun, u.stream)
        elif tu is Cons:
            stack += (u.head, u.tail)
    return xs, als


def scl_subst_term(t, x: str, u):
    """``t[x:=u]``; ``t`` may be a term or a stream."""
    tt = type(t)
    if tt is Var:
        return u if t.name == x else t
    if tt is App:
        return App(scl_subst_term(t.fun, x, u), scl_subst_term(t.arg, x, u))
    if tt is Star:
        return Star(scl_subst_term(t.fun, x, u), scl_subst_term(t.stream, x, u))
    if tt is Cons:
        return Cons(scl_subst_term(t.head, x, u), scl_subst_term(t.tail, x, u))
    return t


def scl_subst_stream(t, a: str, s):
    """``t[a:=s]``; ``t`` may be a term or a stream."""
    tt = type(t)
    if tt is SVar:
        return s if t.name == a else t
    if tt is App:
        return App(scl_subst_stream(t.fun, a, s), scl_subst_stream(t.arg, a, s))
    if tt is Star:
        return Star(scl_subst_stream(t.fun, a, s), scl_subst_stream(t.stream, a, s))
    if tt is Cons:
        return Cons(scl_subst_stream(t.head, a, s), scl_subst_stream(t.tail, a, s))
    return t


def stream_items(s) -> tuple[list, str]:
    """Split a stream into its finite prefix of terms and its tail variable."""
    items = []
    while type(s) is Cons:
        items.append(s.head)
        s = s.tail
    return items, s.name


def make_stream(items, tail: str):
    s = SVar(tail)
    for t in reversed(list(items)):
        s = Cons(t, s)
    return s


# ---------------------------------------------------------------------------
# Spine view

def _spine(t):
    """Head and raw argument list: ``('t', term)`` or ``('s', stream)``."""
    args = []
    while True:
        tt = type(t)
        if tt is App:
            args.append(("t", t.arg))
            t = t.fun
        elif tt is Star:
            args.append(("s", t.stream))
            t = t.fun
        else:
            break
    args.reverse()
    return t, args


def _flatten(args):
    flat = []
    for kind, a in args:
        if kind == "t":
            flat.append(("t", a))
        else:
            while type(a) is Cons:
                flat.append(("t", a.head))
                a = a.tail
            flat.append(("s", a.name))
    return flat


def _rebuild(head, flat):
    for kind, a in flat:
        head = App(head, a) if kind == "t" else Star(head, SVar(a))
    return head


def _take_term(flat, i):
    if i < len(flat) and flat[i][0] == "t":
        return flat[i][1], i + 1
    return None, i


def _take_stream(flat, i):
    # a stream is any run of term arguments closed by a stream variable
    j = i
    while j < len(flat) and flat[j][0] == "t":
        j += 1
    if j == len(flat):
        return None, i
    return make_stream([a for _, a in flat[i:j]], flat[j][1]), j + 1


# argument shapes per constant: 't' term, 's' stream
_SHAPES = {
    SclConst.K0: "tt",
    SclConst.K1: "ts",
    SclConst.S0: "ttt",
    SclConst.S1: "tts",
    SclConst.C10: "tst",
    SclConst.C11: "tss",
    SclConst.W1: "ts",
}


def _fire(c: SclConst, a: list):
    if c is SclConst.K0:
        return a[0]
    if c is SclConst.K1:
        return a[0]
    if c is SclConst.S0:
        return App(App(a[0], a[2]), App(a[1], a[2]))
    if c is SclConst.S1:
        return App(Star(a[0], a[2]), Star(a[1], a[2]))
    if c is SclConst.C10:
        return Star(App(a[0], a[2]), a[1])
    if c is SclConst.C11:
        return Star(Star(a[0], a[2]), a[1])
    if c is SclConst.W1:
        return Star(Star(a[0], a[1]), a[1])
    raise AssertionError(c)


def _head_redex(head, args):
    if type(head) is not Const:
        return None
    flat = _flatten(args)
    i, taken = 0, []
    for kind in _SHAPES[head.c]:
        x, i = (_take_term if kind == "t" else _take_stream)(flat, i)
        if x is None:
            return None
        taken.append(x)
    return _rebuild(_fire(head.c, taken), flat[i:])


def _step(t):
    head, args = _spine(t)
    r = _head_redex(head, args)
    if r is not None:
        return head.c.value, (), r
    r = _cons_step(t)
    if r is not None:
        return r
    # no redex along the spine: descend into arguments, leftmost first
    path = [0] * len(args)
    for k, (kind, a) in enumerate(args):
        prefix = tuple(path[: len(args) - 1 - k]) + (1,)
        r = _step(a) if kind == "t" else _stream_step(a)
        if r is not None:
            return r[0], prefix + r[1], _replace(t, prefix, r[2])
    return None


def _cons_step(t):
    # outermost cons-law redex on the spine
    pos = ()
    u = t
    while type(u) in (App, Star):
        if type(u) is Star and type(u.stream) is Cons:
            new = Star(App(u.fun, u.stream.head), u.stream.tail)
            return "Cons", pos, _replace(t, pos, new)
        u = u.fun
        pos += (0,)
    return None


def _stream_step(s):
    if type(s) is not Cons:
        return None
    r = _step(s.head)
    if r is not None:
        return r[0], (0,) + r[1], Cons(r[2], s.tail)
    r = _stream_step(s.tail)
    if r is not None:
        return r[0], (1,) + r[1], Cons(s.head, r[2])
    return None


def _replace(t, pos, new):
    if not pos:
        return new
    i, rest = pos[0], pos[1:]
    tt = type(t)
    if tt is App:
        return App(_replace(t.fun, rest, new), t.arg) if i == 0 else App(t.fun, _replace(t.arg, rest, new))
    if tt is Star:
        return Star(_replace(t.fun, rest, new), t.stream) if i == 0 else Star(t.fun, _replace(t.stream, rest, new))
    if tt is Cons:
        return Cons(_replace(t.head, rest, new), t.tail) if i == 0 else Cons(t.head, _replace(t.tail, rest, new))
    raise ValueError("position out of range")


AXIOMS = tuple(c.value for c in SclConst) + ("Cons",)


def scl_step(t) -> Optional[Step]:
    r = _step(t)
    if r is None:
        return None
    return Step(r[0], r[1], r[2])


def scl_normalize(t, budget: Budget = DEFAULT_BUDGET) -> Reduction:
    trace = []
    while True:
        s = scl_step(t)
        if s is None:
            return Reduction(t, trace, False)
        if len(trace) >= budget.max_steps or node_count(s.term) > budget.max_term_size:
            return Reduction(t, trace, True)
        trace.append(s)
        t = s.term


def scl_join(t, u, budget: Budget = DEFAULT_BUDGET) -> Optional[bool]:
    """Joinability by rewriting: ``None`` when either side is unresolved."""
    a = scl_normalize(t, budget)
    if a.exhausted:
        return None
    b = scl_normalize(u, budget)
    if b.exhausted:
        return None
    return a.term == b.term


FAST_PATH_BUDGET = Budget(max_steps=500, max_term_size=20_000)


def scl_equal(t, u, budget: Budget = DEFAULT_BUDGET) -> EqResult:
    """Convertibility in SCL, extensionality included.

    Joinable rewriting answers ``Equal`` directly; otherwise both sides go
    through the translation into Lambda-mu and are compared there.
    """
    from lmscl.rewrite import lm_equal
    from lmscl.translate import to_lm

    fast = Budget(min(budget.max_steps, FAST_PATH_BUDGET.max_steps),
                  min(budget.max_term_size, FAST_PATH_BUDGET.max_term_size))
    a = scl_normalize(t, fast)
    b = scl_normalize(u, fast)
    if not a.exhausted and not b.exhausted and a.term == b.term:
        return EqResult(Verdict.EQUAL, a.term, b.term)
    return lm_equal(to_lm(t), to_lm(u), budget)
