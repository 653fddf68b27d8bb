"""Bracket abstraction and the translations between Lambda-mu and SCL."""

from __future__ import annotations

from lmscl import scl, syntax as lm
from lmscl.scl import App, Cons, Star, SVar, Var

__all__ = [
    "lam_star", "mu_star", "to_scl", "to_lm", "to_lm_ctx", "CONSTANT_TERMS",
]


def _has_tvar(t, x: str) -> bool:
    stack = [t]
    while stack:
        u = stack.pop()
        tu = type(u)
        if tu is Var:
            if u.name == x:
                return True
        elif tu is App:
            stack += (u.fun, u.arg)
        elif tu is Star:
            stack += (u.fun, u.stream)
        elif tu is Cons:
            stack += (u.head, u.tail)
    return False


def _has_svar(t, a: str) -> bool:
    stack = [t]
    while stack:
        u = stack.pop()
        tu = type(u)
        if tu is SVar:
            if u.name == a:
                return True
        elif tu is App:
            stack += (u.fun, u.arg)
        elif tu is Star:
            stack += (u.fun, u.stream)
        elif tu is Cons:
            stack += (u.head, u.tail)
    return False


_I = App(App(scl.S0, scl.K0), scl.K0)


def lam_star(x: str, t):
    """Combinator term ``U`` with ``U . V = t[x:=V]``.

    Clauses are tried in order: the variable itself, ``x`` not free, ``.``,
    ``*`` with a variable stream, ``*`` with a cons stream.  Every recursive
    call is on a term of strictly smaller measure.
    """
    if type(t) is Var and t.name == x:
        return _I
    if not _has_tvar(t, x):
        return App(scl.K0, t)
    if type(t) is App:
        return App(App(scl.S0, lam_star(x, t.fun)), lam_star(x, t.arg))
    assert type(t) is Star, t
    s = t.stream
    if type(s) is SVar:
        return Star(App(scl.C10, lam_star(x, t.fun)), s)
    assert type(s) is Cons, s
    return lam_star(x, Star(App(t.fun, s.head), s.tail))


def mu_star(a: str, t):
    """Combinator term ``U`` with ``U * S = t[a:=S]``."""
    if not _has_svar(t, a):
        return App(scl.K1, t)
    if type(t) is App:
        return App(App(scl.S1, mu_star(a, t.fun)), mu_star(a, t.arg))
    assert type(t) is Star, t
    s = t.stream
    if type(s) is SVar:
        if s.name == a:
            return App(scl.W1, mu_star(a, t.fun))
        return Star(App(scl.C11, mu_star(a, t.fun)), s)
    assert type(s) is Cons, s
    return mu_star(a, Star(App(t.fun, s.head), s.tail))


def to_scl(m: lm.Term):
    """The translation ``M*``; binders go through ``lam_star``/``mu_star``."""
    return _to_scl(m, [], [])


def _to_scl(m, tnames, snames):
    t = type(m)
    if t is lm.Var:
        return Var(m.name)
    if t is lm.BVar:
        return Var(tnames[-1 - m.index])
    if t is lm.App:
        return App(_to_scl(m.fun, tnames, snames), _to_scl(m.arg, tnames, snames))
    if t is lm.SApp:
        s = m.stream
        name = snames[-1 - s] if isinstance(s, int) else s
        return Star(_to_scl(m.fun, tnames, snames), SVar(name))
    if t is lm.Lam:
        # '%' never occurs in parsed names, so these cannot clash
        x = f"%x{len(tnames)}"
        return lam_star(x, _to_scl(m.body, tnames + [x], snames))
    if t is lm.Mu:
        a = f"%a{len(snames)}"
        return mu_star(a, _to_scl(m.body, tnames, snames + [a]))
    raise TypeError(f"not a Lambda-mu term: {m!r}")


def _constant_terms():
    V, ap = lm.Var, lm.app
    x, y, z = V("x"), V("y"), V("z")
    return {
        scl.SclConst.K0: lm.lams("xy", x),
        scl.SclConst.K1: lm.lam("x", lm.mu("a", x)),
        scl.SclConst.S0: lm.lams("xyz", ap(x, z, ap(y, z))),
        scl.SclConst.S1: lm.lams("xy", lm.mu("a", ap(x, "a", ap(y, "a")))),
        scl.SclConst.C10: lm.lam("x", lm.mu("a", lm.lam("y", ap(x, y, "a")))),
        scl.SclConst.C11: lm.lam("x", lm.mus("ab", ap(x, "b", "a"))),
        scl.SclConst.W1: lm.lam("x", lm.mu("a", ap(x, "a", "a"))),
    }


CONSTANT_TERMS = _constant_terms()


def to_lm(t) -> lm.Term:
    """The translation ``T_*`` from SCL terms to Lambda-mu terms."""
    tt = type(t)
    if tt is scl.Const:
        return CONSTANT_TERMS[t.c]
    if tt is Var:
        return lm.Var(t.name)
    if tt is App:
        return lm.App(to_lm(t.fun), to_lm(t.arg))
    if tt is Star:
        return lm.plug(to_lm_ctx(t.stream), to_lm(t.fun))
    raise TypeError(f"not an SCL term: {t!r}")


def to_lm_ctx(s) -> lm.Context:
    """The translation ``S_*`` from SCL streams to contexts."""
    items, tail = scl.stream_items(s)
    return lm.Context(tuple(to_lm(u) for u in items), tail)
