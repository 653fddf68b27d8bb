"""Two-sorted abstract syntax of the untyped Lambda-mu calculus.

Bound variables are de Bruijn indices with separate counters per sort:
term indices count enclosing ``Lam`` binders only, stream indices count
enclosing ``Mu`` binders only.  Free variables keep their names, so
alpha-equivalence is structural equality and no substitution can capture.

Every node caches its size and two bitmasks of loose (dangling) indices,
which lets the substitution routines skip untouched subterms in O(1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

__all__ = [
    "Term", "Var", "BVar", "Lam", "App", "Mu", "SApp", "Context",
    "lam", "mu", "app", "lams", "mus",
    "free_vars", "alpha_eq", "subst_term", "rename_stream",
    "struct_subst", "plug", "ctx_subst", "is_closed",
    "open_lam", "open_mu",
]

# A stream argument is a free stream name (str) or a bound stream index (int).
StreamRef = Union[str, int]


class Term:
    __slots__ = ("size", "tmask", "smask", "_hash", "nf")

    def __eq__(self, other):
        return _equal(self, other)

    def __ne__(self, other):
        return not _equal(self, other)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = self._compute_hash()
        return h

    def __repr__(self):
        from lmscl.surface import format_lm
        return f"<{format_lm(self)}>"

    def __str__(self):
        from lmscl.surface import format_lm
        return format_lm(self)


class Var(Term):
    """A free term variable."""

    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name
        self.size = 1
        self.tmask = self.smask = 0
        self._hash = None
        self.nf = True

    def _compute_hash(self):
        return hash(("v", self.name))


class BVar(Term):
    """A bound term variable, as a de Bruijn index over ``Lam`` binders."""

    __slots__ = ("index",)

    def __init__(self, index: int):
        self.index = index
        self.size = 1
        self.tmask = 1 << index
        self.smask = 0
        self._hash = None
        self.nf = True

    def _compute_hash(self):
        return hash(("i", self.index))


class Lam(Term):
    __slots__ = ("body", "hint")

    def __init__(self, body: Term, hint: str = "x"):
        self.body = body
        self.hint = hint
        self.size = body.size + 1
        self.tmask = body.tmask >> 1
        self.smask = body.smask
        self._hash = None
        self.nf = None

    def _compute_hash(self):
        return hash(("l", hash(self.body)))


class Mu(Term):
    __slots__ = ("body", "hint")

    def __init__(self, body: Term, hint: str = "a"):
        self.body = body
        self.hint = hint
        self.size = body.size + 1
        self.tmask = body.tmask
        self.smask = body.smask >> 1
        self._hash = None
        self.nf = None

    def _compute_hash(self):
        return hash(("m", hash(self.body)))


class App(Term):
    __slots__ = ("fun", "arg")

    def __init__(self, fun: Term, arg: Term):
        self.fun = fun
        self.arg = arg
        self.size = fun.size + arg.size + 1
        self.tmask = fun.tmask | arg.tmask
        self.smask = fun.smask | arg.smask
        self._hash = None
        self.nf = None

    def _compute_hash(self):
        return hash(("a", hash(self.fun), hash(self.arg)))


class SApp(Term):
    """Application of a term to a stream variable (free name or index)."""

    __slots__ = ("fun", "stream")

    def __init__(self, fun: Term, stream: StreamRef):
        self.fun = fun
        self.stream = stream
        # the stream variable counts as a node of its own
        self.size = fun.size + 2
        self.tmask = fun.tmask
        self.smask = fun.smask | (1 << stream if isinstance(stream, int) else 0)
        self._hash = None
        self.nf = None

    def _compute_hash(self):
        return hash(("s", hash(self.fun), self.stream))


def _equal(m: Term, n: Term) -> bool:
    # explicit stack: terms produced by long reductions get deep
    stack = [(m, n)]
    while stack:
        a, b = stack.pop()
        if a is b:
            continue
        if type(a) is not type(b) or a.size != b.size:
            return False
        if a.tmask != b.tmask or a.smask != b.smask:
            return False
        if a._hash is not None and b._hash is not None and a._hash != b._hash:
            return False
        t = type(a)
        if t is Var:
            if a.name != b.name:
                return False
        elif t is BVar:
            if a.index != b.index:
                return False
        elif t is Lam or t is Mu:
            stack.append((a.body, b.body))
        elif t is App:
            stack.append((a.arg, b.arg))
            stack.append((a.fun, b.fun))
        elif t is SApp:
            if a.stream != b.stream:
                return False
            stack.append((a.fun, b.fun))
        else:
            return False
    return True


@dataclass(frozen=True)
class Context:
    """A stream-shaped context ``[] M1 ... Mn alpha``."""

    args: tuple = ()
    tail: str = "a"

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


# ---------------------------------------------------------------------------
# Index-level machinery

def shift(m: Term, dt: int, ds: int, ct: int = 0, cs: int = 0) -> Term:
    """Add ``dt``/``ds`` to loose term/stream indices at or above the cutoffs."""
    if (dt == 0 or m.tmask >> ct == 0) and (ds == 0 or m.smask >> cs == 0):
        return m
    t = type(m)
    if t is BVar:
        return BVar(m.index + dt) if m.index >= ct else m
    if t is Lam:
        return Lam(shift(m.body, dt, ds, ct + 1, cs), m.hint)
    if t is Mu:
        return Mu(shift(m.body, dt, ds, ct, cs + 1), m.hint)
    if t is App:
        return App(shift(m.fun, dt, ds, ct, cs), shift(m.arg, dt, ds, ct, cs))
    if t is SApp:
        s = m.stream
        if isinstance(s, int) and s >= cs:
            s += ds
        return SApp(shift(m.fun, dt, ds, ct, cs), s)
    return m


def inst_term(m: Term, n: Term, dt: int = 0, ds: int = 0) -> Term:
    """Replace loose term index ``dt`` by ``n`` and close the gap above it.

    ``n`` is expressed relative to the binder being removed; it is shifted
    by the binders crossed on the way down.
    """
    if m.tmask >> dt == 0:
        return m
    t = type(m)
    if t is BVar:
        i = m.index
        if i == dt:
            return shift(n, dt, ds)
        return BVar(i - 1) if i > dt else m
    if t is Lam:
        return Lam(inst_term(m.body, n, dt + 1, ds), m.hint)
    if t is Mu:
        return Mu(inst_term(m.body, n, dt, ds + 1), m.hint)
    if t is App:
        return App(inst_term(m.fun, n, dt, ds), inst_term(m.arg, n, dt, ds))
    if t is SApp:
        return SApp(inst_term(m.fun, n, dt, ds), m.stream)
    return m


def inst_stream(m: Term, s: StreamRef, dt: int = 0, ds: int = 0) -> Term:
    """Replace loose stream index ``ds`` by stream ``s`` and close the gap."""
    if m.smask >> ds == 0:
        return m
    t = type(m)
    if t is Lam:
        return Lam(inst_stream(m.body, s, dt + 1, ds), m.hint)
    if t is Mu:
        return Mu(inst_stream(m.body, s, dt, ds + 1), m.hint)
    if t is App:
        return App(inst_stream(m.fun, s, dt, ds), inst_stream(m.arg, s, dt, ds))
    if t is SApp:
        fun = inst_stream(m.fun, s, dt, ds)
        a = m.stream
        if isinstance(a, int):
            if a == ds:
                a = s + ds if isinstance(s, int) else s
            elif a > ds:
                a -= 1
        return SApp(fun, a)
    return m


def ctx_at(m: Term, target: StreamRef, args: tuple, tail: StreamRef,
           dt: int = 0, ds: int = 0) -> Term:
    """Replace every ``P target`` in ``m`` by ``P' args... tail``.

    ``target``, ``args`` and ``tail`` are relative to the top of ``m``;
    ``P'`` is ``P`` with the replacement applied recursively.
    """
    if isinstance(target, int) and not (m.smask >> (target + ds)) & 1:
        return m
    t = type(m)
    if t is Lam:
        return Lam(ctx_at(m.body, target, args, tail, dt + 1, ds), m.hint)
    if t is Mu:
        return Mu(ctx_at(m.body, target, args, tail, dt, ds + 1), m.hint)
    if t is App:
        return App(ctx_at(m.fun, target, args, tail, dt, ds),
                   ctx_at(m.arg, target, args, tail, dt, ds))
    if t is SApp:
        fun = ctx_at(m.fun, target, args, tail, dt, ds)
        a = m.stream
        if isinstance(target, int):
            hit = isinstance(a, int) and a == target + ds
        else:
            hit = a == target
        if not hit:
            return SApp(fun, a)
        for arg in args:
            fun = App(fun, shift(arg, dt, ds))
        return SApp(fun, tail + ds if isinstance(tail, int) else tail)
    return m


def _abstract_term(m: Term, name: str, dt: int = 0) -> Term:
    t = type(m)
    if t is Var:
        return BVar(dt) if m.name == name else m
    if t is BVar:
        return BVar(m.index + 1) if m.index >= dt else m
    if t is Lam:
        return Lam(_abstract_term(m.body, name, dt + 1), m.hint)
    if t is Mu:
        return Mu(_abstract_term(m.body, name, dt), m.hint)
    if t is App:
        return App(_abstract_term(m.fun, name, dt), _abstract_term(m.arg, name, dt))
    if t is SApp:
        return SApp(_abstract_term(m.fun, name, dt), m.stream)
    return m


def _abstract_stream(m: Term, name: str, ds: int = 0) -> Term:
    t = type(m)
    if t is Lam:
        return Lam(_abstract_stream(m.body, name, ds), m.hint)
    if t is Mu:
        return Mu(_abstract_stream(m.body, name, ds + 1), m.hint)
    if t is App:
        return App(_abstract_stream(m.fun, name, ds), _abstract_stream(m.arg, name, ds))
    if t is SApp:
        a = m.stream
        if a == name and isinstance(a, str):
            a = ds
        elif isinstance(a, int) and a >= ds:
            a += 1
        return SApp(_abstract_stream(m.fun, name, ds), a)
    return m


# ---------------------------------------------------------------------------
# Named construction

def lam(x: str, body: Term) -> Term:
    """``\\x. body``, binding the free term variable ``x``."""
    return Lam(_abstract_term(body, x), x)


def mu(a: str, body: Term) -> Term:
    """``#'a. body``, binding the free stream variable ``a``."""
    return Mu(_abstract_stream(body, a), a)


def lams(names: Iterable[str], body: Term) -> Term:
    for x in reversed(list(names)):
        body = lam(x, body)
    return body


def mus(names: Iterable[str], body: Term) -> Term:
    for a in reversed(list(names)):
        body = mu(a, body)
    return body


def app(head, *args) -> Term:
    """Left-nested application; ``str`` arguments are stream variables."""
    if isinstance(head, str):
        head = Var(head)
    for a in args:
        head = SApp(head, a) if isinstance(a, str) else App(head, a)
    return head


def open_lam(m: Lam, name: str) -> Term:
    return inst_term(m.body, Var(name))


def open_mu(m: Mu, name: str) -> Term:
    return inst_stream(m.body, name)


# ---------------------------------------------------------------------------
# Public operations over named free variables

def free_vars(m: Term) -> tuple[set, set]:
    """Free term variables and free stream variables of ``m``."""
    xs, als = set(), set()
    stack = [m]
    while stack:
        n = stack.pop()
        t = type(n)
        if t is Var:
            xs.add(n.name)
        elif t is Lam or t is Mu:
            stack.append(n.body)
        elif t is App:
            stack.append(n.fun)
            stack.append(n.arg)
        elif t is SApp:
            if isinstance(n.stream, str):
                als.add(n.stream)
            stack.append(n.fun)
    return xs, als


def is_closed(m: Term) -> bool:
    xs, als = free_vars(m)
    return not xs and not als


def alpha_eq(m: Term, n: Term) -> bool:
    return _equal(m, n)


def subst_term(m: Term, x: str, n: Term, dt: int = 0, ds: int = 0) -> Term:
    """``m[x:=n]`` for a free term variable ``x``."""
    t = type(m)
    if t is Var:
        return shift(n, dt, ds) if m.name == x else m
    if t is BVar:
        return m
    if t is Lam:
        return Lam(subst_term(m.body, x, n, dt + 1, ds), m.hint)
    if t is Mu:
        return Mu(subst_term(m.body, x, n, dt, ds + 1), m.hint)
    if t is App:
        return App(subst_term(m.fun, x, n, dt, ds), subst_term(m.arg, x, n, dt, ds))
    if t is SApp:
        return SApp(subst_term(m.fun, x, n, dt, ds), m.stream)
    return m


def rename_stream(m: Term, a: str, b: str) -> Term:
    """``m[a:=b]`` for free stream variables."""
    t = type(m)
    if t is Lam:
        return Lam(rename_stream(m.body, a, b), m.hint)
    if t is Mu:
        return Mu(rename_stream(m.body, a, b), m.hint)
    if t is App:
        return App(rename_stream(m.fun, a, b), rename_stream(m.arg, a, b))
    if t is SApp:
        s = b if m.stream == a else m.stream
        return SApp(rename_stream(m.fun, a, b), s)
    return m


def plug(k: Context, m: Term) -> Term:
    for arg in k.args:
        m = App(m, arg)
    return SApp(m, k.tail)


def ctx_subst(m: Term, a: str, k: Context) -> Term:
    """``m[P a := K[P]]`` acting on free occurrences of ``a``."""
    return ctx_at(m, a, k.args, k.tail)


def struct_subst(m: Term, a: str, n: Term) -> Term:
    """``m[P a := P n a]`` acting on free occurrences of ``a``."""
    return ctx_at(m, a, (n,), a)
