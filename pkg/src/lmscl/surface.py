r"""Concrete syntax for both calculi.

Lambda-mu::

    M ::= x | \x y. M | #'a 'b. M | M M | M 'a | (M)

SCL::

    T ::= K0 | K1 | S0 | S1 | C10 | C11 | W1 | x | T T | T * S | (T)
    S ::= 'a | (T :: S)          -- '::' is right associative inside parens

Application, stream application and ``*`` are left associative and bind
tighter than abstraction, which extends as far right as possible.
"""

from __future__ import annotations

import re

from lmscl import scl, syntax as lm

__all__ = ["ParseError", "parse_lm", "parse_scl", "format_lm", "format_scl"]


class ParseError(ValueError):
    def __init__(self, msg, line=1, col=1):
        super().__init__(f"{line}:{col}: {msg}")
        self.msg = msg
        self.line = line
        self.col = col


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<cons>::)
  | (?P<svar>'[A-Za-z_][A-Za-z0-9_]*)
  | (?P<const>K0|K1|S0|S1|C10|C11|W1)(?![A-Za-z0-9_])
  | (?P<var>[a-z_][A-Za-z0-9_]*)
  | (?P<sym>[\\#.()*])
""", re.VERBOSE)


def _tokenize(text):
    toks = []
    pos = line = 1
    line_start = 0
    i = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        col = i - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", line, col)
        kind = m.lastgroup
        val = m.group()
        if kind == "ws":
            for k, ch in enumerate(val):
                if ch == "\n":
                    line += 1
                    line_start = i + k + 1
        else:
            if kind == "sym":
                kind = val
            toks.append((kind, val, line, col))
        i = m.end()
    del pos
    toks.append(("end", "", line, len(text) - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.tok
        raise ParseError(msg, tok[2], tok[3])

    def expect(self, kind):
        if self.tok[0] != kind:
            what = "end of input" if self.tok[0] == "end" else repr(self.tok[1])
            self.fail(f"expected {kind!r}, found {what}")
        return self.next()

    def done(self):
        if self.tok[0] != "end":
            self.fail(f"unexpected {self.tok[1]!r}")


# ---------------------------------------------------------------------------
# Lambda-mu

def parse_lm(text: str) -> lm.Term:
    p = _Parser(text)
    m = _lm_expr(p)
    p.done()
    return m


def _lm_expr(p):
    kind = p.tok[0]
    if kind == "\\":
        p.next()
        names = [p.expect("var")[1]]
        while p.tok[0] == "var":
            names.append(p.next()[1])
        p.expect(".")
        return lm.lams(names, _lm_expr(p))
    if kind == "#":
        p.next()
        names = [p.expect("svar")[1][1:]]
        while p.tok[0] == "svar":
            names.append(p.next()[1][1:])
        p.expect(".")
        return lm.mus(names, _lm_expr(p))
    head = _lm_atom(p)
    if head is None:
        if p.tok[0] == "svar":
            p.fail("a stream variable cannot stand in function position")
        p.fail("expected a term" if p.tok[0] != "end" else "unexpected end of input")
    while True:
        kind = p.tok[0]
        if kind == "svar":
            head = lm.SApp(head, p.next()[1][1:])
        elif kind in ("\\", "#"):
            return lm.App(head, _lm_expr(p))
        else:
            arg = _lm_atom(p)
            if arg is None:
                return head
            head = lm.App(head, arg)


def _lm_atom(p):
    kind = p.tok[0]
    if kind == "var":
        return lm.Var(p.next()[1])
    if kind == "(":
        p.next()
        m = _lm_expr(p)
        p.expect(")")
        return m
    if kind == "const":
        p.fail(f"SCL constant {p.tok[1]!r} in a Lambda-mu term")
    return None


def format_lm(m: lm.Term) -> str:
    """Minimal-parenthesis rendering with bound names x0, x1, ... / a0, a1, ..."""
    xs, als = lm.free_vars(m)
    out = []
    _fmt_lm(m, [], [], xs, als, True, out)
    return "".join(out)


def _fresh(prefix, depth, taken):
    name = f"{prefix}{depth}"
    while name in taken:
        name += "_"
    return name


def _fmt_lm(m, tn, sn, xs, als, last, out):
    t = type(m)
    if t is lm.Lam or t is lm.Mu:
        if not last:
            out.append("(")
        if t is lm.Lam:
            names = []
            while type(m) is lm.Lam:
                names.append(_fresh("x", len(tn) + len(names), xs))
                m = m.body
            out.append("\\" + " ".join(names) + ". ")
            _fmt_lm(m, tn + names, sn, xs, als, True, out)
        else:
            names = []
            while type(m) is lm.Mu:
                names.append(_fresh("a", len(sn) + len(names), als))
                m = m.body
            out.append("#" + " ".join("'" + a for a in names) + ". ")
            _fmt_lm(m, tn, sn + names, xs, als, True, out)
        if not last:
            out.append(")")
        return
    if t is lm.Var:
        out.append(m.name)
        return
    if t is lm.BVar:
        out.append(tn[-1 - m.index])
        return
    # application spine
    args = []
    while type(m) in (lm.App, lm.SApp):
        args.append(m)
        m = m.fun
    args.reverse()
    if type(m) in (lm.Lam, lm.Mu):
        _fmt_lm(m, tn, sn, xs, als, False, out)
    else:
        _fmt_lm(m, tn, sn, xs, als, True, out)
    for k, node in enumerate(args):
        out.append(" ")
        if type(node) is lm.SApp:
            s = node.stream
            out.append("'" + (sn[-1 - s] if isinstance(s, int) else s))
            continue
        a = node.arg
        ta = type(a)
        if ta in (lm.App, lm.SApp):
            out.append("(")
            _fmt_lm(a, tn, sn, xs, als, True, out)
            out.append(")")
        else:
            _fmt_lm(a, tn, sn, xs, als, last and k == len(args) - 1, out)


# ---------------------------------------------------------------------------
# SCL

def parse_scl(text: str):
    p = _Parser(text)
    t = _scl_chain(p)
    p.done()
    return t


def _scl_chain(p):
    head = _scl_atom(p)
    if head is None:
        p.fail("expected an SCL term" if p.tok[0] != "end" else "unexpected end of input")
    while True:
        if p.tok[0] == "*":
            p.next()
            head = scl.Star(head, _scl_stream(p))
            continue
        arg = _scl_atom(p)
        if arg is None:
            return head
        head = scl.App(head, arg)


def _scl_atom(p):
    kind = p.tok[0]
    if kind == "const":
        return scl.CONSTANTS[p.next()[1]]
    if kind == "var":
        return scl.Var(p.next()[1])
    if kind == "(":
        p.next()
        t = _scl_chain(p)
        p.expect(")")
        return t
    if kind in ("\\", "#"):
        p.fail("binders are not part of SCL")
    if kind == "svar":
        p.fail("a stream must follow '*'")
    return None


def _scl_stream(p):
    kind = p.tok[0]
    if kind == "svar":
        return scl.SVar(p.next()[1][1:])
    if kind == "(":
        p.next()
        s = _scl_stream_body(p)
        p.expect(")")
        return s
    p.fail("expected a stream")


def _scl_stream_body(p):
    if p.tok[0] == "svar":
        return scl.SVar(p.next()[1][1:])
    head = _scl_chain(p)
    p.expect("cons")
    return scl.Cons(head, _scl_stream_body(p))


def format_scl(t) -> str:
    out = []
    _fmt_scl(t, out)
    return "".join(out)


def _fmt_scl(t, out):
    tt = type(t)
    if tt is scl.Const:
        out.append(t.c.value)
    elif tt is scl.Var:
        out.append(t.name)
    elif tt is scl.SVar or tt is scl.Cons:
        _fmt_stream(t, out)
    else:
        items = []
        while type(t) in (scl.App, scl.Star):
            items.append(t)
            t = t.fun
        _fmt_scl(t, out)
        for node in reversed(items):
            if type(node) is scl.Star:
                out.append(" * ")
                _fmt_stream(node.stream, out)
            else:
                out.append(" ")
                if type(node.arg) in (scl.App, scl.Star):
                    out.append("(")
                    _fmt_scl(node.arg, out)
                    out.append(")")
                else:
                    _fmt_scl(node.arg, out)


def _fmt_stream(s, out):
    if type(s) is scl.SVar:
        out.append("'" + s.name)
        return
    out.append("(")
    while type(s) is scl.Cons:
        _fmt_scl(s.head, out)
        out.append(" :: ")
        s = s.tail
    out.append("'" + s.name + ")")
