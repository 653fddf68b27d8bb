r"""Encodings of the example programs: hd, nth and their supporting cast.

Booleans are ``\x y. x`` / ``\x y. y``, numerals are Church numerals,
``pred`` shifts pairs, and ``Y`` is Curry's fixed-point combinator, which
leftmost-outermost reduction handles without diverging.
"""

from __future__ import annotations

from dataclasses import dataclass
import re

from lmscl import syntax as lm
from lmscl.rewrite import DEFAULT_BUDGET, Budget, normalize
from lmscl.surface import parse_lm

__all__ = ["NamedTerm", "builtin", "church", "BUILTIN_NAMES", "run_nth_demo",
           "BudgetExceeded"]


class BudgetExceeded(RuntimeError):
    """Normalization ran out of budget before reaching a normal form."""


@dataclass(frozen=True)
class NamedTerm:
    name: str
    term: lm.Term
    doc: str


# name -> (source, doc); later entries may mention earlier ones by name
_SOURCES = [
    ("true", r"\x y. x", "boolean true, selects its first argument"),
    ("false", r"\x y. y", "boolean false, selects its second argument"),
    ("if", r"\b t e. b t e", "if b then t else e"),
    ("zero?", r"\n. n (\u. false) true", "tests a Church numeral for zero"),
    ("pair", r"\p q f. f p q", "pair constructor"),
    ("fst", r"\p. p true", "first projection"),
    ("snd", r"\p. p false", "second projection"),
    ("succ", r"\n f x. f (n f x)", "Church successor"),
    ("pred", r"\n. fst (n (\p. pair (snd p) (succ (snd p))) (pair c0 c0))",
     "Church predecessor by pair shifting; pred 0 = 0"),
    ("Y", r"\f. (\x. f (x x)) (\x. f (x x))", "Curry's fixed-point combinator"),
    ("hd", r"\x. #'a. x", "head of a stream"),
    ("nth", r"Y (\f x. #'a. \y. if (zero? y) x (f 'a (pred y)))",
     "i-th element of a stream, given a Church numeral i"),
]

_ALIASES = {"zero?": "iszero", "if": "ite", "Y": "fix"}


def church(n: int) -> lm.Term:
    if n < 0:
        raise ValueError("Church numerals are non-negative")
    body = lm.Var("x")
    for _ in range(n):
        body = lm.App(lm.Var("f"), body)
    return lm.lams("fx", body)


def _build():
    table = {}
    for name, src, doc in _SOURCES:
        for k, alias in _ALIASES.items():
            src = re.sub(rf"(?<![A-Za-z0-9_]){re.escape(k)}(?![A-Za-z0-9_?])", alias, src)
        m = parse_lm(src)
        for prev, nt in table.items():
            m = lm.subst_term(m, _ALIASES.get(prev, prev), nt.term)
        m = lm.subst_term(m, "c0", church(0))
        table[name] = NamedTerm(name, m, doc)
    return table


_TABLE = _build()
BUILTIN_NAMES = tuple(_TABLE) + ("church(n)",)

_CHURCH = re.compile(r"church\((\d+)\)|c(\d+)")


def builtin(name: str) -> NamedTerm:
    """Look up a named encoding; ``church(n)`` and ``cN`` give numerals."""
    if name in _TABLE:
        return _TABLE[name]
    m = _CHURCH.fullmatch(name)
    if m:
        n = int(m.group(1) or m.group(2))
        return NamedTerm(f"church({n})", church(n), f"Church numeral {n}")
    raise KeyError(f"unknown builtin {name!r}; known: {', '.join(BUILTIN_NAMES)}")


def run_nth_demo(elements, i: int, budget: Budget = DEFAULT_BUDGET,
                 stream: str = "b") -> lm.Term:
    """Normalize ``nth N0 ... Nn 'stream c_i``."""
    elements = list(elements)
    if not elements:
        raise ValueError("need at least one stream element")
    if not 0 <= i < len(elements):
        raise ValueError(f"index {i} out of range for {len(elements)} elements")
    for e in elements:
        if not lm.is_closed(e):
            raise ValueError(f"stream element {e} is not closed")
    m = lm.app(builtin("nth").term, *elements, stream, church(i))
    r = normalize(m, budget)
    if r.exhausted:
        raise BudgetExceeded(f"nth demo unresolved after {r.steps} steps")
    return r.term
