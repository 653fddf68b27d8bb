"""Seeded random terms and axiom instances for property checks.

Constructors are drawn uniformly under a size bound; variables come from
small pools (three per sort) so binders and free occurrences collide often.
"""

from __future__ import annotations

import random

from lmscl import scl, syntax as lm
from lmscl.rewrite import Budget, normalize

TERM_VARS = ("x", "y", "z")
STREAM_VARS = ("a", "b", "c")

_PROBE = Budget(max_steps=300, max_term_size=5_000)


def random_lm(rng: random.Random, size: int) -> lm.Term:
    """A Lambda-mu term with at most ``size`` constructor nodes."""
    if size <= 1:
        return lm.Var(rng.choice(TERM_VARS))
    kind = rng.randrange(5)
    if kind == 0:
        return lm.Var(rng.choice(TERM_VARS))
    if kind == 1:
        return lm.lam(rng.choice(TERM_VARS), random_lm(rng, size - 1))
    if kind == 2:
        k = rng.randint(1, max(1, size - 2))
        return lm.App(random_lm(rng, k), random_lm(rng, max(1, size - 1 - k)))
    if kind == 3:
        return lm.mu(rng.choice(STREAM_VARS), random_lm(rng, size - 1))
    return lm.SApp(random_lm(rng, size - 1), rng.choice(STREAM_VARS))


def normalizing_lm(rng: random.Random, size: int, budget: Budget = _PROBE) -> lm.Term:
    """Like ``random_lm`` but resampled until it normalizes within ``budget``."""
    while True:
        m = random_lm(rng, size)
        if not normalize(m, budget).exhausted:
            return m


def random_scl(rng: random.Random, size: int, consts: bool = True):
    """An SCL term of measure at most about ``size``."""
    if size <= 2:
        if consts and rng.random() < 0.5:
            return rng.choice(list(scl.CONSTANTS.values()))
        return scl.Var(rng.choice(TERM_VARS))
    kind = rng.randrange(4)
    if kind == 0:
        return random_scl(rng, 1, consts)
    if kind in (1, 2):
        k = rng.randint(1, size - 2)
        return scl.App(random_scl(rng, k, consts), random_scl(rng, size - 1 - k, consts))
    k = rng.randint(1, size - 2)
    return scl.Star(random_scl(rng, k, consts), random_stream(rng, size - 1 - k, consts))


def random_stream(rng: random.Random, size: int, consts: bool = True):
    if size <= 3 or rng.random() < 0.4:
        return scl.SVar(rng.choice(STREAM_VARS))
    k = rng.randint(1, size - 3)
    return scl.Cons(random_scl(rng, k, consts), random_stream(rng, size - 2 - k, consts))


def normalizing_scl(rng: random.Random, size: int, budget: Budget = _PROBE):
    from lmscl.translate import to_lm
    while True:
        t = random_scl(rng, size)
        if not normalize(to_lm(t), budget).exhausted:
            return t


def normalizing_stream(rng: random.Random, size: int, budget: Budget = _PROBE):
    from lmscl.translate import to_lm
    while True:
        s = random_stream(rng, size)
        items, _ = scl.stream_items(s)
        if all(not normalize(to_lm(u), budget).exhausted for u in items):
            return s


def _fresh(avoid, pool):
    for v in pool:
        if v not in avoid:
            return v
    i = 0
    while f"{pool[0]}{i}" in avoid:
        i += 1
    return f"{pool[0]}{i}"


# ---------------------------------------------------------------------------
# Axiom instances

LM_AXIOMS = ("BetaT", "BetaS", "EtaT", "EtaS", "Mu")
SCL_AXIOMS = scl.AXIOMS


def lm_axiom_instance(rng: random.Random, axiom: str, size: int = 6):
    """A pair ``(lhs, rhs)`` equated by one Lambda-mu axiom at the root."""
    m = normalizing_lm(rng, size)
    if axiom == "BetaT":
        x = rng.choice(TERM_VARS)
        n = normalizing_lm(rng, max(1, size // 2))
        return lm.App(lm.lam(x, m), n), lm.subst_term(m, x, n)
    if axiom == "BetaS":
        a, b = rng.choice(STREAM_VARS), rng.choice(STREAM_VARS)
        return lm.SApp(lm.mu(a, m), b), lm.rename_stream(m, a, b)
    if axiom == "EtaT":
        x = _fresh(lm.free_vars(m)[0], TERM_VARS)
        return lm.lam(x, lm.App(m, lm.Var(x))), m
    if axiom == "EtaS":
        a = _fresh(lm.free_vars(m)[1], STREAM_VARS)
        return lm.mu(a, lm.SApp(m, a)), m
    if axiom == "Mu":
        n = normalizing_lm(rng, max(1, size // 2))
        choices = [a for a in STREAM_VARS if a not in lm.free_vars(n)[1]]
        a = rng.choice(choices) if choices else _fresh(lm.free_vars(n)[1], STREAM_VARS)
        return lm.App(lm.mu(a, m), n), lm.mu(a, lm.struct_subst(m, a, n))
    raise ValueError(f"unknown axiom {axiom!r}")


def scl_axiom_instance(rng: random.Random, axiom: str, size: int = 5):
    """A pair ``(lhs, rhs)`` equated by one SCL axiom at the root."""
    t = [normalizing_scl(rng, size) for _ in range(3)]
    s = [normalizing_stream(rng, size + 2) for _ in range(3)]
    A, St = scl.App, scl.Star
    c = scl.CONSTANTS.get(axiom)
    if axiom == "K0":
        return A(A(c, t[0]), t[1]), t[0]
    if axiom == "K1":
        return St(A(c, t[0]), s[1]), t[0]
    if axiom == "S0":
        return A(A(A(c, t[0]), t[1]), t[2]), A(A(t[0], t[2]), A(t[1], t[2]))
    if axiom == "S1":
        return St(A(A(c, t[0]), t[1]), s[2]), A(St(t[0], s[2]), St(t[1], s[2]))
    if axiom == "C10":
        return A(St(A(c, t[0]), s[1]), t[2]), St(A(t[0], t[2]), s[1])
    if axiom == "C11":
        return St(St(A(c, t[0]), s[1]), s[2]), St(St(t[0], s[2]), s[1])
    if axiom == "W1":
        return St(A(c, t[0]), s[1]), St(St(t[0], s[1]), s[1])
    if axiom == "Cons":
        return St(t[0], scl.Cons(t[1], s[2])), St(A(t[0], t[1]), s[2])
    raise ValueError(f"unknown axiom {axiom!r}")
