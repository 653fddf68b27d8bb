"""Stream combinatory algebras, meaning functions and sampled law checks.

An algebra supplies term application ``app``, stream application ``sapp``,
``cons`` and the seven distinguished elements.  Element equality may be
partial and answers with a ``Verdict``.  ``TermModel`` is the quotient of
SCL terms and streams by convertibility, with representatives stored as
terms and equality decided by ``scl_equal`` under a budget.

The samplers only refute: a report never claims a law holds, only that no
counterexample showed up among the samples it tried.
"""

from __future__ import annotations

import abc
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from lmscl import scl
from lmscl.rewrite import DEFAULT_BUDGET, Budget, Verdict
from lmscl.scl import SclConst

__all__ = [
    "StreamCombinatoryAlgebra", "TermModel", "OnePointAlgebra", "Valuation",
    "MissingVariable", "Report", "LAWS", "interp_term", "interp_stream",
    "interp_lm", "check_axioms", "check_extensional", "check_standard",
    "TermSampler",
]


class MissingVariable(KeyError):
    """The valuation does not cover a free variable of the interpreted term."""

    def __init__(self, name, sort):
        super().__init__(name)
        self.name = name
        self.sort = sort

    def __str__(self):
        return f"valuation has no value for {self.sort} variable {self.name!r}"


class StreamCombinatoryAlgebra(abc.ABC):
    """Carrier ``D`` with streams ``S``, three operations and seven constants."""

    @abc.abstractmethod
    def app(self, d, e): ...

    @abc.abstractmethod
    def sapp(self, d, s): ...

    @abc.abstractmethod
    def cons(self, d, s): ...

    @abc.abstractmethod
    def const(self, c: SclConst): ...

    @abc.abstractmethod
    def eq(self, d, e) -> Verdict: ...

    @abc.abstractmethod
    def eq_stream(self, s, t) -> Verdict: ...

    def decompose(self, s) -> Optional[tuple]:
        """``(d, s')`` with ``cons(d, s') = s`` if one is known, else ``None``."""
        return None


@dataclass(frozen=True)
class Valuation:
    rho: dict = field(default_factory=dict)
    theta: dict = field(default_factory=dict)

    def bind(self, x: str, d) -> "Valuation":
        return Valuation({**self.rho, x: d}, self.theta)

    def bind_stream(self, a: str, s) -> "Valuation":
        return Valuation(self.rho, {**self.theta, a: s})


# ---------------------------------------------------------------------------
# Meaning functions

def _check_covered(obj, v: Valuation):
    xs, als = scl.free_vars(obj)
    for x in sorted(xs):
        if x not in v.rho:
            raise MissingVariable(x, "term")
    for a in sorted(als):
        if a not in v.theta:
            raise MissingVariable(a, "stream")


def interp_term(t, v: Valuation, algebra: StreamCombinatoryAlgebra):
    _check_covered(t, v)
    return _interp(t, v, algebra)


def interp_stream(s, v: Valuation, algebra: StreamCombinatoryAlgebra):
    _check_covered(s, v)
    return _interp(s, v, algebra)


def _interp(t, v, A):
    tt = type(t)
    if tt is scl.Const:
        return A.const(t.c)
    if tt is scl.Var:
        return v.rho[t.name]
    if tt is scl.App:
        return A.app(_interp(t.fun, v, A), _interp(t.arg, v, A))
    if tt is scl.Star:
        return A.sapp(_interp(t.fun, v, A), _interp(t.stream, v, A))
    if tt is scl.SVar:
        return v.theta[t.name]
    if tt is scl.Cons:
        return A.cons(_interp(t.head, v, A), _interp(t.tail, v, A))
    raise TypeError(f"not an SCL term or stream: {t!r}")


def interp_lm(m, v: Valuation, algebra: StreamCombinatoryAlgebra):
    """Meaning of a Lambda-mu term, taken through its SCL translation."""
    from lmscl.translate import to_scl
    return interp_term(to_scl(m), v, algebra)


# ---------------------------------------------------------------------------
# Instances

class TermModel(StreamCombinatoryAlgebra):
    """SCL terms and streams modulo convertibility."""

    def __init__(self, budget: Budget = DEFAULT_BUDGET):
        self.budget = budget

    def app(self, d, e):
        return scl.App(d, e)

    def sapp(self, d, s):
        return scl.Star(d, s)

    def cons(self, d, s):
        return scl.Cons(d, s)

    def const(self, c):
        return scl.Const(c)

    def eq(self, d, e) -> Verdict:
        return scl.scl_equal(d, e, self.budget).verdict

    def eq_stream(self, s, t) -> Verdict:
        # streams are equal iff a fresh head variable cannot tell them apart
        xs = scl.free_vars(s)[0] | scl.free_vars(t)[0]
        z = "%probe"
        while z in xs:
            z += "_"
        return self.eq(scl.Star(scl.Var(z), s), scl.Star(scl.Var(z), t))

    def decompose(self, s):
        if type(s) is scl.Cons:
            return s.head, s.tail
        return None

    @staticmethod
    def canonical(*objs) -> Valuation:
        """``rho(x) = [x]`` and ``theta(a) = ['a]`` on the given terms' variables."""
        xs, als = set(), set()
        for o in objs:
            fx, fa = scl.free_vars(o)
            xs |= fx
            als |= fa
        return Valuation({x: scl.Var(x) for x in xs}, {a: scl.SVar(a) for a in als})


class OnePointAlgebra(StreamCombinatoryAlgebra):
    """The degenerate algebra: one element, one stream."""

    def app(self, d, e):
        return ()

    def sapp(self, d, s):
        return ()

    def cons(self, d, s):
        return ()

    def const(self, c):
        return ()

    def eq(self, d, e):
        return Verdict.EQUAL

    def eq_stream(self, s, t):
        return Verdict.EQUAL

    def decompose(self, s):
        return (), ()


# ---------------------------------------------------------------------------
# Sampling

class TermSampler:
    """Random normalizing SCL terms and streams over the small variable pools."""

    def __init__(self, size: int = 5):
        self.size = size

    def element(self, rng: random.Random):
        from lmscl.gen import normalizing_scl
        return normalizing_scl(rng, self.size)

    def stream(self, rng: random.Random):
        from lmscl.gen import normalizing_stream
        return normalizing_stream(rng, self.size + 2)


@dataclass
class Report:
    title: str
    seed: int
    n: int
    counts: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def tally(self, law: str, verdict: Verdict):
        row = self.counts.setdefault(law, [0, 0, 0])
        row[{Verdict.EQUAL: 0, Verdict.DISTINCT: 1, Verdict.UNKNOWN: 2}[verdict]] += 1

    def total(self, column: int) -> int:
        return sum(row[column] for row in self.counts.values())

    @property
    def failures(self) -> int:
        return self.total(1)

    @property
    def unknowns(self) -> int:
        return self.total(2)

    def format(self) -> str:
        lines = [f"# {self.title} seed={self.seed} samples={self.n}",
                 "# law\tpass\tfail\tunknown"]
        for law, (p, f, u) in self.counts.items():
            lines.append(f"{law}\t{p}\t{f}\t{u}")
        lines += [f"# {note}" for note in self.notes]
        return "\n".join(lines)


def _law_sides(A, law, d, s):
    k = A.const
    ap, sa = A.app, A.sapp
    d1, d2, d3 = d
    s1, s2, s3 = s
    if law == "cons":
        return sa(d1, A.cons(d2, s3)), sa(ap(d1, d2), s3)
    if law == "K0":
        return ap(ap(k(SclConst.K0), d1), d2), d1
    if law == "K1":
        return sa(ap(k(SclConst.K1), d1), s2), d1
    if law == "S0":
        return ap(ap(ap(k(SclConst.S0), d1), d2), d3), ap(ap(d1, d3), ap(d2, d3))
    if law == "S1":
        return (sa(ap(ap(k(SclConst.S1), d1), d2), s3),
                ap(sa(d1, s3), sa(d2, s3)))
    if law == "C10":
        return ap(sa(ap(k(SclConst.C10), d1), s2), d3), sa(ap(d1, d3), s2)
    if law == "C11":
        return (sa(sa(ap(k(SclConst.C11), d1), s2), s3),
                sa(sa(d1, s3), s2))
    if law == "W1":
        return sa(ap(k(SclConst.W1), d1), s2), sa(sa(d1, s2), s2)
    raise ValueError(law)


LAWS = ("cons", "K0", "K1", "S0", "S1", "C10", "C11", "W1")


def check_axioms(A: StreamCombinatoryAlgebra, samples=None, n: int = 100,
                 seed: int = 0) -> Report:
    """Evaluate every law on ``n`` sampled tuples ``(d1, d2, d3, s1, s2, s3)``."""
    samples = samples or TermSampler()
    rng = random.Random(seed)
    report = Report("axioms", seed, n, {law: [0, 0, 0] for law in LAWS})
    for _ in range(n):
        d = tuple(samples.element(rng) for _ in range(3))
        s = tuple(samples.stream(rng) for _ in range(3))
        for law in LAWS:
            lhs, rhs = _law_sides(A, law, d, s)
            report.tally(law, A.eq(lhs, rhs))
    if n == 0:
        report.notes.append("no samples: vacuous pass")
    return report


def check_extensional(A: StreamCombinatoryAlgebra, samples=None, n: int = 50,
                      seed: int = 0, pairs=None, probes: int = 4) -> Report:
    """Search for ``d != d'`` that agree on every sampled probe.

    Probes are ``. d0``, ``* s0`` and the mixed ``. d0 * s0``.  A pair that
    agrees everywhere but is Distinct is a refutation (``fail``).
    """
    samples = samples or TermSampler()
    rng = random.Random(seed)
    if pairs is None:
        pairs = [(samples.element(rng), samples.element(rng)) for _ in range(n)]
    pairs = list(pairs)
    report = Report("extensionality", seed, len(pairs), {"extensional": [0, 0, 0]})
    args = [samples.element(rng) for _ in range(probes)]
    streams = [samples.stream(rng) for _ in range(probes)]
    for d, e in pairs:
        agree = Verdict.EQUAL
        for d0, s0 in zip(args, streams):
            for f in (lambda x: A.app(x, d0), lambda x: A.sapp(x, s0),
                      lambda x: A.sapp(A.app(x, d0), s0)):
                v = A.eq(f(d), f(e))
                if v is Verdict.DISTINCT:
                    agree = v
                    break
                if v is Verdict.UNKNOWN:
                    agree = v
            if agree is Verdict.DISTINCT:
                break
        if agree is Verdict.DISTINCT:
            report.tally("extensional", Verdict.EQUAL)
            continue
        same = A.eq(d, e)
        if same is Verdict.DISTINCT and agree is Verdict.EQUAL:
            report.tally("extensional", Verdict.DISTINCT)
            report.notes.append(f"candidate counterexample: {d} vs {e}")
        elif same is Verdict.UNKNOWN or agree is Verdict.UNKNOWN:
            report.tally("extensional", Verdict.UNKNOWN)
        else:
            report.tally("extensional", Verdict.EQUAL)
    if not report.failures:
        report.notes.append(f"no counterexample found in {len(pairs)} samples")
    return report


def check_standard(A: StreamCombinatoryAlgebra, samples=None, n: int = 50,
                   seed: int = 0, streams=None) -> Report:
    """Sampled checks that ``cons`` is injective and onto.

    Injectivity compares ``cons(d, s)`` with ``cons(K0 d e, s)``, which are
    equal in every algebra, and with an independently sampled pair.
    Surjectivity asks the algebra to split each sampled stream.
    """
    samples = samples or TermSampler()
    rng = random.Random(seed)
    report = Report("standardness", seed, n,
                    {"cons-injective": [0, 0, 0], "cons-surjective": [0, 0, 0]})
    for _ in range(n):
        d, e, d2 = (samples.element(rng) for _ in range(3))
        s, s2 = samples.stream(rng), samples.stream(rng)
        twin = A.app(A.app(A.const(SclConst.K0), d), e)
        for (x, xs), (y, ys) in (((d, s), (twin, s)), ((d, s), (d2, s2))):
            same = A.eq_stream(A.cons(x, xs), A.cons(y, ys))
            if same is Verdict.EQUAL:
                parts = (A.eq(x, y), A.eq_stream(xs, ys))
                if Verdict.DISTINCT in parts:
                    report.tally("cons-injective", Verdict.DISTINCT)
                    report.notes.append(f"cons not injective at {x}, {xs}")
                elif Verdict.UNKNOWN in parts:
                    report.tally("cons-injective", Verdict.UNKNOWN)
                else:
                    report.tally("cons-injective", Verdict.EQUAL)
            elif same is Verdict.UNKNOWN:
                report.tally("cons-injective", Verdict.UNKNOWN)
            else:
                report.tally("cons-injective", Verdict.EQUAL)
    probe = list(streams) if streams is not None else [samples.stream(rng) for _ in range(n)]
    undecomposable = []
    for s in probe:
        parts = A.decompose(s)
        if parts is None:
            report.tally("cons-surjective", Verdict.DISTINCT)
            undecomposable.append(s)
            continue
        v = A.eq_stream(A.cons(*parts), s)
        report.tally("cons-surjective", v)
    if undecomposable:
        report.notes.append(
            f"not standard: {len(undecomposable)} stream(s) are not of the form "
            f"d :: s, e.g. {undecomposable[0]}")
    if not report.failures:
        report.notes.append(f"no counterexample found in {n} samples")
    return report
