r"""Command-line front end.

Exit codes: 0 success, 1 ``Distinct`` (eq), a failed check or a demo
mismatch, 2 parse or precondition error, 3 budget exhausted (``Unknown``).

Terms are given inline or as a path ending in ``.lmu`` (Lambda-mu) or
``.scl`` (SCL); a ``.scl`` file implies ``--calculus scl``.

Text traces print one step per line as ``k<TAB>rule<TAB>term`` and then the
final term.  Structured traces are a JSON object::

    {"steps": [{"k": 1, "rule": "BetaT", "position": [0], "term": "..."}],
     "exhausted": false, "final": "..."}

``position`` is the path of child indices from the root to the redex.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from lmscl import algebra, scl, syntax as lm, stdlib
from lmscl.rewrite import PROFILES, RULE_SETS, Budget, Verdict, lm_equal, normalize
from lmscl.surface import ParseError, format_lm, format_scl, parse_lm, parse_scl
from lmscl.translate import to_lm, to_scl

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3


class _Precondition(Exception):
    pass


def _read(source: str, args) -> tuple[str, str]:
    """Return ``(text, calculus)`` for an inline term or a term file."""
    calculus = args.calculus
    if source.endswith((".lmu", ".scl")) and os.path.isfile(source):
        with open(source, encoding="utf-8") as f:
            text = f.read()
        if source.endswith(".scl"):
            calculus = "scl"
        return text, calculus
    return source, calculus


def _parse(source: str, args, calculus=None):
    text, cal = _read(source, args)
    cal = calculus or cal
    if not text.isascii():
        raise ParseError("input must be ASCII")
    return (parse_scl(text) if cal == "scl" else parse_lm(text)), cal


def _fmt(t, calculus):
    return format_scl(t) if calculus == "scl" else format_lm(t)


def _budget(args) -> Budget:
    base = PROFILES[args.budget_profile]
    return Budget(args.max_steps or base.max_steps, args.max_size or base.max_term_size)


def _verdict_code(v: Verdict) -> int:
    return {Verdict.EQUAL: EXIT_OK, Verdict.DISTINCT: EXIT_FAIL,
            Verdict.UNKNOWN: EXIT_UNKNOWN}[v]


def _emit_trace(r, calculus, mode, out):
    if mode == "structured":
        doc = {
            "steps": [{"k": k, "rule": str(s.rule), "position": list(s.position),
                       "term": _fmt(s.term, calculus)}
                      for k, s in enumerate(r.trace, 1)],
            "exhausted": r.exhausted,
            "final": _fmt(r.term, calculus),
        }
        out.write(json.dumps(doc) + "\n")
        return
    for k, s in enumerate(r.trace, 1):
        out.write(f"{k}\t{s.rule}\t{_fmt(s.term, calculus)}\n")
    out.write(_fmt(r.term, calculus) + "\n")


# ---------------------------------------------------------------------------
# S-expression dump for ``parse``

def _sexpr_lm(m):
    t = type(m)
    if t is lm.Var:
        return f"(var {m.name})"
    if t is lm.BVar:
        return f"(bvar {m.index})"
    if t is lm.Lam:
        return f"(lam {_sexpr_lm(m.body)})"
    if t is lm.Mu:
        return f"(mu {_sexpr_lm(m.body)})"
    if t is lm.App:
        return f"(app {_sexpr_lm(m.fun)} {_sexpr_lm(m.arg)})"
    s = m.stream
    stream = f"(sbvar {s})" if isinstance(s, int) else f"(svar {s})"
    return f"(sapp {_sexpr_lm(m.fun)} {stream})"


def _sexpr_scl(t):
    tt = type(t)
    if tt is scl.Const:
        return t.c.value
    if tt is scl.Var:
        return f"(var {t.name})"
    if tt is scl.SVar:
        return f"(svar {t.name})"
    if tt is scl.App:
        return f"(app {_sexpr_scl(t.fun)} {_sexpr_scl(t.arg)})"
    if tt is scl.Star:
        return f"(star {_sexpr_scl(t.fun)} {_sexpr_scl(t.stream)})"
    return f"(cons {_sexpr_scl(t.head)} {_sexpr_scl(t.tail)})"


# ---------------------------------------------------------------------------
# Commands

def cmd_parse(args, out):
    t, cal = _parse(args.term, args)
    out.write((_sexpr_scl(t) if cal == "scl" else _sexpr_lm(t)) + "\n")
    return EXIT_OK


def cmd_fmt(args, out):
    t, cal = _parse(args.term, args)
    out.write(_fmt(t, cal) + "\n")
    return EXIT_OK


def cmd_reduce(args, out):
    t, cal = _parse(args.term, args)
    budget = _budget(args)
    if cal == "scl":
        r = scl.scl_normalize(t, budget)
    else:
        r = normalize(t, budget, args.rules)
    _emit_trace(r, cal, args.trace, out)
    return EXIT_UNKNOWN if r.exhausted else EXIT_OK


def cmd_eq(args, out):
    t, cal = _parse(args.left, args)
    u, _ = _parse(args.right, args, cal)
    budget = _budget(args)
    if cal == "scl":
        res = scl.scl_equal(t, u, budget)
    else:
        res = lm_equal(t, u, budget, args.rules)
    out.write(f"{res.verdict}\n")
    return _verdict_code(res.verdict)


def cmd_translate(args, out):
    if args.to_scl:
        m, _ = _parse(args.term, args, "lm")
        out.write(format_scl(to_scl(m)) + "\n")
    else:
        t, _ = _parse(args.term, args, "scl")
        out.write(format_lm(to_lm(t)) + "\n")
    return EXIT_OK


def cmd_interp(args, out):
    t, cal = _parse(args.term, args)
    model = algebra.TermModel(_budget(args))
    if cal == "scl":
        v = model.canonical(t)
        d = algebra.interp_term(t, v, model)
    else:
        v = model.canonical(to_scl(t))
        d = algebra.interp_lm(t, v, model)
    out.write(f"[{format_scl(d)}]\n")
    return EXIT_OK


_MODELS = {
    "term": algebra.TermModel,
    "one-point": lambda budget: algebra.OnePointAlgebra(),
}


def cmd_check(args, out):
    model = _MODELS[args.model](_budget(args))
    fn = {"axioms": algebra.check_axioms, "extensional": algebra.check_extensional,
          "standard": algebra.check_standard}[args.suite]
    report = fn(model, n=args.samples, seed=args.seed)
    out.write(report.format() + "\n")
    if report.failures:
        return EXIT_FAIL
    return EXIT_UNKNOWN if report.unknowns else EXIT_OK


_DEMO_ELEMENTS = [r"\z. z", r"\x y. x", r"\x y. y", r"\f x. f (f x)", r"\x y z. z y"]


def cmd_demo(args, out):
    if args.name == "list":
        for name in stdlib.BUILTIN_NAMES:
            doc = "Church numeral n" if name == "church(n)" else stdlib.builtin(name).doc
            out.write(f"{name}\t{doc}\n")
        return EXIT_OK
    if args.name == "show":
        if not args.builtin:
            raise _Precondition("demo show needs a builtin name")
        try:
            nt = stdlib.builtin(args.builtin)
        except KeyError as e:
            raise _Precondition(e.args[0]) from None
        out.write(format_lm(nt.term) + "\n")
        return EXIT_OK
    n = args.length
    if not 1 <= n <= len(_DEMO_ELEMENTS):
        raise _Precondition(f"--length must be between 1 and {len(_DEMO_ELEMENTS)}")
    elements = [parse_lm(s) for s in _DEMO_ELEMENTS[:n]]
    budget = _budget(args)
    if args.name == "hd":
        m = lm.app(stdlib.builtin("hd").term, *elements, "b")
        r = normalize(m, budget, args.rules)
        _emit_trace(r, "lm", args.trace, out)
        if r.exhausted:
            return EXIT_UNKNOWN
        expected = elements[0]
        result = r.term
    else:
        i = args.index
        if not 0 <= i < n:
            raise _Precondition(f"index {i} out of range for {n} elements")
        try:
            result = stdlib.run_nth_demo(elements, i, budget)
        except stdlib.BudgetExceeded as e:
            out.write(f"Unknown: {e}\n")
            return EXIT_UNKNOWN
        expected = elements[i]
        out.write(format_lm(result) + "\n")
    ok = result == expected
    out.write("ok\n" if ok else f"mismatch: expected {format_lm(expected)}\n")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--calculus", choices=("lm", "scl"), default="lm")
    common.add_argument("--max-steps", type=int, default=None,
                        help="step bound (default 10000, or the profile's)")
    common.add_argument("--max-size", type=int, default=None,
                        help="term size bound (default 100000, or the profile's)")
    common.add_argument("--rules", choices=RULE_SETS, default="mu")
    common.add_argument("--trace", choices=("text", "structured"), default="text")
    common.add_argument("--budget-profile", choices=tuple(PROFILES), default="fast")

    p = argparse.ArgumentParser(prog="lmscl", description="Lambda-mu calculus and SCL toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("parse", parents=[common], help="dump the syntax tree")
    s.add_argument("term")
    s.set_defaults(fn=cmd_parse)
    s = sub.add_parser("fmt", parents=[common], help="pretty-print a term")
    s.add_argument("term")
    s.set_defaults(fn=cmd_fmt)
    s = sub.add_parser("reduce", parents=[common], help="normalize with a trace")
    s.add_argument("term")
    s.set_defaults(fn=cmd_reduce)
    s = sub.add_parser("eq", parents=[common], help="decide convertibility")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(fn=cmd_eq)
    s = sub.add_parser("translate", parents=[common], help="translate between calculi")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--to-scl", action="store_true")
    g.add_argument("--to-lm", action="store_true")
    s.add_argument("term")
    s.set_defaults(fn=cmd_translate)
    s = sub.add_parser("interp", parents=[common],
                       help="meaning in the term model under the canonical valuation")
    s.add_argument("term")
    s.set_defaults(fn=cmd_interp)
    s = sub.add_parser("check", parents=[common], help="sampled algebra law checks")
    s.add_argument("suite", choices=("axioms", "extensional", "standard"))
    s.add_argument("--model", choices=tuple(_MODELS), default="term")
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_check)
    s = sub.add_parser("demo", parents=[common], help="run the hd/nth examples")
    s.add_argument("name", choices=("hd", "nth", "list", "show"))
    s.add_argument("builtin", nargs="?", help="name for 'demo show'")
    s.add_argument("--length", type=int, default=3)
    s.add_argument("--index", type=int, default=0)
    s.set_defaults(fn=cmd_demo)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        if args.max_steps is not None and args.max_steps <= 0 or \
                args.max_size is not None and args.max_size <= 0:
            raise _Precondition("budget bounds must be positive")
        return args.fn(args, out)
    except ParseError as e:
        err.write(f"parse error: {e}\n")
        return EXIT_USAGE
    except (_Precondition, ValueError) as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    except algebra.MissingVariable as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
