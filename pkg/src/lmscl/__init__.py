"""Untyped Lambda-mu calculus and the stream combinatory calculus SCL."""

import sys

# substitution and reduction recurse on term structure
if sys.getrecursionlimit() < 20_000:
    sys.setrecursionlimit(20_000)

__version__ = "0.1.0"
