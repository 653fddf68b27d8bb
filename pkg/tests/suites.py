r"""Curated term suites shared by the acceptance and determinism checks."""

from lmscl.rewrite import Verdict

E, D = Verdict.EQUAL, Verdict.DISTINCT

# Lambda-mu terms for the (M*)_* round trip; together they use every
# constructor and every reachable bracket-abstraction clause
ROUND_TRIP = [
    "x",
    r"\x. x",
    r"\x. y",
    r"\x y. x",
    r"\x y. y",
    r"\x. x x",
    r"\x y z. x z (y z)",
    r"\f x. f (f x)",
    r"\p q f. f p q",
    r"#'a. x",
    r"#'a. x 'a",
    r"#'a. x 'b",
    r"#'a 'b. x 'b 'a",
    r"\x. #'a. x",
    r"\x. #'a. x 'a 'a",
    r"#'a. \y. x y 'a",
    r"x 'a",
    r"x y 'a z",
    r"(\x. x) y",
    r"(#'a. x 'a) 'b",
    r"(#'a. x) y",
    r"\x. #'a. x 'a (y 'a)",
    r"#'a. (\x. x 'a) y",
    r"\x. #'a. \y. x y 'a",
    r"#'a 'b. x 'a (y 'b)",
    r"\x y. #'a. y (x 'a) 'a",
    r"\x. x 'b 'c",
    r"\x. #'a. x 'a 'b",
    r"(\x y. x) (#'a. z 'a)",
    r"#'a. (#'b. x 'b 'a) 'a",
]

# SCL terms with cons streams, for the bracket clauses that M* never reaches
CONS_TERMS = [
    "x * (y :: 'a)",
    "x * (y :: z :: 'a)",
    "x * (K0 :: x :: 'b)",
    "S1 x * (x :: 'a) * (y :: 'a)",
    "x y * (x :: 'a)",
]

# (lhs, rhs, verdict) for comparing the mu and fst rule sets
FST_PAIRS = [
    (r"(#'a. x 'a) n", r"#'a. x n 'a", E),
    (r"(#'a. x) n", r"#'a. x", E),
    (r"(#'a. x 'a y 'a) n", r"#'a. x n 'a y n 'a", E),
    (r"#'a. y 'a", r"\x. #'a. y x 'a", E),
    (r"#'a. y", r"\x. #'a. y", E),
    (r"(\x. #'a. x) (\z. z) (\x y. x) 'b", r"\z. z", E),
    (r"(#'a. x 'a 'a) n m", r"#'a. x n m 'a n m 'a", E),
    (r"(\x. #'a. x 'a) y", "y", E),
    (r"(#'a. \z. z 'a) n", r"#'a. \z. z n 'a", E),
    (r"(#'a 'b. x 'b 'a) n 'c", r"#'b. x 'b n 'c", E),
    (r"(\x y. x) (#'a. z) w", r"#'a. z", E),
    (r"(#'a. x 'a) n 'c", "x n 'c", E),
    (r"(#'a. y) n", r"(#'a. y) m", E),
    (r"(#'a. x 'a) n", "x n", E),
    (r"\x y. x", r"\x y. y", D),
    (r"#'a. x", "x", D),
    (r"#'a. x 'a 'a", "x", D),
    ("x 'a", "x 'b", D),
    (r"\x. #'a. x", r"\x y. x", D),
    (r"(#'a. x n 'a) m", r"(#'a. x 'a n) m", D),
]

# inputs for the byte-for-byte determinism check
REDUCE_INPUTS = ROUND_TRIP + [p[0] for p in FST_PAIRS]
SCL_REDUCE_INPUTS = ["K0 x y", "S0 K0 K0 z", "K1 x * (y :: 'a)", "C11 x * 'a * 'b",
                     "W1 (S1 x y) * 'c", "C10 x * 'a y"]
