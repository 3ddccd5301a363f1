"""Existence inequalities, per-weight word bounds, entropy asymptotics.

Two evaluation modes are provided for each existence inequality.  "literal"
reproduces the printed inequality term for term, including its e=0 and odd-e
summands and the coefficients 2^((ell-2)/2), 2^(2*ell-2).  "exact" is the
certifying form: it sums only even weights e >= 2 (the zero word lies in
every code, odd weights cannot occur in a binary self-dual code) and uses
the exact counting ratios 2^(ell/2-1)+1 and 2^(2*ell-2)+1 with all
arithmetic in big integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, List

LITERAL = "literal"
EXACT = "exact"


@dataclass(frozen=True)
class BoundReport:
    ell: int
    d: int
    mode: str
    type2: bool
    lhs: int
    rhs: int
    holds: bool
    delta: Fraction


@dataclass(frozen=True)
class AsymptoteRow:
    ell: int
    d_star: int
    delta: float
    gqc_delta: float
    mode: str


def binom0(m: int, x) -> int:
    """C(m, x) if x is an integer in [0, m], else 0."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if isinstance(x, Rational):
        if x.denominator != 1:
            return 0
        x = int(x)
    elif not isinstance(x, int):
        raise TypeError("x must be an integer or a Fraction")
    if x < 0 or x > m:
        return 0
    return math.comb(m, x)


def a1_bound(ell: int, d: int) -> int:
    """Per-weight bound for words with both components nonzero.

    Returns the unsubtracted C(5*ell, d): subtracting the other types'
    upper bounds would not be a sound upper bound.
    """
    return math.comb(5 * ell, d)


def a2_bound(ell: int, d: int) -> int:
    """Printed per-weight bound for words with zero binary component."""
    if d % 2:
        return 0
    return binom0(ell, d // 2) * 15 ** (d // 2)


def a3_bound(ell: int, d: int) -> int:
    """Per-weight bound for words with zero GF(16) component."""
    return binom0(ell, Fraction(d, 5))


def _term(ell: int, e: int, mode: str, coef2: int, coef16: int) -> int:
    """One weight-e summand of the left-hand side."""
    if mode == EXACT and (e == 0 or e % 2):
        return 0
    t = math.comb(5 * ell, e)
    if e % 2 == 0:
        t += coef2 * binom0(ell, e // 2) * 15 ** (e // 2)
    if e % 5 == 0:
        t += coef16 * binom0(ell, e // 5)
    return t


def _coefficients(ell: int, mode: str, type2: bool):
    if type2:
        if ell <= 0 or ell % 8:
            raise ValueError("needs ell to be a positive multiple of 8")
        exp2 = ell // 2 - 2  # (ell-4)/2
    else:
        if ell <= 0 or ell % 2:
            raise ValueError("needs ell to be a positive even integer")
        exp2 = ell // 2 - 1  # (ell-2)/2
    exp16 = 2 * ell - 2
    if mode == LITERAL:
        coef2, coef16 = 2**exp2, 2**exp16
    elif mode == EXACT:
        coef2, coef16 = 2**exp2 + 1, 2**exp16 + 1
    else:
        raise ValueError(f"unknown mode {mode!r}")
    rhs = (2**exp2 + 1) * (2**exp16 + 1)
    return coef2, coef16, rhs


def _check(ell: int, d: int, mode: str, type2: bool) -> BoundReport:
    if d < 1:
        raise ValueError("d must be >= 1")
    coef2, coef16, rhs = _coefficients(ell, mode, type2)
    lhs = sum(_term(ell, e, mode, coef2, coef16) for e in range(d))
    return BoundReport(ell, d, mode, type2, lhs, rhs, lhs < rhs, Fraction(d, 5 * ell))


def theorem1_check(ell: int, d: int, mode: str) -> BoundReport:
    """Existence condition for a self-dual 5-quasi-cyclic code of length
    5*ell and distance >= d."""
    return _check(ell, d, mode, type2=False)


def theorem2_check(ell: int, d: int, mode: str) -> BoundReport:
    """Existence condition for a doubly even self-dual 5-quasi-cyclic code."""
    return _check(ell, d, mode, type2=True)


def max_distance(ell: int, mode: str, type2: bool = False):
    """Largest d for which the inequality holds; monotone scan from d=1.

    Returns (d_star, report_at_d_star).
    """
    coef2, coef16, rhs = _coefficients(ell, mode, type2)
    lhs = 0
    last = None
    for d in range(1, 5 * ell + 2):
        lhs += _term(ell, d - 1, mode, coef2, coef16)
        if lhs >= rhs:
            if last is None:
                return 0, None
            return last.d, last
        last = BoundReport(ell, d, mode, type2, lhs, rhs, True, Fraction(d, 5 * ell))
    return last.d, last


def mode_discrepancies(max_ell: int = 64) -> List[tuple]:
    """(ell, d) pairs where literal and exact disagree on `holds`,
    for even ell <= max_ell and 1 <= d <= 5*ell/2."""
    out = []
    for ell in range(2, max_ell + 1, 2):
        lit2, lit16, lit_rhs = _coefficients(ell, LITERAL, False)
        ex2, ex16, ex_rhs = _coefficients(ell, EXACT, False)
        lit_lhs = ex_lhs = 0
        for d in range(1, 5 * ell // 2 + 1):
            lit_lhs += _term(ell, d - 1, LITERAL, lit2, lit16)
            ex_lhs += _term(ell, d - 1, EXACT, ex2, ex16)
            if (lit_lhs < lit_rhs) != (ex_lhs < ex_rhs):
                out.append((ell, d))
    return out


# ---------------------------------------------------------------------------
# entropy and ball volumes


def entropy(q: int, x: float) -> float:
    """The q-ary entropy function, evaluated on [0, 1] (endpoints by
    continuity).  It reaches its maximum value 1 at x = (q-1)/q and is
    invertible only on [0, (q-1)/q]."""
    if q < 2:
        raise ValueError("q must be >= 2")
    if x < 0 or x > 1:
        raise ValueError(f"x={x} outside [0, 1]")
    lg = math.log(q)
    if x == 0:
        return 0.0
    if x == 1:
        return math.log(q - 1) / lg if q > 2 else 0.0
    return (x * math.log(q - 1) - x * math.log(x) - (1 - x) * math.log(1 - x)) / lg


def inverse_entropy(q: int, y: float, tol: float = 1e-9) -> float:
    """The unique x in [0, (q-1)/q] with entropy(q, x) = y, by bisection."""
    if y < 0 or y > 1:
        raise ValueError("y must lie in [0, 1]")
    lo, hi = 0.0, (q - 1) / q
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if entropy(q, mid) < y:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def ball_volume(q: int, n: int, r: int) -> int:
    """Exact volume of the Hamming ball of radius r in GF(q)^n."""
    if not 0 <= r <= n:
        raise ValueError("need 0 <= r <= n")
    return sum((q - 1) ** j * math.comb(n, j) for j in range(r + 1))


def asymptote_table(construction: str, ells: Iterable[int], mode: str) -> List[AsymptoteRow]:
    """Certified relative distances delta*(ell) = d*(ell)/(5*ell).

    gqc_delta is the 3/8-scaled value implied by the mixed-co-index direct
    sum of a cubic and a quintic code.
    """
    if construction not in ("quintic", "quintic_type2"):
        raise ValueError(f"unknown construction {construction!r}")
    type2 = construction == "quintic_type2"
    rows = []
    for ell in sorted(ells):
        d_star, _ = max_distance(ell, mode, type2=type2)
        delta = d_star / (5 * ell)
        rows.append(AsymptoteRow(ell, d_star, delta, 3 * delta / 8, mode))
    return rows
