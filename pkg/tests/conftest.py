"""Shared fixtures and independent ground-truth helpers.

Everything in this file that computes expected values does so with
``fractions.Fraction`` and plain algorithms (closed forms, sweeps), never
through the library's own arithmetic or cover machinery, so tests check the
implementation against genuinely independent oracles.
"""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import settings

from locball import Box, FiniteSpace, Line, Rat

settings.register_profile("locball", derandomize=True, max_examples=150, deadline=None)
settings.load_profile("locball")


def frac(x) -> Fraction:
    """View any exact rational (locball Rat, int, Fraction) as a Fraction."""
    return Fraction(x.numerator, x.denominator)


def rat(f) -> Rat:
    return Rat(f.numerator, f.denominator)


def rand_rat(rng, lo: int, hi: int, max_den: int = 16) -> Rat:
    den = rng.randint(1, max_den)
    return Rat(rng.randint(lo * den, hi * den), den)


# ---------------------------------------------------------------------------
# Independent closed-form distances (Fraction arithmetic only).

def interval_dist(a: Fraction, b: Fraction, x: Fraction) -> Fraction:
    return max(a - x, x - b, Fraction(0))


def union_dist(pieces, x: Fraction) -> Fraction:
    return min(interval_dist(a, b, x) for a, b in pieces)


def points_dist(ys, x: Fraction) -> Fraction:
    return min(abs(x - y) for y in ys)


# ---------------------------------------------------------------------------
# Independent interval-union coverage oracles (sweep algorithms).

def covers_with_slack(members, lo: Fraction, hi: Fraction, slack: Fraction) -> bool:
    """True iff every point of the closed range [lo, hi] sits at depth >= slack
    inside some member interval (c - r, c + r).  Sweep over the members
    shrunk to closed intervals."""
    shrunk = sorted(
        (c - r + slack, c + r - slack) for c, r in members if 2 * r > 2 * slack
    )
    cur = lo
    for s, e in shrunk:
        if s > cur:
            return False
        cur = max(cur, e)
        if cur >= hi:
            return True
    return cur >= hi


def uncovered_point(members, lo: Fraction, hi: Fraction):
    """A point of [lo, hi] in no member's open interval, or None."""
    cur = lo
    for s, e in sorted((c - r, c + r) for c, r in members):
        if s > cur:
            return cur
        cur = max(cur, e)
        if cur > hi:
            return None
    return cur if cur <= hi else None


# ---------------------------------------------------------------------------
# Shared spaces.

@pytest.fixture
def line() -> Line:
    return Line()


@pytest.fixture
def box1() -> Box:
    return Box(1, Rat(2))


@pytest.fixture
def box2() -> Box:
    return Box(2, Rat(4))


@pytest.fixture
def finite3() -> FiniteSpace:
    rows = (
        (Rat(0), Rat(1), Rat(3)),
        (Rat(1), Rat(0), Rat(5, 2)),
        (Rat(3), Rat(5, 2), Rat(0)),
    )
    return FiniteSpace(rows)
