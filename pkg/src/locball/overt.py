"""Positivity oracles for overt closed sublocales, and their validator.

An overt closed sublocale is accessed here through one thing only: a total,
decidable predicate on formal balls saying whether the ball is positive
(meets the sublocale).  Decidability is the computational content of
overtness; everything downstream (distance brackets, point extraction,
eps-nets) consumes nothing but answers to these queries.

The validator is a falsifier.  It samples three executable consequences of
the axioms:

* monotone-<=: if b <= b' and b is positive then b' is positive;
* splitting: a positive ball has a positive member in some canonical dyadic
  refinement (the K-finite shadow of covering a ball by half-radius balls);
* the located-pair condition: v < u implies not-positive(v) or positive(u),
  trivial for a decidable monotone predicate, so any failure marks a broken
  oracle.

Counterexamples are recorded as concrete balls and are re-checkable by
direct oracle calls.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .balls import FormalBall, ball_le, ball_lt, refine
from .metric import MetricSpace
from .rat import Rat, pow2


@dataclass(frozen=True, eq=False)
class PositivityOracle:
    """Total decidable positivity predicate on the balls of one carrier.

    ``closed_distance`` is optional ground truth: the exact distance from a
    carrier point to the intended closed set, when a closed form exists.
    Semantic oracles ship one; adversarial fixtures do not.
    """

    space: MetricSpace
    label: str
    predicate: Callable[[FormalBall], bool]
    closed_distance: Callable | None = None


def is_positive(P: PositivityOracle, b: FormalBall) -> bool:
    P.space.validate_point(b.center)
    return bool(P.predicate(b))


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    samples: int
    passed: bool
    counterexamples: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    oracle: str
    seed: int
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


_MAX_COUNTEREXAMPLES = 3


def _origin(space: MetricSpace):
    kind = space.kind
    if kind == "line":
        return Rat(0)
    if kind == "box":
        return (Rat(0),) * space.dim
    return 0


def _planted_pairs(space: MetricSpace):
    # Deterministic concentric pairs checked ahead of the random ones, so a
    # planted violation is reported with canonical witnesses.
    o = _origin(space)
    return [
        (FormalBall(o, Rat(1)), FormalBall(o, Rat(2))),
        (FormalBall(o, Rat(1)), FormalBall(o, Rat(3, 2))),
        (FormalBall(o, Rat(1, 2)), FormalBall(o, Rat(2))),
    ]


def _random_radius(rng, hint: Rat) -> Rat:
    den = rng.randint(1, 16)
    top = max(1, (hint.numerator * den) // hint.denominator)
    return Rat(rng.randint(1, top), den)


def _random_le_pair(P: PositivityOracle, rng):
    space = P.space
    hint = space.radius_hint()
    for _ in range(64):
        outer_c = space.random_point(rng)
        outer_r = _random_radius(rng, hint)
        inner_c = space.random_point(rng)
        gap = outer_r - space.dist(inner_c, outer_c)
        if gap <= 0:
            continue
        inner_r = gap * Rat(rng.randint(1, 4), 4)
        inner = FormalBall(inner_c, inner_r)
        outer = FormalBall(outer_c, outer_r)
        if ball_le(space, inner, outer):
            return inner, outer
    # Concentric pairs always qualify.
    c = space.random_point(rng)
    r = _random_radius(rng, hint)
    return FormalBall(c, r), FormalBall(c, 2 * r)


def _random_lt_pair(P: PositivityOracle, rng):
    space = P.space
    hint = space.radius_hint()
    for _ in range(64):
        outer_c = space.random_point(rng)
        outer_r = _random_radius(rng, hint)
        inner_c = space.random_point(rng)
        gap = outer_r - space.dist(inner_c, outer_c)
        if gap <= 0:
            continue
        inner_r = gap * Rat(rng.randint(1, 3), 4)
        inner = FormalBall(inner_c, inner_r)
        outer = FormalBall(outer_c, outer_r)
        if ball_lt(space, inner, outer):
            return inner, outer
    c = space.random_point(rng)
    r = _random_radius(rng, hint)
    return FormalBall(c, r), FormalBall(c, 3 * r)


def _random_positive_ball(P: PositivityOracle, rng):
    space = P.space
    hint = space.radius_hint()
    for _ in range(128):
        c = space.random_point(rng)
        r = _random_radius(rng, hint)
        ball = FormalBall(c, r)
        if is_positive(P, ball):
            return ball
    return None


def least_refine_level(radius: Rat) -> int:
    """Smallest k with 2**-k <= radius/2."""
    k = 0
    while 2 * pow2(-k) > radius:
        k += 1
    return k


def split_positive(P: PositivityOracle, b: FormalBall, depth: int):
    """First positive member of a canonical refinement of b, escalating the
    dyadic scale up to ``depth`` extra levels.  None if the search fails,
    which (for a positive b) convicts the oracle."""
    k0 = least_refine_level(b.radius)
    for k in range(k0, k0 + depth + 1):
        for member in refine(P.space, b, k):
            if is_positive(P, member):
                return member
    return None


def _check_monotone(P: PositivityOracle, rng, sample_count: int) -> CheckOutcome:
    bad = []
    pairs = _planted_pairs(P.space)
    done = 0
    while done < sample_count:
        if pairs:
            inner, outer = pairs.pop(0)
        else:
            inner, outer = _random_le_pair(P, rng)
        done += 1
        if is_positive(P, inner) and not is_positive(P, outer):
            bad.append((inner, outer))
            if len(bad) >= _MAX_COUNTEREXAMPLES:
                break
    return CheckOutcome("monotone-le", done, not bad, tuple(bad))


def _check_splitting(P: PositivityOracle, rng, sample_count: int, depth: int) -> CheckOutcome:
    bad = []
    done = 0
    for _ in range(sample_count):
        ball = _random_positive_ball(P, rng)
        if ball is None:
            continue
        done += 1
        if split_positive(P, ball, depth) is None:
            bad.append(ball)
            if len(bad) >= _MAX_COUNTEREXAMPLES:
                break
    return CheckOutcome("splitting", done, not bad, tuple(bad))


def _check_located_pairs(P: PositivityOracle, rng, sample_count: int) -> CheckOutcome:
    bad = []
    pairs = _planted_pairs(P.space)
    done = 0
    while done < sample_count:
        if pairs:
            inner, outer = pairs.pop(0)
        else:
            inner, outer = _random_lt_pair(P, rng)
        done += 1
        # v < u must give: not positive(v), or positive(u).
        if is_positive(P, inner) and not is_positive(P, outer):
            bad.append((inner, outer))
            if len(bad) >= _MAX_COUNTEREXAMPLES:
                break
    return CheckOutcome("located-pair", done, not bad, tuple(bad))


def validate_oracle(
    P: PositivityOracle,
    sample_count: int = 1000,
    depth: int = 12,
    seed: int = 0,
) -> ValidationReport:
    """Sampled falsification of the positivity axioms; deterministic per seed."""
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    rng = random.Random(seed)
    checks = (
        _check_monotone(P, rng, sample_count),
        _check_splitting(P, rng, sample_count, depth),
        _check_located_pairs(P, rng, sample_count),
    )
    return ValidationReport(P.label, seed, checks)


__all__ = [
    "PositivityOracle",
    "is_positive",
    "CheckOutcome",
    "ValidationReport",
    "validate_oracle",
    "split_positive",
    "least_refine_level",
]
