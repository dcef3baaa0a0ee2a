"""Formal balls and their orders.

A formal ball is a pair (center, radius > 0): a basic open of the localic
completion of the carrier.  The strict order b(x,r) < b(y,s) holds iff
d(x,y) < s - r; with exact rational distances the weak order collapses to
d(x,y) <= s - r, which is the form implemented here (the "for all t > s - r"
reading is equivalent exactly because d is an exact rational).

Ball sets are plain lists: K-finiteness, not canonical cardinality, is the
contract, so duplicates and redundant members are allowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable

from .errors import ParameterError
from .metric import MetricSpace
from .rat import Rat, pow2


@dataclass(frozen=True)
class FormalBall:
    center: Any
    radius: Rat

    def __post_init__(self):
        if not self.radius > 0:
            raise ParameterError(f"ball radius must be positive, got {self.radius!r}")


def ball_lt(m: MetricSpace, a: FormalBall, b: FormalBall) -> bool:
    """Strict inclusion with slack: d(centers) < radius(b) - radius(a)."""
    return m.dist(a.center, b.center) < b.radius - a.radius


def ball_le(m: MetricSpace, a: FormalBall, b: FormalBall) -> bool:
    """Weak inclusion: d(centers) <= radius(b) - radius(a)."""
    return m.dist(a.center, b.center) <= b.radius - a.radius


def set_lt(m: MetricSpace, U: Iterable[FormalBall], V: Iterable[FormalBall]) -> bool:
    """U < V: every member of U strictly below some member of V."""
    V = list(V)
    return all(any(ball_lt(m, u, v) for v in V) for u in U)


def in_down_meet(
    m: MetricSpace,
    c: FormalBall,
    U: Iterable[FormalBall],
    V: Iterable[FormalBall],
) -> bool:
    """Membership of c in the formal intersection U /\\ V, i.e. in the
    down-closure of U and the down-closure of V simultaneously."""
    return any(ball_le(m, c, u) for u in U) and any(ball_le(m, c, v) for v in V)


def refine(m: MetricSpace, b: FormalBall, k: int) -> list[FormalBall]:
    """Canonical K-finite refinement of b at dyadic scale 2**-k.

    Net centers inside b at mesh 2**-k, kept only when deep enough that the
    new ball sits weakly below b.  Every member c satisfies c <= b and
    radius(c) = 2**-k <= radius(b)/2; requires 2**-k <= radius(b)/2.
    """
    eps = pow2(-k)
    if 2 * eps > b.radius:
        raise ParameterError(
            f"refinement scale 2^-{k} exceeds half the radius {b.radius}"
        )
    cutoff = b.radius - eps
    return [
        FormalBall(z, eps)
        for z in m.local_net(b.center, b.radius, eps)
        if m.dist(z, b.center) <= cutoff
    ]


__all__ = [
    "FormalBall",
    "ball_lt",
    "ball_le",
    "set_lt",
    "in_down_meet",
    "refine",
]
