"""Algorithms extracted from the constructive facts about overt closed
sublocales: dichotomy at two radii, two-sided distance brackets, point
extraction from positive neighbourhoods, metric-complement detection, and
eps-nets witnessing compactness.

Everything here consumes a positivity oracle and returns certified data:
a distance comes back as an exact rational bracket of requested width, an
extracted point as a shrinking chain of positive balls, a net as a K-finite
list of such chains.  No floats, no rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .balls import FormalBall
from .errors import (
    NoPositiveBallError,
    ParameterError,
    SplittingExhaustedError,
    UnsupportedSpaceError,
)
from .overt import PositivityOracle, is_positive, split_positive
from .rat import Rat, pow2

DEFAULT_R_MAX = Rat(65536)
DEFAULT_DEPTH = 12


class Dichotomy(Enum):
    """Outcome of the two-radius test: the closed set misses the inner ball,
    or meets the outer one."""

    EMPTY = "empty"
    MEETS = "meets"


def dichotomy(P: PositivityOracle, x, delta: Rat, eps: Rat) -> Dichotomy:
    """Decide between "Y misses B(x, delta)" and "Y meets B(x, eps)".

    With a decidable oracle a single query at delta settles it: a negative
    answer certifies emptiness at delta, a positive one yields a point of Y
    inside B(x, delta), hence inside B(x, eps).  Both radii stay in the
    signature so inexact oracles could later exploit the gap.
    """
    if not 0 < delta < eps:
        raise ParameterError(f"need 0 < delta < eps, got delta={delta}, eps={eps}")
    if is_positive(P, FormalBall(x, delta)):
        return Dichotomy.MEETS
    return Dichotomy.EMPTY


@dataclass(frozen=True)
class DistanceBounds:
    lo: Rat
    hi: Rat
    oracle_calls: int

    @property
    def width(self) -> Rat:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Rat:
        return (self.lo + self.hi) / 2


def distance(
    P: PositivityOracle,
    x,
    tol_exp: int = 20,
    r_max: Rat = DEFAULT_R_MAX,
) -> DistanceBounds:
    """Bracket the distance from x to the oracle's closed set within 2**-tol_exp.

    Exponential search doubles a probe radius until a positive ball appears
    (raising NoPositiveBallError past r_max), then bisection maintains
    "lo is 0 or the lo-ball is not positive" and "the hi-ball is positive"
    until the bracket is narrow enough.  For any oracle satisfying the
    positivity axioms the true distance lies in [lo, hi].
    """
    if tol_exp < 1:
        raise ParameterError(f"tol_exp must be >= 1, got {tol_exp}")
    if not r_max > 0:
        raise ParameterError(f"r_max must be positive, got {r_max}")
    P.space.validate_point(x)
    calls = 0

    def positive(r: Rat) -> bool:
        nonlocal calls
        calls += 1
        return is_positive(P, FormalBall(x, r))

    r = min(Rat(1), r_max)
    lo = Rat(0)
    while not positive(r):
        if r >= r_max:
            raise NoPositiveBallError(r_max)
        lo = r
        r = min(2 * r, r_max)
    hi = r

    tol = pow2(-tol_exp)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if positive(mid):
            hi = mid
        else:
            lo = mid
    return DistanceBounds(lo, hi, calls)


@dataclass(frozen=True)
class PointApprox:
    """A point of the closed set, to within ``tolerance``: the center of the
    last ball of a shrinking chain of positive balls, each weakly below its
    predecessor with at most half the radius."""

    chain: tuple
    approx: object
    tolerance: Rat


def point_extract(
    P: PositivityOracle,
    b: FormalBall,
    tol_exp: int = 10,
    depth: int = DEFAULT_DEPTH,
) -> PointApprox:
    """Extract an approximate point of the closed set from a positive ball.

    Repeatedly picks a positive member of a canonical dyadic refinement,
    escalating the scale up to ``depth`` extra levels per step; a failed
    search convicts the oracle of breaking the splitting contract.
    """
    if tol_exp < 1:
        raise ParameterError(f"tol_exp must be >= 1, got {tol_exp}")
    if depth < 1:
        raise ParameterError(f"depth must be >= 1, got {depth}")
    if not is_positive(P, b):
        raise ParameterError(f"ball {b!r} is not positive")
    tol = pow2(-tol_exp)
    chain = [b]
    cur = b
    while cur.radius > tol:
        nxt = split_positive(P, cur, depth)
        if nxt is None:
            raise SplittingExhaustedError(cur, depth)
        chain.append(nxt)
        cur = nxt
    return PointApprox(tuple(chain), cur.center, tol)


@dataclass(frozen=True)
class InComplement:
    """x verifiably lies in the metric complement: the ball of radius
    ``delta`` around it misses the closed set."""

    delta: Rat


@dataclass(frozen=True)
class NotDetected:
    """No separating radius found down to 2**-max_exp; the distance from x
    to the closed set is below that, which is not a membership proof."""

    max_exp: int


def metric_complement(P: PositivityOracle, x, max_exp: int = 20):
    """Search dyadic radii 2^-1 .. 2^-max_exp for one whose ball at x is not
    positive.  Finding one certifies membership in the metric complement."""
    if max_exp < 1:
        raise ParameterError(f"max_exp must be >= 1, got {max_exp}")
    P.space.validate_point(x)
    for e in range(1, max_exp + 1):
        delta = pow2(-e)
        if not is_positive(P, FormalBall(x, delta)):
            return InComplement(delta)
    return NotDetected(max_exp)


@dataclass(frozen=True)
class NetResult:
    epsilon: Rat
    points: tuple


def epsilon_net(
    P: PositivityOracle,
    eps: Rat,
    tol_exp: int,
    depth: int = DEFAULT_DEPTH,
) -> NetResult:
    """An eps-net of the closed set on a totally bounded carrier.

    Carrier centers at mesh eps/4 whose eps/4-ball is positive each
    contribute one extracted point at tolerance 2**-tol_exp <= eps/4.  Every
    point of the closed set then lies within eps of some net point (it is
    within eps/4 of a selected center, whose extracted point stays inside
    the selection ball), and every net point lies within eps/4 of the set.
    """
    if not eps > 0:
        raise ParameterError(f"eps must be positive, got {eps}")
    if tol_exp < 1:
        raise ParameterError(f"tol_exp must be >= 1, got {tol_exp}")
    if pow2(-tol_exp) > eps / 4:
        raise ParameterError(
            f"tolerance 2^-{tol_exp} is coarser than eps/4 = {eps / 4}"
        )
    centers = P.space.global_net(eps / 4)
    if centers is None:
        raise UnsupportedSpaceError(
            f"the {P.space.kind} instance is not totally bounded; no finite net exists"
        )
    radius = eps / 4
    points = []
    for z in centers:
        ball = FormalBall(z, radius)
        if is_positive(P, ball):
            points.append(point_extract(P, ball, tol_exp, depth))
    return NetResult(eps, tuple(points))


__all__ = [
    "Dichotomy",
    "dichotomy",
    "DistanceBounds",
    "distance",
    "PointApprox",
    "point_extract",
    "InComplement",
    "NotDetected",
    "metric_complement",
    "NetResult",
    "epsilon_net",
    "DEFAULT_R_MAX",
    "DEFAULT_DEPTH",
]
