"""Sound semi-decision of elementary covers by K-finite ball sets.

``balcov_check(m, b, U0, eps)`` decides whether every sub-ball of b with
radius at most eps sits weakly below some member of U0.  Writing
depth_u(y) = radius(u) - d(y, center(u)), that condition is equivalent to

    for every carrier point y inside b:
        max over u of depth_u(y)  >=  min(depth_b(y), eps).

Three routes, all sound:

* domination: some member weakly contains b itself, so transitivity settles
  every sub-ball at once;
* exact: on the line, 1-d boxes and finite carriers the inequality is
  piecewise linear in y, so checking it at the kinks, pairwise crossings and
  range ends decides it exactly (complete, not just sound);
* net: on higher boxes, every net point of mesh eps/2 that sits at depth
  >= eps in b must carry a ball of radius 3*eps/2 weakly below some member.
  The 3/2 slack is what the mesh costs: a true answer certifies the full
  condition, a false answer certifies nothing.

``kov_check(m, a, U, max_depth)`` certifies the elementary cover of a by U
through the canonical concentric pair b < c < a at depth d = max_depth
(radii shrunk by factors 1 - 2^-d and 1 - 2^-(d+1)) and a canonical witness
set: members that sit strictly below c and strictly below U while covering b
in the balcov sense.  A valid witness proves that every point of B(b) lies
strictly inside some member of U; deeper pairs certify thinner uncovered
shells and are never harder to verify, so only the deepest pair is checked.
``Unknown`` is failure to verify, never a refutation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .balls import FormalBall, ball_le, ball_lt, set_lt
from .errors import ParameterError
from .metric import Box, FiniteSpace, Line, MetricSpace
from .rat import Rat, pow2, rat_ceil


@dataclass(frozen=True)
class CoverWitness:
    b: FormalBall
    c: FormalBall
    members: tuple
    scale: Rat


@dataclass(frozen=True)
class Covered:
    witness: CoverWitness


@dataclass(frozen=True)
class Unknown:
    depth: int


# Net sizes beyond this are not ground through; the verdict degrades to
# Unknown, which is always sound.
_NET_GUARD = 1 << 21


def _scalar_bounds(m: MetricSpace):
    """(lo, hi) carrier bounds for 1-d carriers, (None, None) for the line,
    or None when the carrier is not 1-dimensional."""
    if isinstance(m, Line):
        return (None, None)
    if isinstance(m, Box) and m.dim == 1:
        return (-m.bound, m.bound)
    return None


def _as_scalar(m: MetricSpace, p) -> Rat:
    return p if isinstance(m, Line) else p[0]


def _from_scalar(m: MetricSpace, v: Rat):
    return v if isinstance(m, Line) else (v,)


def balcov_check(m: MetricSpace, b: FormalBall, U0, eps: Rat) -> bool:
    """True only if every sub-ball of b with radius <= eps is weakly below
    some member of U0.  On 1-d and finite carriers the answer is exact; on
    higher boxes False may merely mean "not verified"."""
    if not 0 < eps <= b.radius:
        raise ParameterError(
            f"cover scale must satisfy 0 < eps <= radius, got eps={eps}, radius={b.radius}"
        )
    members = list(U0)
    if any(ball_le(m, b, u) for u in members):
        return True
    if not members:
        return False
    if isinstance(m, FiniteSpace):
        return _balcov_exact_finite(m, b, members, eps)
    bounds = _scalar_bounds(m)
    if bounds is not None:
        return _balcov_exact_1d(m, b, members, eps, bounds)
    return _balcov_net(m, b, members, eps)


def _balcov_exact_finite(m: FiniteSpace, b, members, eps) -> bool:
    for y in range(m.size):
        depth_b = b.radius - m.dist(y, b.center)
        if depth_b <= 0:
            continue
        need = min(depth_b, eps)
        best = max(u.radius - m.dist(y, u.center) for u in members)
        if best < need:
            return False
    return True


def _balcov_exact_1d(m, b, members, eps, bounds) -> bool:
    lo_bound, hi_bound = bounds
    cb = _as_scalar(m, b.center)
    r = b.radius
    lo = cb - r if lo_bound is None else max(cb - r, lo_bound)
    hi = cb + r if hi_bound is None else min(cb + r, hi_bound)
    tents = [(_as_scalar(m, u.center), u.radius) for u in members]

    candidates = {lo, hi, cb, cb - (r - eps), cb + (r - eps)}
    for cu, _ in tents:
        candidates.add(cu)
    for i in range(len(tents)):
        ci, ri = tents[i]
        for j in range(i + 1, len(tents)):
            cj, rj = tents[j]
            # Both crossing points of the two distance tents.
            candidates.add((ci + cj + ri - rj) / 2)
            candidates.add((ci + cj + rj - ri) / 2)

    for y in candidates:
        if y < lo or y > hi:
            continue
        need = min(r - abs(y - cb), eps)
        best = max(ru - abs(y - cu) for cu, ru in tents)
        if best < need:
            return False
    return True


def _balcov_net(m: MetricSpace, b, members, eps) -> bool:
    reach = eps * Rat(3, 2)
    cutoff = b.radius - eps
    for z in m.local_net(b.center, b.radius, eps / 2):
        if m.dist(z, b.center) <= cutoff:
            probe = FormalBall(z, reach)
            if not any(ball_le(m, probe, u) for u in members):
                return False
    return True


def _canonical_members_1d(m, a, c_ball, U, theta, bounds):
    lo_bound, hi_bound = bounds
    ca = _as_scalar(m, a.center)
    rc = c_ball.radius
    lo_c = ca - rc if lo_bound is None else max(ca - rc, lo_bound)
    hi_c = ca + rc if hi_bound is None else min(ca + rc, hi_bound)
    members = []
    for u in U:
        cu = _as_scalar(m, u.center)
        lo = max(cu - u.radius, lo_c)
        hi = min(cu + u.radius, hi_c)
        if hi - lo > 2 * theta:
            members.append(
                FormalBall(_from_scalar(m, (lo + hi) / 2), (hi - lo) / 2 - theta)
            )
    return members


def _canonical_members_finite(m: FiniteSpace, a, b_ball, theta):
    rb = b_ball.radius
    return [
        FormalBall(y, theta)
        for y in range(m.size)
        if m.dist(y, a.center) <= rb
    ]


def _canonical_members_box(m: Box, a, b_ball, theta):
    rb = b_ball.radius
    step = theta / 4
    per_axis = 2 * rat_ceil(rb / step) + 1
    if per_axis**m.dim > _NET_GUARD:
        return None
    return [
        FormalBall(z, theta)
        for z in m.local_net(a.center, rb, step)
        if m.dist(z, a.center) <= rb
    ]


def kov_check(m: MetricSpace, a: FormalBall, U, max_depth: int = 12):
    """Certify the elementary cover of a by the K-finite set U.

    Returns ``Covered`` carrying a witness whose four conditions
    (b < c < a, members strictly below {c}, members strictly below U,
    members balcov-cover b at the recorded scale) are re-checkable from the
    witness alone, or ``Unknown(max_depth)``.
    """
    if max_depth < 1:
        raise ParameterError(f"max_depth must be >= 1, got {max_depth}")
    U = list(U)
    d = max_depth
    b_ball = FormalBall(a.center, a.radius * (1 - pow2(-d)))
    c_ball = FormalBall(a.center, a.radius * (1 - pow2(-(d + 1))))
    theta = a.radius * pow2(-(d + 2))
    scale = theta / 2

    if isinstance(m, FiniteSpace):
        members = _canonical_members_finite(m, a, b_ball, theta)
    else:
        bounds = _scalar_bounds(m)
        if bounds is not None:
            members = _canonical_members_1d(m, a, c_ball, U, theta, bounds)
        else:
            members = _canonical_members_box(m, a, b_ball, theta)
            if members is None:
                return Unknown(max_depth)

    if (
        members
        and set_lt(m, members, [c_ball])
        and set_lt(m, members, U)
        and balcov_check(m, b_ball, members, scale)
    ):
        return Covered(CoverWitness(b_ball, c_ball, tuple(members), scale))
    return Unknown(max_depth)


def verify_witness(m: MetricSpace, a: FormalBall, U, w: CoverWitness) -> bool:
    """Re-check every witness condition by direct calls; no trust required."""
    return (
        ball_lt(m, w.b, w.c)
        and ball_lt(m, w.c, a)
        and set_lt(m, w.members, [w.c])
        and set_lt(m, w.members, list(U))
        and balcov_check(m, w.b, w.members, w.scale)
    )


__all__ = [
    "CoverWitness",
    "Covered",
    "Unknown",
    "balcov_check",
    "kov_check",
    "verify_witness",
]
