"""Concrete positivity oracles with closed-form ground truth.

Semantic positivity throughout is strict overlap of the open ball with the
intended closed set Y: positive(b(q, r)) iff dist(q, Y) < r.  Each semantic
constructor ships that distance as an exact closed form, so tests can check
the oracle against arithmetic done without it.

``broken_oracle`` is a deliberate liar (monotonicity fails above a planted
radius threshold) used to prove the validator can convict.
"""

from __future__ import annotations

from .balls import FormalBall
from .errors import ParameterError
from .metric import Box, Line, MetricSpace
from .overt import PositivityOracle
from .rat import Rat, format_rat


def _scalar_space(space: MetricSpace) -> bool:
    return space.kind == "line" or (space.kind == "box" and space.dim == 1)


def _scalar(space: MetricSpace, p) -> Rat:
    if space.kind == "line":
        return p if type(p) is Rat else Rat(p)
    return p[0] if type(p[0]) is Rat else Rat(p[0])


def _check_scalar_range(space: MetricSpace, value: Rat, what: str) -> None:
    if space.kind == "box" and abs(value) > space.bound:
        raise ParameterError(
            f"{what} {format_rat(value)} lies outside the box carrier"
        )


def interval_oracle(space: MetricSpace, a, b) -> PositivityOracle:
    """Closed interval [a, b] as a sublocale of the line (or a 1-d box)."""
    if not _scalar_space(space):
        raise ParameterError("interval oracles need the line or a 1-d box")
    a, b = Rat(a), Rat(b)
    if a > b:
        raise ParameterError(f"empty interval: {format_rat(a)} > {format_rat(b)}")
    _check_scalar_range(space, a, "interval endpoint")
    _check_scalar_range(space, b, "interval endpoint")

    def pred(ball: FormalBall) -> bool:
        q = _scalar(space, ball.center)
        return q - ball.radius < b and q + ball.radius > a

    def dist_to(p) -> Rat:
        x = _scalar(space, p)
        return max(a - x, x - b, Rat(0))

    return PositivityOracle(
        space, f"interval[{format_rat(a)},{format_rat(b)}]", pred, dist_to
    )


def union_oracle(space: MetricSpace, pieces) -> PositivityOracle:
    """Finite union of closed intervals on the line (or a 1-d box)."""
    if not _scalar_space(space):
        raise ParameterError("union oracles need the line or a 1-d box")
    pieces = [(Rat(a), Rat(b)) for a, b in pieces]
    if not pieces:
        raise ParameterError("union oracle needs at least one piece")
    for a, b in pieces:
        if a > b:
            raise ParameterError(
                f"empty union piece: {format_rat(a)} > {format_rat(b)}"
            )
        _check_scalar_range(space, a, "union endpoint")
        _check_scalar_range(space, b, "union endpoint")

    def pred(ball: FormalBall) -> bool:
        q = _scalar(space, ball.center)
        r = ball.radius
        return any(q - r < b and q + r > a for a, b in pieces)

    def dist_to(p) -> Rat:
        x = _scalar(space, p)
        return min(max(a - x, x - b, Rat(0)) for a, b in pieces)

    label = "union[" + ",".join(
        f"[{format_rat(a)},{format_rat(b)}]" for a, b in pieces
    ) + "]"
    return PositivityOracle(space, label, pred, dist_to)


def points_oracle(space: MetricSpace, ys) -> PositivityOracle:
    """A K-finite set of carrier points as the closed set; any carrier."""
    ys = list(ys)
    if not ys:
        raise ParameterError("points oracle needs at least one point")
    for y in ys:
        space.validate_point(y)

    def pred(ball: FormalBall) -> bool:
        return any(space.dist(ball.center, y) < ball.radius for y in ys)

    def dist_to(p) -> Rat:
        return min(space.dist(p, y) for y in ys)

    label = "points{" + ",".join(space.format_point(y) for y in ys) + "}"
    return PositivityOracle(space, label, pred, dist_to)


def brouwer_oracle(space: MetricSpace, flag: bool) -> PositivityOracle:
    """The closed set left over once the classically-undecided proposition is
    decided by ``flag``: [0,1] when the proposition holds, [0,2] otherwise."""
    inner = interval_oracle(space, Rat(0), Rat(1) if flag else Rat(2))
    return PositivityOracle(
        space,
        f"brouwer[{'true' if flag else 'false'}]",
        inner.predicate,
        inner.closed_distance,
    )


def broken_oracle(space: MetricSpace | None = None) -> PositivityOracle:
    """Monotonicity violator: behaves like interval [0,1] on small balls but
    denies every ball of radius >= 3/2, so e.g. B(0;1) is positive while the
    enclosing B(0;2) is not."""
    if space is None:
        space = Line()
    if not _scalar_space(space):
        raise ParameterError("the broken fixture needs the line or a 1-d box")
    threshold = Rat(3, 2)

    def pred(ball: FormalBall) -> bool:
        if ball.radius >= threshold:
            return False
        q = _scalar(space, ball.center)
        return q - ball.radius < 1 and q + ball.radius > 0

    return PositivityOracle(space, "broken", pred, None)


__all__ = [
    "interval_oracle",
    "union_oracle",
    "points_oracle",
    "brouwer_oracle",
    "broken_oracle",
]
