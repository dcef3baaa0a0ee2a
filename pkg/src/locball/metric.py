"""Exact-rational metric spaces with net oracles.

Three carriers are shipped: the rational line, boxes ``[-bound, bound]^dim``
under the sup metric, and finite spaces given by a distance matrix.  Each one
witnesses its own (local) total boundedness through ``local_net`` and
``global_net``, which is all the covering machinery ever needs: a K-finite
set of centers such that every carrier point of the queried region is within
the requested mesh of some center.

The sup metric is deliberate: on rational coordinates it keeps every distance
an exact rational, so every comparison made anywhere in this package is
decidable.  Euclidean distance would not.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from pathlib import Path

from .errors import InstanceMismatchError, ParameterError
from .rat import Rat, format_rat, parse_rat, rat_ceil


def _require_positive(value, name: str):
    if not value > 0:
        raise ParameterError(f"{name} must be positive, got {value!r}")


def _as_rat(value) -> Rat:
    if type(value) is Rat:
        return value
    if isinstance(value, int):
        return Rat(value)
    if isinstance(value, numbers.Rational):
        return Rat(value.numerator, value.denominator)
    raise InstanceMismatchError(f"not an exact rational: {value!r}")


class MetricSpace:
    """Shared interface of the shipped carriers."""

    kind: str = "abstract"

    def dist(self, p, q) -> Rat:
        raise NotImplementedError

    def local_net(self, x, R, s) -> list:
        """Centers covering the open ball around x of radius R at mesh s.

        Every carrier point p with dist(p, x) < R is within s of some
        returned center; the list is finite and duplicate-free.
        """
        raise NotImplementedError

    def global_net(self, s):
        """Centers covering the whole carrier at mesh s, or None if the
        space is not totally bounded."""
        raise NotImplementedError

    def validate_point(self, p) -> None:
        raise NotImplementedError

    def random_point(self, rng, span: int = 8):
        raise NotImplementedError

    def radius_hint(self) -> Rat:
        """A radius scale at which random balls meaningfully probe the space."""
        return Rat(4)

    def parse_point(self, text: str):
        raise NotImplementedError

    def format_point(self, p) -> str:
        raise NotImplementedError


def _random_rat(rng, lo_times_den, hi_times_den, den):
    return Rat(rng.randint(lo_times_den, hi_times_den), den)


@dataclass(frozen=True)
class Line(MetricSpace):
    """The rational line; locally totally bounded but not totally bounded."""

    kind: str = "line"

    def validate_point(self, p) -> None:
        if not isinstance(p, (int, numbers.Rational)):
            raise InstanceMismatchError(f"not a point of the line: {p!r}")

    def dist(self, p, q) -> Rat:
        self.validate_point(p)
        self.validate_point(q)
        return abs(_as_rat(p) - _as_rat(q))

    def local_net(self, x, R, s) -> list:
        self.validate_point(x)
        _require_positive(R, "R")
        _require_positive(s, "s")
        x = _as_rat(x)
        if s >= R:
            return [x]
        n = rat_ceil(R / s)
        return [x + j * s for j in range(-n, n + 1)]

    def global_net(self, s):
        _require_positive(s, "s")
        return None

    def random_point(self, rng, span: int = 8):
        den = rng.randint(1, 16)
        return _random_rat(rng, -span * den, span * den, den)

    def parse_point(self, text: str):
        try:
            return parse_rat(text)
        except ValueError as exc:
            raise InstanceMismatchError(str(exc)) from None

    def format_point(self, p) -> str:
        return format_rat(_as_rat(p))


@dataclass(frozen=True)
class Box(MetricSpace):
    """``[-bound, bound]^dim`` with the sup metric; totally bounded."""

    dim: int
    bound: Rat
    kind: str = "box"

    def __post_init__(self):
        if self.dim < 1:
            raise ParameterError(f"box dimension must be >= 1, got {self.dim}")
        _require_positive(self.bound, "bound")

    def validate_point(self, p) -> None:
        if not isinstance(p, tuple) or len(p) != self.dim:
            raise InstanceMismatchError(
                f"not a point of box({self.dim}): {p!r}"
            )
        for c in p:
            if not isinstance(c, (int, numbers.Rational)):
                raise InstanceMismatchError(f"non-rational coordinate: {c!r}")
            if abs(c) > self.bound:
                raise InstanceMismatchError(
                    f"coordinate {c!r} outside [-{self.bound}, {self.bound}]"
                )

    def dist(self, p, q) -> Rat:
        self.validate_point(p)
        self.validate_point(q)
        return max(abs(_as_rat(a) - _as_rat(b)) for a, b in zip(p, q))

    def _clamp(self, v):
        if v > self.bound:
            return self.bound
        if v < -self.bound:
            return -self.bound
        return v

    def local_net(self, x, R, s) -> list:
        self.validate_point(x)
        _require_positive(R, "R")
        _require_positive(s, "s")
        if s >= R:
            return [x]
        n = rat_ceil(R / s)
        axes = []
        for c in x:
            c = _as_rat(c)
            vals = dict.fromkeys(self._clamp(c + j * s) for j in range(-n, n + 1))
            axes.append(list(vals))
        return list(dict.fromkeys(self._product(axes)))

    def global_net(self, s):
        _require_positive(s, "s")
        n = rat_ceil(self.bound / s)
        vals = list(dict.fromkeys(self._clamp(j * s) for j in range(-n, n + 1)))
        return list(dict.fromkeys(self._product([vals] * self.dim)))

    @staticmethod
    def _product(axes):
        out = [()]
        for vals in axes:
            out = [pt + (v,) for pt in out for v in vals]
        return out

    def random_point(self, rng, span: int = 8):
        hi = min(self.bound, Rat(span))
        coords = []
        for _ in range(self.dim):
            den = rng.randint(1, 16)
            top = (hi.numerator * den) // hi.denominator
            coords.append(Rat(rng.randint(-top, top), den))
        return tuple(coords)

    def parse_point(self, text: str):
        parts = text.split(",")
        if len(parts) != self.dim:
            raise InstanceMismatchError(
                f"box({self.dim}) points need {self.dim} comma-separated rationals: {text!r}"
            )
        try:
            pt = tuple(parse_rat(part) for part in parts)
        except ValueError as exc:
            raise InstanceMismatchError(str(exc)) from None
        self.validate_point(pt)
        return pt

    def format_point(self, p) -> str:
        return ",".join(format_rat(_as_rat(c)) for c in p)


@dataclass(frozen=True)
class FiniteSpace(MetricSpace):
    """A finite carrier {0, ..., n-1} with an explicit distance matrix."""

    matrix: tuple
    kind: str = "finite"

    def __post_init__(self):
        n = len(self.matrix)
        if n == 0:
            raise ParameterError("finite space needs at least one point")
        for row in self.matrix:
            if len(row) != n:
                raise ParameterError("distance matrix must be square")
        for i in range(n):
            if self.matrix[i][i] != 0:
                raise ParameterError(f"dist({i},{i}) must be 0")
            for j in range(n):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise ParameterError(f"matrix not symmetric at ({i},{j})")
                if i != j and not self.matrix[i][j] > 0:
                    raise ParameterError(f"dist({i},{j}) must be positive")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.matrix[i][j] > self.matrix[i][k] + self.matrix[k][j]:
                        raise ParameterError(
                            f"triangle inequality fails at ({i},{j}) via {k}"
                        )

    @property
    def size(self) -> int:
        return len(self.matrix)

    def validate_point(self, p) -> None:
        if not isinstance(p, int) or isinstance(p, bool) or not 0 <= p < self.size:
            raise InstanceMismatchError(
                f"not an index into a {self.size}-point space: {p!r}"
            )

    def dist(self, p, q) -> Rat:
        self.validate_point(p)
        self.validate_point(q)
        return self.matrix[p][q]

    def local_net(self, x, R, s) -> list:
        self.validate_point(x)
        _require_positive(R, "R")
        _require_positive(s, "s")
        return [p for p in range(self.size) if self.matrix[p][x] < R]

    def global_net(self, s):
        _require_positive(s, "s")
        return list(range(self.size))

    def random_point(self, rng, span: int = 8):
        return rng.randrange(self.size)

    def radius_hint(self) -> Rat:
        top = max(max(row) for row in self.matrix)
        return _as_rat(top) + 1

    def parse_point(self, text: str):
        try:
            p = int(text.strip())
        except ValueError:
            raise InstanceMismatchError(f"not a carrier index: {text!r}") from None
        self.validate_point(p)
        return p

    def format_point(self, p) -> str:
        return str(p)


def load_finite_matrix(path) -> FiniteSpace:
    """Read a finite space: a leading size line, then the matrix rows,
    whitespace-separated, entries as exact rationals."""
    text = Path(path).read_text()
    tokens = text.split()
    if not tokens:
        raise ParameterError(f"empty matrix file: {path}")
    try:
        n = int(tokens[0])
    except ValueError:
        raise ParameterError(f"matrix file must start with its size: {path}") from None
    entries = tokens[1:]
    if len(entries) != n * n:
        raise ParameterError(
            f"expected {n * n} matrix entries, found {len(entries)}: {path}"
        )
    try:
        vals = [parse_rat(tok) for tok in entries]
    except ValueError as exc:
        raise ParameterError(f"bad matrix entry in {path}: {exc}") from None
    rows = tuple(tuple(vals[i * n : (i + 1) * n]) for i in range(n))
    return FiniteSpace(rows)


__all__ = [
    "MetricSpace",
    "Line",
    "Box",
    "FiniteSpace",
    "load_finite_matrix",
]
