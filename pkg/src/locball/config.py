"""Line-oriented config: one space, one oracle, optional tolerances.

    # comment
    space line | space box DIM BOUND | space finite PATH
    oracle interval A B
    oracle union [A1,B1] [A2,B2] ...
    oracle points P1 P2 ...
    oracle brouwer true|false
    oracle broken
    tol EXP       (default 20)
    rmax R        (default 65536)
    depth N       (default 12)
    seed N        (default 0)

All rationals parse exactly; every mistake is reported with its line number.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import oracles
from .errors import ConfigError, LocballError, ParameterError
from .metric import Box, FiniteSpace, Line, MetricSpace, load_finite_matrix
from .overt import PositivityOracle
from .rat import Rat, parse_rat


@dataclass(frozen=True)
class Config:
    space: MetricSpace
    oracle: PositivityOracle
    tol_exp: int = 20
    r_max: Rat = Rat(65536)
    depth: int = 12
    seed: int = 0


def _rat(tok: str, lineno: int) -> Rat:
    try:
        return parse_rat(tok)
    except ValueError as exc:
        raise ConfigError(lineno, str(exc)) from None


def _nat(tok: str, lineno: int, name: str, minimum: int = 0) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise ConfigError(lineno, f"{name} must be an integer, got {tok!r}") from None
    if v < minimum:
        raise ConfigError(lineno, f"{name} must be >= {minimum}, got {v}")
    return v


def _build_space(tokens: list[str], lineno: int, base_dir: Path | None) -> MetricSpace:
    if tokens[0] == "line":
        if len(tokens) != 1:
            raise ConfigError(lineno, "space line takes no parameters")
        return Line()
    if tokens[0] == "box":
        if len(tokens) != 3:
            raise ConfigError(lineno, "space box takes DIM and BOUND")
        dim = _nat(tokens[1], lineno, "box dimension", minimum=1)
        bound = _rat(tokens[2], lineno)
        try:
            return Box(dim, bound)
        except ParameterError as exc:
            raise ConfigError(lineno, str(exc)) from None
    if tokens[0] == "finite":
        if len(tokens) != 2:
            raise ConfigError(lineno, "space finite takes a matrix file path")
        path = Path(tokens[1])
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        try:
            return load_finite_matrix(path)
        except (OSError, LocballError) as exc:
            raise ConfigError(lineno, f"cannot load matrix: {exc}") from None
    raise ConfigError(lineno, f"unknown space kind {tokens[0]!r}")


def _parse_union_piece(tok: str, lineno: int) -> tuple[Rat, Rat]:
    if not (tok.startswith("[") and tok.endswith("]")):
        raise ConfigError(lineno, f"union piece must look like [A,B], got {tok!r}")
    inner = tok[1:-1].split(",")
    if len(inner) != 2:
        raise ConfigError(lineno, f"union piece must have two endpoints, got {tok!r}")
    a, b = _rat(inner[0], lineno), _rat(inner[1], lineno)
    if a > b:
        raise ConfigError(lineno, f"union piece with A > B: {tok}")
    return a, b


_ORACLE_KINDS = ("interval", "union", "points", "brouwer", "broken")


def _prevalidate_oracle(tokens: list[str], lineno: int) -> None:
    # Space-independent checks, run at scan time so mistakes are reported
    # at their own line even when other declarations are missing.
    kind = tokens[0]
    if kind not in _ORACLE_KINDS:
        raise ConfigError(lineno, f"unknown oracle kind {kind!r}")
    if kind == "interval":
        if len(tokens) != 3:
            raise ConfigError(lineno, "oracle interval takes A and B")
        a, b = _rat(tokens[1], lineno), _rat(tokens[2], lineno)
        if a > b:
            raise ConfigError(lineno, f"interval with A > B: {tokens[1]} {tokens[2]}")
    elif kind == "union":
        if len(tokens) < 2:
            raise ConfigError(lineno, "oracle union needs at least one piece")
        for tok in tokens[1:]:
            _parse_union_piece(tok, lineno)
    elif kind == "points":
        if len(tokens) < 2:
            raise ConfigError(lineno, "oracle points needs at least one point")
    elif kind == "brouwer":
        if len(tokens) != 2 or tokens[1] not in ("true", "false"):
            raise ConfigError(lineno, "oracle brouwer takes true or false")
    elif kind == "broken":
        if len(tokens) != 1:
            raise ConfigError(lineno, "oracle broken takes no parameters")


def _build_oracle(
    tokens: list[str], lineno: int, space: MetricSpace
) -> PositivityOracle:
    kind = tokens[0]
    try:
        if kind == "interval":
            if len(tokens) != 3:
                raise ConfigError(lineno, "oracle interval takes A and B")
            a, b = _rat(tokens[1], lineno), _rat(tokens[2], lineno)
            if a > b:
                raise ConfigError(lineno, f"interval with A > B: {tokens[1]} {tokens[2]}")
            return oracles.interval_oracle(space, a, b)
        if kind == "union":
            pieces = [_parse_union_piece(tok, lineno) for tok in tokens[1:]]
            if not pieces:
                raise ConfigError(lineno, "oracle union needs at least one piece")
            return oracles.union_oracle(space, pieces)
        if kind == "points":
            if len(tokens) < 2:
                raise ConfigError(lineno, "oracle points needs at least one point")
            try:
                pts = [space.parse_point(tok) for tok in tokens[1:]]
            except LocballError as exc:
                raise ConfigError(lineno, str(exc)) from None
            return oracles.points_oracle(space, pts)
        if kind == "brouwer":
            if len(tokens) != 2 or tokens[1] not in ("true", "false"):
                raise ConfigError(lineno, "oracle brouwer takes true or false")
            return oracles.brouwer_oracle(space, tokens[1] == "true")
        if kind == "broken":
            if len(tokens) != 1:
                raise ConfigError(lineno, "oracle broken takes no parameters")
            return oracles.broken_oracle(space)
    except ParameterError as exc:
        raise ConfigError(lineno, str(exc)) from None
    raise ConfigError(lineno, f"unknown oracle kind {kind!r}")


def parse_config(text: str, base_dir: Path | None = None) -> Config:
    space_decl: tuple[int, list[str]] | None = None
    oracle_decl: tuple[int, list[str]] | None = None
    tol_exp, r_max, depth, seed = 20, Rat(65536), 12, 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword, rest = tokens[0], tokens[1:]
        if keyword == "space":
            if space_decl is not None:
                raise ConfigError(lineno, "duplicate space declaration")
            if not rest:
                raise ConfigError(lineno, "space declaration needs a kind")
            space_decl = (lineno, rest)
        elif keyword == "oracle":
            if oracle_decl is not None:
                raise ConfigError(lineno, "duplicate oracle declaration")
            if not rest:
                raise ConfigError(lineno, "oracle declaration needs a kind")
            _prevalidate_oracle(rest, lineno)
            oracle_decl = (lineno, rest)
        elif keyword == "tol":
            if len(rest) != 1:
                raise ConfigError(lineno, "tol takes one integer")
            tol_exp = _nat(rest[0], lineno, "tol", minimum=1)
        elif keyword == "rmax":
            if len(rest) != 1:
                raise ConfigError(lineno, "rmax takes one rational")
            r_max = _rat(rest[0], lineno)
            if not r_max > 0:
                raise ConfigError(lineno, f"rmax must be positive, got {rest[0]}")
        elif keyword == "depth":
            if len(rest) != 1:
                raise ConfigError(lineno, "depth takes one integer")
            depth = _nat(rest[0], lineno, "depth", minimum=1)
        elif keyword == "seed":
            if len(rest) != 1:
                raise ConfigError(lineno, "seed takes one integer")
            seed = _nat(rest[0], lineno, "seed", minimum=0)
        else:
            raise ConfigError(lineno, f"unknown keyword {keyword!r}")

    if space_decl is None:
        raise ConfigError(None, "missing space declaration")
    if oracle_decl is None:
        raise ConfigError(None, "missing oracle declaration")
    space = _build_space(space_decl[1], space_decl[0], base_dir)
    oracle = _build_oracle(oracle_decl[1], oracle_decl[0], space)
    return Config(space, oracle, tol_exp, r_max, depth, seed)


__all__ = ["Config", "parse_config"]
