"""Command-line front end.

Subcommands drive the library against a space+oracle config:

    validate              run the positivity-axiom validator
    distance X            bracket the distance from X to the closed set
    point B(C;R)          extract a point from a positive ball
    net EPS               compute an eps-net
    complement X          test membership in the metric complement
    cover A U1 [U2 ...]   certify an elementary cover (ball literals)

Exit codes: 0 affirmative result, 1 verified negative, 2 parameter/parse
error, 3 oracle defect (splitting contract broken), 4 inconclusive
(cannot verify either way).  Output lines carry the exact rational first and
an advisory decimal after it; --json mirrors the same fields.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algorithms import (
    InComplement,
    NotDetected,
    distance,
    epsilon_net,
    metric_complement,
    point_extract,
)
from .balls import FormalBall
from .config import Config, parse_config
from .cover import Covered, kov_check
from .errors import (
    ConfigError,
    InstanceMismatchError,
    LocballError,
    NoPositiveBallError,
    ParameterError,
    SplittingExhaustedError,
    UnsupportedSpaceError,
)
from .overt import validate_oracle
from .rat import format_rat, parse_rat, to_decimal

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_ORACLE_DEFECT = 3
EXIT_INCONCLUSIVE = 4


def _rat_field(r) -> str:
    return f"{format_rat(r)} ({to_decimal(r)})"


def _ball_literal(space, b: FormalBall) -> str:
    return f"B({space.format_point(b.center)};{format_rat(b.radius)})"


def _parse_ball(space, text: str) -> FormalBall:
    t = text.strip()
    if not (t.startswith("B(") and t.endswith(")")) or ";" not in t:
        raise ParameterError(f"ball literal must look like B(center;radius): {text!r}")
    center_txt, radius_txt = t[2:-1].rsplit(";", 1)
    center = space.parse_point(center_txt)
    try:
        radius = parse_rat(radius_txt)
    except ValueError as exc:
        raise ParameterError(str(exc)) from None
    if not radius > 0:
        raise ParameterError(f"ball radius must be positive: {text!r}")
    return FormalBall(center, radius)


class _Output:
    """Collects name/value lines and an optional JSON mirror."""

    def __init__(self, as_json: bool, command: str):
        self.as_json = as_json
        self.lines: list[str] = []
        self.data: dict = {"command": command}

    def put(self, key: str, value, rat=None):
        if rat is not None:
            self.lines.append(f"{key} = {_rat_field(rat)}")
            self.data[key] = format_rat(rat)
            self.data[key + "_decimal"] = to_decimal(rat)
        else:
            self.lines.append(f"{key} = {value}")
            self.data[key] = value

    def raw(self, line: str, key: str | None = None, value=None):
        self.lines.append(line)
        if key is not None:
            self.data.setdefault(key, []).append(value)

    def emit(self, status: str):
        self.data["status"] = status
        if self.as_json:
            print(json.dumps(self.data))
        else:
            for line in self.lines:
                print(line)


def _cmd_validate(cfg: Config, args, out: _Output) -> int:
    report = validate_oracle(cfg.oracle, sample_count=1000, depth=cfg.depth, seed=cfg.seed)
    out.put("oracle", cfg.oracle.label)
    out.put("seed", cfg.seed)
    for check in report.checks:
        if check.passed:
            out.raw(
                f"{check.name}: pass ({check.samples} samples)",
                "checks",
                {"name": check.name, "passed": True, "samples": check.samples},
            )
        else:
            witnesses = []
            for ce in check.counterexamples:
                if isinstance(ce, tuple):
                    witnesses.append(
                        " <= ".join(_ball_literal(cfg.space, b) for b in ce)
                    )
                else:
                    witnesses.append(_ball_literal(cfg.space, ce))
            out.raw(
                f"{check.name}: FAIL ({'; '.join(witnesses)})",
                "checks",
                {"name": check.name, "passed": False, "counterexamples": witnesses},
            )
    out.put("result", "pass" if report.passed else "FAIL")
    out.emit("ok" if report.passed else "counterexample")
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def _cmd_distance(cfg: Config, args, out: _Output) -> int:
    x = cfg.space.parse_point(args.x)
    bounds = distance(cfg.oracle, x, cfg.tol_exp, cfg.r_max)
    out.put("x", cfg.space.format_point(x))
    out.put("lo", None, rat=bounds.lo)
    out.put("hi", None, rat=bounds.hi)
    out.put("width", None, rat=bounds.width)
    out.put("oracle_calls", bounds.oracle_calls)
    out.emit("ok")
    return EXIT_OK


def _cmd_point(cfg: Config, args, out: _Output) -> int:
    ball = _parse_ball(cfg.space, args.ball)
    approx = point_extract(cfg.oracle, ball, cfg.tol_exp, cfg.depth)
    out.put("approx", cfg.space.format_point(approx.approx))
    out.put("tolerance", None, rat=approx.tolerance)
    out.put("chain_length", len(approx.chain))
    out.put(
        "chain",
        " ".join(_ball_literal(cfg.space, b) for b in approx.chain),
    )
    out.emit("ok")
    return EXIT_OK


def _cmd_net(cfg: Config, args, out: _Output) -> int:
    try:
        eps = parse_rat(args.eps)
    except ValueError as exc:
        raise ParameterError(str(exc)) from None
    result = epsilon_net(cfg.oracle, eps, cfg.tol_exp, cfg.depth)
    out.put("epsilon", None, rat=result.epsilon)
    out.put("points", len(result.points))
    for pt in result.points:
        out.raw(
            f"{cfg.space.format_point(pt.approx)} {format_rat(pt.tolerance)} {len(pt.chain)}",
            "net",
            {
                "point": cfg.space.format_point(pt.approx),
                "tolerance": format_rat(pt.tolerance),
                "chain_length": len(pt.chain),
            },
        )
    out.emit("ok")
    return EXIT_OK


def _cmd_complement(cfg: Config, args, out: _Output) -> int:
    x = cfg.space.parse_point(args.x)
    verdict = metric_complement(cfg.oracle, x, cfg.tol_exp)
    out.put("x", cfg.space.format_point(x))
    if isinstance(verdict, InComplement):
        out.put("verdict", "InComplement")
        out.put("delta", None, rat=verdict.delta)
        out.emit("ok")
        return EXIT_OK
    out.put("verdict", "NotDetected")
    out.put("max_exp", verdict.max_exp)
    out.emit("inconclusive")
    return EXIT_INCONCLUSIVE


def _cmd_cover(cfg: Config, args, out: _Output) -> int:
    a = _parse_ball(cfg.space, args.a)
    members = [_parse_ball(cfg.space, tok) for tok in args.members]
    verdict = kov_check(cfg.space, a, members, cfg.depth)
    if isinstance(verdict, Covered):
        w = verdict.witness
        out.put("verdict", "Covered")
        out.put("b", _ball_literal(cfg.space, w.b))
        out.put("c", _ball_literal(cfg.space, w.c))
        out.put("scale", None, rat=w.scale)
        out.put("witness_size", len(w.members))
        out.put(
            "witness",
            " ".join(_ball_literal(cfg.space, m) for m in w.members),
        )
        out.emit("ok")
        return EXIT_OK
    out.put("verdict", "Unknown")
    out.put("depth", verdict.depth)
    out.emit("inconclusive")
    return EXIT_INCONCLUSIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locball",
        description="Located distances, point extraction, eps-nets and cover "
        "certificates over exact rational metric spaces.",
    )
    parser.add_argument("--config", required=True, help="path to a space+oracle config")
    parser.add_argument("--tol", type=int, default=None, help="override tol exponent")
    parser.add_argument("--seed", type=int, default=None, help="override sampling seed")
    parser.add_argument("--json", action="store_true", help="machine-readable output")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", help="check the positivity axioms by sampling")
    p = sub.add_parser("distance", help="bracket the distance from a point")
    p.add_argument("x")
    p = sub.add_parser("point", help="extract a point from a positive ball")
    p.add_argument("ball")
    p = sub.add_parser("net", help="compute an eps-net of the closed set")
    p.add_argument("eps")
    p = sub.add_parser("complement", help="test metric-complement membership")
    p.add_argument("x")
    p = sub.add_parser("cover", help="certify an elementary cover")
    p.add_argument("a")
    p.add_argument("members", nargs="+")
    return parser


_HANDLERS = {
    "validate": _cmd_validate,
    "distance": _cmd_distance,
    "point": _cmd_point,
    "net": _cmd_net,
    "complement": _cmd_complement,
    "cover": _cmd_cover,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    try:
        cfg_path = Path(args.config)
        cfg = parse_config(cfg_path.read_text(), base_dir=cfg_path.parent)
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.tol is not None:
        if args.tol < 1:
            print("error: --tol must be >= 1", file=sys.stderr)
            return EXIT_USAGE
        cfg = Config(cfg.space, cfg.oracle, args.tol, cfg.r_max, cfg.depth, cfg.seed)
    if args.seed is not None:
        cfg = Config(cfg.space, cfg.oracle, cfg.tol_exp, cfg.r_max, cfg.depth, args.seed)

    out = _Output(args.json, args.command)
    try:
        return _HANDLERS[args.command](cfg, args, out)
    except NoPositiveBallError as exc:
        print(f"verified negative: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except SplittingExhaustedError as exc:
        print(f"oracle defect: {exc}", file=sys.stderr)
        return EXIT_ORACLE_DEFECT
    except (ParameterError, InstanceMismatchError, UnsupportedSpaceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LocballError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


__all__ = ["build_parser", "run", "main"]
