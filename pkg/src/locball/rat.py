"""Exact rationals: backend re-export plus parsing and rendering helpers.

Every quantity in this package (distances, radii, tolerances) is a ``Rat``;
nothing is ever rounded.  Text form is ``p/q`` or a bare integer; decimal
renderings are advisory only and truncate toward zero.
"""

from __future__ import annotations

import re

from ._kernel import BACKEND as RAT_BACKEND
from ._kernel import Rat

_RAT_RE = re.compile(r"[+-]?\d+(?:/\d+)?")
_RAT_FULL = re.compile(r"([+-]?\d+)(?:/(\d+))?")


def parse_rat(text: str) -> Rat:
    """Parse ``p/q`` or ``p`` into an exact rational."""
    m = _RAT_FULL.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Rat(num, den)


def format_rat(r) -> str:
    """Canonical text form; round-trips through :func:`parse_rat`."""
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def to_decimal(r, digits: int = 12) -> str:
    """Advisory decimal rendering, truncated toward zero at ``digits``."""
    n, d = r.numerator, r.denominator
    sign = "-" if n < 0 else ""
    n = abs(n)
    whole, rem = divmod(n, d)
    if rem == 0:
        return f"{sign}{whole}"
    frac = rem * 10**digits // d
    if frac == 0:
        return "0" if whole == 0 else f"{sign}{whole}"
    txt = f"{frac:0{digits}d}".rstrip("0")
    return f"{sign}{whole}.{txt}"


def pow2(k: int) -> Rat:
    """2**k as an exact rational, for any integer k."""
    if k >= 0:
        return Rat(2**k)
    return Rat(1, 2 ** (-k))


def rat_ceil(r) -> int:
    return -((-r.numerator) // r.denominator)


def rat_floor(r) -> int:
    return r.numerator // r.denominator


__all__ = [
    "Rat",
    "RAT_BACKEND",
    "parse_rat",
    "format_rat",
    "to_decimal",
    "pow2",
    "rat_ceil",
    "rat_floor",
]
