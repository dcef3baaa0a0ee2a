"""Rational-arithmetic backend selection.

The whole library is written against one exact rational type, ``Rat``.  Two
interchangeable backends provide it:

* ``cython`` -- the compiled extension in ``_ratkern`` (default when built);
* ``python`` -- the stdlib ``fractions.Fraction``.

``LOCBALL_BACKEND`` forces one or the other (``auto``/``cython``/``python``).
Both backends are exact; they differ only in speed.
"""

import os

_requested = os.environ.get("LOCBALL_BACKEND", "auto").strip().lower()
if _requested not in ("auto", "", "cython", "python"):
    raise ImportError(
        f"LOCBALL_BACKEND={_requested!r} is not one of auto, cython, python"
    )

if _requested == "python":
    from fractions import Fraction as Rat

    BACKEND = "python"
else:
    try:
        from locball._kernel._ratkern import Rat

        BACKEND = "cython"
    except ImportError:
        if _requested == "cython":
            raise
        from fractions import Fraction as Rat

        BACKEND = "python"

__all__ = ["Rat", "BACKEND"]
