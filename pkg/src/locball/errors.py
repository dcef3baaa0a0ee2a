"""Exception taxonomy.

The CLI maps these onto its exit codes, so the split matters: bad arguments,
mismatched carriers, unsupported spaces and config mistakes are usage errors;
an exhausted positive-ball search is a verified negative; an exhausted
splitting search is an oracle defect (the oracle broke its contract, not us).
"""


class LocballError(Exception):
    """Base class for everything raised by this package."""


class ParameterError(LocballError, ValueError):
    """An argument violates a documented precondition."""


class InstanceMismatchError(LocballError):
    """A point or ball does not belong to the metric instance in use."""


class UnsupportedSpaceError(LocballError):
    """Operation needs a totally bounded space and the instance is not."""


class ConfigError(LocballError):
    """Config text failed to parse; carries a 1-based line number."""

    def __init__(self, line: int | None, message: str):
        self.line = line
        self.message = message
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class NoPositiveBallError(LocballError):
    """No positive ball at the query point within the radius budget.

    A verified fact about the oracle: the target set is empty or farther
    than ``r_max`` from the query point.
    """

    def __init__(self, r_max):
        self.r_max = r_max
        super().__init__(f"no positive ball found within radius {r_max}")


class SplittingExhaustedError(LocballError):
    """The oracle claimed a ball positive but no refinement member is.

    Signals a broken oracle: the splitting contract promises a positive
    member at some finite refinement depth.
    """

    def __init__(self, ball, depth: int):
        self.ball = ball
        self.depth = depth
        super().__init__(
            f"no positive refinement member of {ball!r} within {depth} extra levels"
        )
