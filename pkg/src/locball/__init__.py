"""locball: located distances, point extraction and eps-nets for overt
closed sublocales of localic completions, over exact rational metric spaces.

A closed subspace of the completion is accessed through one decidable
predicate on formal balls (is this ball positive?).  From nothing but such
answers the library produces certified outputs: rational distance brackets
of any requested width, approximate points as shrinking chains of positive
balls, metric-complement certificates, eps-nets witnessing compactness, and
re-checkable cover certificates.

All arithmetic is exact rational; a compiled kernel accelerates it when
available (``locball.RAT_BACKEND`` says which backend is active).
"""

from .algorithms import (
    DEFAULT_DEPTH,
    DEFAULT_R_MAX,
    Dichotomy,
    DistanceBounds,
    InComplement,
    NetResult,
    NotDetected,
    PointApprox,
    dichotomy,
    distance,
    epsilon_net,
    metric_complement,
    point_extract,
)
from .balls import FormalBall, ball_le, ball_lt, in_down_meet, refine, set_lt
from .config import Config, parse_config
from .cover import Covered, CoverWitness, Unknown, balcov_check, kov_check, verify_witness
from .errors import (
    ConfigError,
    InstanceMismatchError,
    LocballError,
    NoPositiveBallError,
    ParameterError,
    SplittingExhaustedError,
    UnsupportedSpaceError,
)
from .metric import Box, FiniteSpace, Line, MetricSpace, load_finite_matrix
from .oracles import (
    broken_oracle,
    brouwer_oracle,
    interval_oracle,
    points_oracle,
    union_oracle,
)
from .overt import (
    CheckOutcome,
    PositivityOracle,
    ValidationReport,
    is_positive,
    validate_oracle,
)
from .rat import RAT_BACKEND, Rat, format_rat, parse_rat, pow2, to_decimal

__version__ = "0.1.0"

__all__ = [
    "Rat",
    "RAT_BACKEND",
    "parse_rat",
    "format_rat",
    "to_decimal",
    "pow2",
    "MetricSpace",
    "Line",
    "Box",
    "FiniteSpace",
    "load_finite_matrix",
    "FormalBall",
    "ball_lt",
    "ball_le",
    "set_lt",
    "in_down_meet",
    "refine",
    "balcov_check",
    "kov_check",
    "verify_witness",
    "CoverWitness",
    "Covered",
    "Unknown",
    "PositivityOracle",
    "is_positive",
    "validate_oracle",
    "ValidationReport",
    "CheckOutcome",
    "interval_oracle",
    "union_oracle",
    "points_oracle",
    "brouwer_oracle",
    "broken_oracle",
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
    "Config",
    "parse_config",
    "LocballError",
    "ParameterError",
    "InstanceMismatchError",
    "UnsupportedSpaceError",
    "ConfigError",
    "NoPositiveBallError",
    "SplittingExhaustedError",
    "__version__",
]
