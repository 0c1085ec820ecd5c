"""chaoskit: exact and Monte-Carlo moments of multilinear homogeneous
sums in independent (classical) and freely independent (free) random
variables, plus desk-scale experiments for the fourth-moment criteria,
invariance estimates, and the classical/free transfer principle.

Hot enumeration loops run on a compiled core when available; set
CHAOSKIT_PURE=1 to force the pure-Python fallback.
"""

__version__ = "0.1.0"

from chaoskit._backend import BACKEND
from chaoskit.errors import (
    AllDiagonal,
    BadFamilyParams,
    BadIndex,
    ChaoskitError,
    NoSampler,
    NotStandardized,
    OddGround,
    OutsideTheoremClass,
    ShapeMismatch,
    TooLarge,
)

__all__ = [
    "BACKEND",
    "__version__",
    "ChaoskitError",
    "AllDiagonal",
    "BadIndex",
    "BadFamilyParams",
    "ShapeMismatch",
    "TooLarge",
    "OddGround",
    "NotStandardized",
    "NoSampler",
    "OutsideTheoremClass",
]
