"""Exception hierarchy shared by all modules.

Every domain error maps to CLI exit code 2 with a machine-readable
payload; plain I/O problems stay OSError and map to exit code 1.
"""


class ChaoskitError(Exception):
    """Base class for all domain errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class AllDiagonal(ChaoskitError):
    """Raw kernel entries have no off-diagonal mass, nothing to normalize."""


class BadIndex(ChaoskitError):
    """A tuple index lies outside [1, n] or has the wrong arity."""


class BadFamilyParams(ChaoskitError):
    """Named kernel family called with unusable (n, d, seed) parameters."""


class ShapeMismatch(ChaoskitError):
    """Operands disagree on n, d, vector length, or matrix shape."""


class TooLarge(ChaoskitError):
    """Requested enumeration exceeds the hard feasibility cap."""


class OddGround(ChaoskitError):
    """Pairings need an even ground set."""


class NotStandardized(ChaoskitError):
    """Operation requires a centered, unit-variance law."""


class NoSampler(ChaoskitError):
    """The law carries no sampler spec (free laws never do)."""


class OutsideTheoremClass(ChaoskitError):
    """Law fails the fourth-cumulant / third-moment hypotheses; pass
    allow_outside to run the experiment anyway."""
