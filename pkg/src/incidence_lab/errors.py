"""Exception types shared across the package."""

from __future__ import annotations


class IncidenceLabError(Exception):
    """Base class for all errors raised by incidence_lab."""


class InvalidPointError(IncidenceLabError):
    """Malformed point input (zero denominator, non-exact coordinate type)."""


class InvalidLineError(IncidenceLabError):
    """Malformed line coefficients ((a, b) = (0, 0))."""


class DegeneratePairError(IncidenceLabError):
    """A line was requested through two equal points."""


class DuplicatePointsError(IncidenceLabError):
    """A configuration contains the same point twice."""

    def __init__(self, message: str, indices: tuple[int, int] | None = None):
        super().__init__(message)
        self.indices = indices


class TooFewPointsError(IncidenceLabError):
    """Fewer than two points; no line is determined."""


class CollinearConfigurationError(IncidenceLabError):
    """An operation requiring a non-collinear configuration got a collinear one."""


class InvalidFamilySpecError(IncidenceLabError):
    """Unknown generator family or out-of-range parameters."""


class InvalidSearchSpecError(IncidenceLabError):
    """Search parameters are inconsistent (n too large, bad mode, ...)."""


class SearchSpaceTooLargeError(IncidenceLabError):
    """Exhaustive search refused: the subset count exceeds the hard cap."""

    def __init__(self, estimate: int, cap: int):
        super().__init__(
            f"search space holds {estimate} subsets, over the cap of {cap}"
        )
        self.estimate = estimate
        self.cap = cap


class PointFileError(IncidenceLabError):
    """A point file failed to parse; carries the offending line number(s)."""

    def __init__(self, message: str, lines: tuple[int, ...] = ()):
        super().__init__(message)
        self.lines = lines
