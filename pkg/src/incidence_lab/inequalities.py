"""Exact verdicts for the classical bounds on determined-line statistics.

Two Hirzebruch-type inequalities lower-bound l_2 + (3/4) l_3 in terms of n
and the richer lines, each under a hypothesis capping the largest collinear
subset.  Every coefficient involved is a multiple of 1/4, so both sides are
carried as integers scaled by 4 (the _q fields) and all comparisons are
exact.  The degree-sum consequence sum_P d(P) >= n(n+3)/3 is carried in x3
units for the same reason, and the pigeonhole step turns it into a lower
bound on the maximum incident-line-number, ceil(n/3) + 1, checked here
alongside the classical sqrt(n), n/37, n/26 + 2 and the conjectural
floor(n/2) thresholds.

Inapplicability (hypothesis on max_collinear unmet) is a normal verdict,
never an error: reports must degrade gracefully on any input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .arrangement import ArrangementStats
from .errors import CollinearConfigurationError

__all__ = [
    "InequalityVerdict",
    "BoundEntry",
    "BoundsReport",
    "hirzebruch_check",
    "bojanowski_check",
    "degree_sum_check",
    "main_bound_check",
    "bounds_report",
    "pigeonhole_bound",
    "main_bound_threshold",
    "meets_strict_collinearity",
]


@dataclass(frozen=True, slots=True)
class InequalityVerdict:
    """One inequality instantiated on one configuration, in scaled integers.

    lhs_q and rhs_q are the two sides times the scale (4 for the
    Hirzebruch-type checks, 3 for the degree-sum check); satisfied is
    meaningful only when applicable.
    """

    name: str
    applicable: bool
    satisfied: bool
    lhs_q: int
    rhs_q: int
    slack_q: int


@dataclass(frozen=True, slots=True)
class BoundEntry:
    """One lower-bound threshold on the maximum degree."""

    name: str
    threshold: Fraction
    met: bool
    conjectural: bool = False
    witness_index: int | None = None


@dataclass(frozen=True, slots=True)
class BoundsReport:
    """All degree lower bounds evaluated against one configuration."""

    n: int
    max_degree: int
    entries: tuple[BoundEntry, ...]

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)


def _verdict(name: str, applicable: bool, lhs_q: int, rhs_q: int) -> InequalityVerdict:
    slack = lhs_q - rhs_q
    return InequalityVerdict(
        name=name,
        applicable=applicable,
        satisfied=slack >= 0,
        lhs_q=lhs_q,
        rhs_q=rhs_q,
        slack_q=slack,
    )


def hirzebruch_check(stats: ArrangementStats) -> InequalityVerdict:
    """l_2 + (3/4) l_3 >= n + sum_{r>=5} (2r - 9) l_r, x4 units.

    Applicable when at most n - 3 points are collinear.
    """
    lhs = 4 * stats.l(2) + 3 * stats.l(3)
    rhs = 4 * stats.n + sum(
        4 * (2 * r - 9) * c for r, c in stats.histogram.items() if r >= 5
    )
    return _verdict("hirzebruch", stats.max_collinear <= stats.n - 3, lhs, rhs)


def bojanowski_check(stats: ArrangementStats) -> InequalityVerdict:
    """l_2 + (3/4) l_3 >= n + sum_{r>=5} (r^2/4 - r) l_r, x4 units.

    Applicable when at most floor(2n/3) points are collinear.
    """
    lhs = 4 * stats.l(2) + 3 * stats.l(3)
    rhs = 4 * stats.n + sum(
        (r * r - 4 * r) * c for r, c in stats.histogram.items() if r >= 5
    )
    return _verdict("bojanowski", stats.max_collinear <= (2 * stats.n) // 3, lhs, rhs)


def degree_sum_check(stats: ArrangementStats) -> InequalityVerdict:
    """sum_P d(P) >= n(n+3)/3, carried as 3*sum_d >= n(n+3) in x3 units.

    Applicable under the same floor(2n/3) collinearity cap as the
    bojanowski check, whose algebraic consequence this is.
    """
    lhs = 3 * stats.degree_sum
    rhs = stats.n * (stats.n + 3)
    return _verdict("degree_sum", stats.max_collinear <= (2 * stats.n) // 3, lhs, rhs)


def meets_strict_collinearity(stats: ArrangementStats) -> bool:
    """Whether at most ceil(n/3) points are collinear (the stricter
    hypothesis under which the degree-sum chain is usually stated)."""
    return stats.max_collinear <= -(-stats.n // 3)


def main_bound_threshold(n: int) -> int:
    """ceil(n/3) + 1, the proven floor on the maximum degree."""
    return -(-n // 3) + 1


def pigeonhole_bound(stats: ArrangementStats) -> int:
    """ceil(sum_P d(P) / n): the average degree rounded up, which the
    maximum degree can never undercut."""
    return -(-stats.degree_sum // stats.n)


def _require_noncollinear(stats: ArrangementStats) -> None:
    if stats.max_collinear >= stats.n:
        raise CollinearConfigurationError(
            "degree lower bounds assume a non-collinear configuration"
        )


def main_bound_check(stats: ArrangementStats) -> BoundEntry:
    """max_degree >= ceil(n/3) + 1 with the witness point index.

    This bound is a proven theorem for every non-collinear set: if it comes
    back unmet the arrangement code is wrong, not the input.
    """
    _require_noncollinear(stats)
    threshold = main_bound_threshold(stats.n)
    return BoundEntry(
        name="main_bound",
        threshold=Fraction(threshold),
        met=stats.max_degree >= threshold,
        witness_index=stats.witness_index,
    )


def bounds_report(stats: ArrangementStats) -> BoundsReport:
    """Evaluate max_degree against every threshold, exactly.

    The first four entries are proven results and must come back met; the
    dirac_floor entry is conjectural (counterexamples exist for some n) and
    is reported for information only.
    """
    _require_noncollinear(stats)
    n = stats.n
    d = stats.max_degree
    sqrt_threshold = Fraction(isqrt(n - 1) + 1)  # = ceil(sqrt(n)) for n >= 1
    entries = (
        BoundEntry("sqrt_bound", sqrt_threshold, d >= sqrt_threshold),
        BoundEntry("payne_wood", Fraction(n, 37), d >= Fraction(n, 37)),
        BoundEntry("pham_phi", Fraction(n, 26) + 2, d >= Fraction(n, 26) + 2),
        main_bound_check(stats),
        BoundEntry("dirac_floor", Fraction(n // 2), d >= n // 2, conjectural=True),
    )
    return BoundsReport(n=n, max_degree=d, entries=entries)
