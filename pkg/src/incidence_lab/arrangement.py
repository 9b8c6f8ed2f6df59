"""Build the set of determined lines and every statistic derived from it.

Given a configuration of n >= 2 distinct points, the O(n^2) pair pass groups
point indices by canonical line, which yields in one sweep: the r-rich line
histogram l_r, the per-point incident-line-numbers d(P), the largest
collinear subset size, and the maximum-degree witness.  Two exact
double-counting identities tie these quantities together and are exposed as
checkable reports:

    sum_r C(r, 2) * l_r = C(n, 2)         (every point pair spans one line)
    sum_P d(P)          = sum_r r * l_r   (each r-rich line is counted r times)
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from .errors import DuplicatePointsError, TooFewPointsError
from .geometry import Line, Point, collinear, line_through

__all__ = [
    "Configuration",
    "ArrangementStats",
    "IdentityReport",
    "build_arrangement",
    "is_noncollinear",
    "verify_pair_identity",
    "verify_degree_identity",
]


@dataclass(frozen=True, slots=True)
class Configuration:
    """An ordered list of pairwise-distinct points."""

    points: tuple[Point, ...]
    name: str | None = None

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        seen: dict[Point, int] = {}
        for i, p in enumerate(pts):
            j = seen.setdefault(p, i)
            if j != i:
                raise DuplicatePointsError(
                    f"point {p} appears at indices {j} and {i}", indices=(j, i)
                )

    @classmethod
    def from_xy(cls, coords, name: str | None = None) -> "Configuration":
        """Configuration from (x, y) integer pairs."""
        return cls(tuple(Point(x, y) for x, y in coords), name=name)

    @property
    def n(self) -> int:
        return len(self.points)


@dataclass(frozen=True, slots=True)
class ArrangementStats:
    """Complete line statistics of one configuration.

    lines holds (canonical line, sorted incident point indices) in canonical
    (a, b, c) lexicographic order; histogram maps r to l_r for the r that
    occur; degrees[i] is d(P_i).
    """

    n: int
    lines: tuple[tuple[Line, tuple[int, ...]], ...]
    histogram: dict[int, int]
    degrees: tuple[int, ...]
    max_collinear: int
    max_degree: int
    witness_index: int

    def l(self, r: int) -> int:
        """The number of r-rich lines."""
        return self.histogram.get(r, 0)

    @property
    def line_count(self) -> int:
        return len(self.lines)

    @property
    def degree_sum(self) -> int:
        return sum(self.degrees)


@dataclass(frozen=True, slots=True)
class IdentityReport:
    """Two exactly-computed sides of an identity that must agree."""

    label: str
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def build_arrangement(config: Configuration) -> ArrangementStats:
    """Enumerate all point pairs and derive the full arrangement statistics.

    Deterministic: the line list is ordered by canonical (a, b, c) triple,
    member indices ascending.
    """
    pts = config.points
    n = len(pts)
    if n < 2:
        raise TooFewPointsError(f"need at least 2 points, got {n}")

    groups: dict[Line, list[int]] = {}
    for i in range(n):
        pi = pts[i]
        for j in range(i + 1, n):
            line = line_through(pi, pts[j])
            members = groups.get(line)
            if members is None:
                groups[line] = [i, j]
            elif members[-1] < j:
                # pairs arrive with ascending j, so the group for a line is
                # completed while i is its least member; later pairs repeat it
                members.append(j)

    ordered = tuple(
        (line, tuple(members)) for line, members in sorted(groups.items())
    )
    degrees = [0] * n
    for _, members in ordered:
        for i in members:
            degrees[i] += 1
    histogram = dict(sorted(Counter(len(m) for _, m in ordered).items()))
    max_degree = max(degrees)
    return ArrangementStats(
        n=n,
        lines=ordered,
        histogram=histogram,
        degrees=tuple(degrees),
        max_collinear=max(len(m) for _, m in ordered),
        max_degree=max_degree,
        witness_index=degrees.index(max_degree),
    )


def is_noncollinear(config: Configuration) -> bool:
    """True iff the points do not all lie on one line (needs n >= 2)."""
    pts = config.points
    if len(pts) < 2:
        raise TooFewPointsError(f"need at least 2 points, got {len(pts)}")
    p, q = pts[0], pts[1]
    return any(not collinear(p, q, r) for r in pts[2:])


def verify_pair_identity(stats: ArrangementStats) -> IdentityReport:
    """Double-counting of point pairs: sum_r C(r, 2) * l_r against C(n, 2).

    The two sides must be exactly equal for any point set; inequality
    signals an internal bug, never a property of the input.
    """
    lhs = sum(comb(r, 2) * c for r, c in stats.histogram.items())
    return IdentityReport("lemma1", lhs, comb(stats.n, 2))


def verify_degree_identity(stats: ArrangementStats) -> IdentityReport:
    """Degree sum against sum_r r * l_r; exact equality required."""
    rhs = sum(r * c for r, c in stats.histogram.items())
    return IdentityReport("lemma2", stats.degree_sum, rhs)
