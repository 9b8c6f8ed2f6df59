"""Exact planar primitives: canonical homogeneous points and lines.

All coordinates are arbitrary-precision integers and every predicate is
decided exactly; no floating point enters any geometric decision.  A point
is a gcd-reduced homogeneous triple (x, y, w) with w > 0, sitting at the
affine position (x/w, y/w).  A line is a gcd-reduced triple (a, b, c) for
the locus a*x + b*y + c*w = 0, with the sign fixed so that the first
nonzero entry is positive.  Both canonical forms make structural equality
coincide with geometric equality, so points and lines work directly as
dictionary keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DegeneratePairError, InvalidLineError, InvalidPointError

__all__ = [
    "Point",
    "Line",
    "point_from_rational",
    "line_through",
    "incident",
    "collinear",
]


@dataclass(frozen=True, slots=True, order=True)
class Point:
    """A planar point as a canonical homogeneous integer triple."""

    x: int
    y: int
    w: int = 1

    def __post_init__(self):
        x, y, w = self.x, self.y, self.w
        if w == 0:
            raise InvalidPointError("homogeneous denominator w must be nonzero")
        g = gcd(x, y, w)
        if w < 0:
            g = -g
        if g != 1:
            object.__setattr__(self, "x", x // g)
            object.__setattr__(self, "y", y // g)
            object.__setattr__(self, "w", w // g)

    def affine(self) -> tuple[Fraction, Fraction]:
        """The exact affine position (x/w, y/w)."""
        return Fraction(self.x, self.w), Fraction(self.y, self.w)

    def __str__(self) -> str:
        return f"({Fraction(self.x, self.w)}, {Fraction(self.y, self.w)})"


@dataclass(frozen=True, slots=True, order=True)
class Line:
    """A line a*x + b*y + c*w = 0 as a sign-canonical integer triple."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if a == 0 and b == 0:
            raise InvalidLineError("(a, b) = (0, 0) does not describe a line")
        g = gcd(a, b, c)
        # first nonzero of (a, b, c) must come out positive
        if a < 0 or (a == 0 and b < 0):
            g = -g
        if g != 1:
            object.__setattr__(self, "a", a // g)
            object.__setattr__(self, "b", b // g)
            object.__setattr__(self, "c", c // g)


def point_from_rational(px, py) -> Point:
    """Build the canonical Point at the exact rational position (px, py).

    Accepts int, Fraction, or an (numerator, denominator) pair for either
    coordinate.  Floats are rejected: rounding would corrupt every count
    downstream.
    """
    fx = _as_fraction(px)
    fy = _as_fraction(py)
    w = fx.denominator * fy.denominator // gcd(fx.denominator, fy.denominator)
    return Point(fx.numerator * (w // fx.denominator),
                 fy.numerator * (w // fy.denominator),
                 w)


def _as_fraction(value) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, Fraction, tuple)):
        raise InvalidPointError(f"coordinate must be exact (int or Fraction), got {value!r}")
    if isinstance(value, tuple):
        num, den = value
        if den == 0:
            raise InvalidPointError("zero denominator in rational coordinate")
        return Fraction(num, den)
    return Fraction(value)


def line_through(p: Point, q: Point) -> Line:
    """The canonical line through two distinct points (their cross product)."""
    if p == q:
        raise DegeneratePairError(f"no unique line through the single point {p}")
    return Line(
        p.y * q.w - p.w * q.y,
        p.w * q.x - p.x * q.w,
        p.x * q.y - p.y * q.x,
    )


def incident(line: Line, p: Point) -> bool:
    """True iff p lies exactly on the line."""
    return line.a * p.x + line.b * p.y + line.c * p.w == 0


def collinear(p: Point, q: Point, r: Point) -> bool:
    """True iff the three points lie on one line (duplicates count as collinear).

    Decided by the exact 3x3 determinant of the homogeneous triples.
    """
    return (
        p.x * (q.y * r.w - q.w * r.y)
        - p.y * (q.x * r.w - q.w * r.x)
        + p.w * (q.x * r.y - q.y * r.x)
    ) == 0
