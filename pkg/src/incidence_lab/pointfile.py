"""The plain-text point file format.

One point per line: two whitespace-separated coordinates, each an ASCII
integer or a fraction "p/q" with q > 0.  "#" starts a comment, blank lines
are ignored.  Parsing is locale-independent by construction (only ASCII
digits, '-' and '/' are accepted) and reports 1-based line numbers on every
failure, including both lines of a duplicate point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from io import StringIO

from .arrangement import Configuration
from .errors import PointFileError
from .geometry import Point, point_from_rational

__all__ = ["parse_points", "load_point_file", "format_point", "write_point_file"]

_COORD = re.compile(r"-?[0-9]+(?:/([0-9]+))?\Z")


def _parse_coord(token: str, lineno: int) -> Fraction:
    match = _COORD.match(token)
    if match is None:
        raise PointFileError(
            f"line {lineno}: bad coordinate {token!r} (expected integer or p/q)",
            lines=(lineno,),
        )
    if match.group(1) is None:
        return Fraction(int(token))
    num, den = token.split("/")
    if int(den) == 0:
        raise PointFileError(
            f"line {lineno}: zero denominator in {token!r}", lines=(lineno,)
        )
    return Fraction(int(num), int(den))


def parse_points(text: str, name: str | None = None) -> Configuration:
    """Parse point-file text into a Configuration."""
    points: list[Point] = []
    first_line: dict[Point, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise PointFileError(
                f"line {lineno}: expected two coordinates, got {len(tokens)}",
                lines=(lineno,),
            )
        p = point_from_rational(
            _parse_coord(tokens[0], lineno), _parse_coord(tokens[1], lineno)
        )
        if p in first_line:
            raise PointFileError(
                f"line {lineno}: duplicate of point {p} on line {first_line[p]}",
                lines=(first_line[p], lineno),
            )
        first_line[p] = lineno
        points.append(p)
    return Configuration(tuple(points), name=name)


def load_point_file(path, name: str | None = None) -> Configuration:
    """Parse the file at ``path``; the path itself is not echoed as a name,
    so reports stay byte-identical wherever the file lives."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_points(text, name=name)


def format_point(p: Point) -> str:
    """One point-file line: exact affine coordinates, fractions reduced."""
    x, y = p.affine()
    return f"{x} {y}"


def write_point_file(config: Configuration, header: list[str] | None = None) -> str:
    """Render a Configuration as point-file text (with optional comments)."""
    out = StringIO()
    for line in header or ():
        out.write(f"# {line}\n")
    for p in config.points:
        out.write(format_point(p) + "\n")
    return out.getvalue()
