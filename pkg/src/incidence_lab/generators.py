"""Named configuration families and the reproducible test corpus.

All families live on integer coordinates so every generated configuration
keeps the exact-arithmetic contract (regular polygons are deliberately
absent: their coordinates are irrational in general).  The two-line family
is the classical tight example for degree lower bounds: n points split over
two lines give every point degree n/2 + 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .arrangement import Configuration, is_noncollinear
from .errors import InvalidFamilySpecError
from .geometry import Point

__all__ = [
    "FamilySpec",
    "FAMILIES",
    "generate",
    "two_lines_parallel",
    "two_lines_crossing",
    "near_pencil",
    "grid",
    "random_integer",
    "family_instances",
    "random_corpus",
    "corpus",
]

FAMILIES = (
    "two_lines_parallel",
    "two_lines_crossing",
    "near_pencil",
    "grid",
    "random_integer",
)


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameters (see ``generate``)."""

    family: str
    parameters: dict = field(default_factory=dict)


def two_lines_parallel(k: int) -> Configuration:
    """k points on each of y = 0 and y = 1; n = 2k."""
    if k < 2:
        raise InvalidFamilySpecError(f"two_lines_parallel needs k >= 2, got {k}")
    pts = [Point(i, 0) for i in range(k)] + [Point(i, 1) for i in range(k)]
    return Configuration(tuple(pts), name=f"two_lines_parallel(k={k})")


def two_lines_crossing(k: int, include_intersection: bool = False) -> Configuration:
    """k points on each of y = 0 and x = 0.

    With include_intersection the origin is shared by both lines (n = 2k-1),
    otherwise the origin is skipped (n = 2k).
    """
    if k < 2:
        raise InvalidFamilySpecError(f"two_lines_crossing needs k >= 2, got {k}")
    if include_intersection:
        pts = [Point(i, 0) for i in range(k)] + [Point(0, j) for j in range(1, k)]
    else:
        pts = [Point(i, 0) for i in range(1, k + 1)] + [
            Point(0, j) for j in range(1, k + 1)
        ]
    tag = "shared" if include_intersection else "disjoint"
    return Configuration(tuple(pts), name=f"two_lines_crossing(k={k},{tag})")


def near_pencil(n: int) -> Configuration:
    """n - 1 collinear points plus one apex off the line."""
    if n < 3:
        raise InvalidFamilySpecError(f"near_pencil needs n >= 3, got {n}")
    pts = [Point(i, 0) for i in range(n - 1)] + [Point(0, 1)]
    return Configuration(tuple(pts), name=f"near_pencil(n={n})")


def grid(width: int, height: int) -> Configuration:
    """All integer points of the width x height box, row by row."""
    if width < 2 or height < 2:
        raise InvalidFamilySpecError(
            f"grid needs width, height >= 2, got {width}x{height}"
        )
    pts = [Point(x, y) for y in range(height) for x in range(width)]
    return Configuration(tuple(pts), name=f"grid({width},{height})")


def random_integer(n: int, coord_range: int, seed: int) -> Configuration:
    """n distinct points with coordinates uniform in [-coord_range, coord_range].

    Deterministic for a fixed seed (Mersenne-Twister stream).  Collinearity
    is not guaranteed either way; ``corpus`` filters as needed.
    """
    if n < 2:
        raise InvalidFamilySpecError(f"random_integer needs n >= 2, got {n}")
    if coord_range < 1 or (2 * coord_range + 1) ** 2 < n:
        raise InvalidFamilySpecError(
            f"coordinate range {coord_range} cannot host {n} distinct points"
        )
    rng = random.Random(seed)
    pts: list[Point] = []
    seen: set[Point] = set()
    while len(pts) < n:
        p = Point(
            rng.randint(-coord_range, coord_range),
            rng.randint(-coord_range, coord_range),
        )
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return Configuration(
        tuple(pts), name=f"random_integer(n={n},range={coord_range},seed={seed})"
    )


def generate(spec: FamilySpec) -> Configuration:
    """Dispatch a FamilySpec to its family constructor."""
    params = dict(spec.parameters)
    try:
        if spec.family == "two_lines_parallel":
            return two_lines_parallel(params.pop("k"))
        if spec.family == "two_lines_crossing":
            return two_lines_crossing(
                params.pop("k"), params.pop("include_intersection", False)
            )
        if spec.family == "near_pencil":
            return near_pencil(params.pop("n"))
        if spec.family == "grid":
            return grid(params.pop("width"), params.pop("height"))
        if spec.family == "random_integer":
            return random_integer(
                params.pop("n"), params.pop("coord_range"), params.pop("seed")
            )
    except KeyError as exc:
        raise InvalidFamilySpecError(
            f"family {spec.family!r} is missing parameter {exc.args[0]!r}"
        ) from None
    raise InvalidFamilySpecError(
        f"unknown family {spec.family!r}; expected one of {FAMILIES}"
    )


def family_instances(n_max: int) -> list[Configuration]:
    """All small named-family instances with n <= n_max, deterministic order."""
    out: list[Configuration] = []
    k = 2
    while 2 * k <= n_max:
        out.append(two_lines_parallel(k))
        k += 1
    k = 2
    while 2 * k - 1 <= n_max:
        out.append(two_lines_crossing(k, include_intersection=True))
        if 2 * k <= n_max:
            out.append(two_lines_crossing(k, include_intersection=False))
        k += 1
    for n in range(3, n_max + 1):
        out.append(near_pencil(n))
    for w in range(2, n_max + 1):
        for h in range(w, n_max + 1):
            if w * h <= n_max:
                out.append(grid(w, h))
    return out


def random_corpus(seed: int, count: int, n_max: int) -> list[Configuration]:
    """``count`` seeded random non-collinear configurations, 3 <= n <= n_max.

    Collinear draws are discarded and redrawn; coordinates span
    [-1000, 1000].
    """
    rng = random.Random(seed)
    out: list[Configuration] = []
    while len(out) < count:
        n = rng.randint(3, n_max)
        cfg = random_integer(n, 1000, seed=rng.randrange(2**32))
        if is_noncollinear(cfg):
            out.append(cfg)
    return out


def corpus(seed: int, count: int, n_max: int) -> list[Configuration]:
    """A reproducible mixed corpus of exactly ``count`` configurations.

    The pool is every small family instance with n <= n_max plus as many
    seeded random configurations; a seed-determined shuffle picks the mix,
    so distinct seeds give distinct corpora with overwhelming likelihood.
    Every configuration is non-collinear.
    """
    if count < 1 or n_max < 3:
        raise InvalidFamilySpecError(
            f"corpus needs count >= 1 and n_max >= 3, got {count}, {n_max}"
        )
    pool = [c for c in family_instances(n_max) if is_noncollinear(c)]
    pool.extend(random_corpus(seed, count, n_max))
    random.Random(seed).shuffle(pool)
    return pool[:count]
