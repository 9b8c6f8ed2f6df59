"""Independent brute-force oracle for arrangement statistics and grid searches.

Everything here is deliberately dumb and self-contained: lines are recovered
as member-index sets by testing every point against every pair via a raw
3x3 homogeneous determinant.  No code from ``incidence_lab`` is imported, so
these results stay an independent cross-check of the production path.
"""

from __future__ import annotations

import itertools
from collections import Counter

Triple = tuple[int, int, int]


def det3(p: Triple, q: Triple, r: Triple) -> int:
    """Exact 3x3 determinant of three homogeneous integer triples."""
    x1, y1, w1 = p
    x2, y2, w2 = q
    x3, y3, w3 = r
    return (
        x1 * (y2 * w3 - w2 * y3)
        - y1 * (x2 * w3 - w2 * x3)
        + w1 * (x2 * y3 - y2 * x3)
    )


def oracle_arrangement(points: list[Triple]) -> dict:
    """Full line statistics for distinct homogeneous points, by brute force.

    For every pair (i, j) the incident member set {k : det(p_i, p_j, p_k) = 0}
    is collected; distinct member sets are distinct lines (two distinct lines
    share at most one point, so equal sets of size >= 2 mean equal lines).
    """
    n = len(points)
    groups: set[frozenset[int]] = set()
    for i, j in itertools.combinations(range(n), 2):
        members = frozenset(
            k for k in range(n) if det3(points[i], points[j], points[k]) == 0
        )
        groups.add(members)
    lines = sorted(sorted(g) for g in groups)
    degrees = [sum(1 for g in groups if i in g) for i in range(n)]
    histogram = dict(Counter(len(g) for g in groups))
    max_collinear = max(len(g) for g in groups) if groups else 0
    max_degree = max(degrees) if degrees else 0
    return {
        "n": n,
        "lines": lines,
        "histogram": histogram,
        "degrees": degrees,
        "max_collinear": max_collinear,
        "max_degree": max_degree,
        "witness_index": degrees.index(max_degree) if degrees else None,
    }


def grid_points(g: int) -> list[tuple[int, int]]:
    """Cells of the g x g grid; cell index i maps to (x, y) = (i % g, i // g)."""
    return [(i % g, i // g) for i in range(g * g)]


def symmetry_images(
    pts: tuple[tuple[int, int], ...], g: int
) -> list[tuple[tuple[int, int], ...]]:
    """The 8 dihedral images of a point set inside the g x g grid."""
    m = g - 1
    out = []
    for f in (
        lambda x, y: (x, y),
        lambda x, y: (y, m - x),
        lambda x, y: (m - x, m - y),
        lambda x, y: (m - y, x),
        lambda x, y: (m - x, y),
        lambda x, y: (x, m - y),
        lambda x, y: (y, x),
        lambda x, y: (m - y, m - x),
    ):
        out.append(tuple(sorted(f(x, y) for x, y in pts)))
    return out


def canonical_form(
    pts: tuple[tuple[int, int], ...], g: int
) -> tuple[tuple[int, int], ...]:
    """Lexicographically least dihedral image; the dedupe key for witnesses."""
    return min(symmetry_images(pts, g))


def oracle_search(n: int, g: int, witness_cap: int = 32) -> dict:
    """Exhaustive minimum of max_degree over all non-collinear n-subsets."""
    cells = grid_points(g)
    best = None
    optima_count = 0
    examined = 0
    witness_forms: set[tuple[tuple[int, int], ...]] = set()
    for combo in itertools.combinations(range(g * g), n):
        examined += 1
        pts = tuple(cells[i] for i in combo)
        stats = oracle_arrangement([(x, y, 1) for x, y in pts])
        if stats["max_collinear"] == n:
            continue
        d = stats["max_degree"]
        if best is None or d < best:
            best = d
            optima_count = 0
            witness_forms.clear()
        if d == best:
            optima_count += 1
            witness_forms.add(canonical_form(pts, g))
    return {
        "n": n,
        "g": g,
        "examined": examined,
        "best_max_degree": best,
        "optima_count": optima_count,
        "witness_classes": len(witness_forms),
        "witnesses": [
            [list(p) for p in w] for w in sorted(witness_forms)[:witness_cap]
        ],
        "witness_cap": witness_cap,
    }
