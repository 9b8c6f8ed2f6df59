"""Pure-Python subset kernel: the fallback backend for grid searches.

For a subset of pairwise-distinct integer points, the number of determined
lines through point P equals the number of distinct reduced directions from
P to the other points, so the maximum degree falls out of an O(n^2)
direction-dedupe pass without building any line objects.
"""

from __future__ import annotations

from math import gcd

BACKEND = "pure-python"


def subset_stats(xs, ys) -> tuple[int, bool]:
    """(max_degree, collinear) for distinct integer points (w = 1).

    collinear means all points lie on a single line; max_degree is 0 for
    n < 2.  Exact for arbitrarily large coordinates.
    """
    n = len(xs)
    best = 0
    first = 0
    for i in range(n):
        xi = xs[i]
        yi = ys[i]
        dirs = set()
        for j in range(n):
            if j == i:
                continue
            dx = xs[j] - xi
            dy = ys[j] - yi
            g = gcd(dx, dy)
            dx //= g
            dy //= g
            if dx < 0 or (dx == 0 and dy < 0):
                dx = -dx
                dy = -dy
            dirs.add((dx, dy))
        d = len(dirs)
        if i == 0:
            first = d
            if first == 1:
                # one direction from the first point covers every other
                # point: the whole subset is collinear
                return 1, True
        if d > best:
            best = d
    return best, n < 2
