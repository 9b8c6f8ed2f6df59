"""Regenerate the golden files in tests/data/ from the brute-force oracle.

Run manually (``python tests/regen_goldens.py``) only when the golden scope
changes.  The outputs are committed; the test suite reads them and never
regenerates.
"""

from __future__ import annotations

import json
from pathlib import Path

from oracle import oracle_arrangement, oracle_search

DATA = Path(__file__).parent / "data"


def _stats_golden(points: list[tuple[int, int]]) -> dict:
    out = oracle_arrangement([(x, y, 1) for x, y in points])
    out["points"] = [list(p) for p in points]
    out["histogram"] = {str(r): c for r, c in sorted(out["histogram"].items())}
    return out


def main() -> None:
    DATA.mkdir(exist_ok=True)

    goldens = {
        "stats_grid_3x3.json": _stats_golden(
            [(x, y) for y in range(3) for x in range(3)]
        ),
        "stats_two_parallel_k3.json": _stats_golden(
            [(i, 0) for i in range(3)] + [(i, 1) for i in range(3)]
        ),
        "stats_near_pencil_5.json": _stats_golden(
            [(i, 0) for i in range(4)] + [(0, 1)]
        ),
        "search_n4_g3.json": oracle_search(4, 3),
        "search_n6_g4.json": oracle_search(6, 4),
        "search_n3_g2.json": oracle_search(3, 2),
        "probe_g4.json": {
            "g": 4,
            "rows": [oracle_search(n, 4) for n in range(3, 9)],
        },
        "probe_n5_g3.json": oracle_search(5, 3),
    }
    for name, payload in goldens.items():
        path = DATA / name
        path.write_text(json.dumps(payload, indent=1, sort_keys=False) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
