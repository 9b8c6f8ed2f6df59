import json
from pathlib import Path

import pytest

from incidence_lab import Configuration, Point, build_arrangement

DATA = Path(__file__).parent / "data"


def load_golden(name: str) -> dict:
    return json.loads((DATA / name).read_text())


@pytest.fixture
def triangle() -> Configuration:
    return Configuration((Point(0, 0), Point(1, 0), Point(0, 1)), name="triangle")


@pytest.fixture
def grid33_stats():
    pts = [Point(x, y) for y in range(3) for x in range(3)]
    return build_arrangement(Configuration(tuple(pts)))
