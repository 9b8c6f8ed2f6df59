"""Extremal searches over n-point subsets of a g x g integer grid.

The exhaustive mode visits every n-subset of the grid exactly once in
lexicographic cell-index order, skips collinear subsets, and minimizes the
maximum incident-line-number.  Work may be split over worker processes by
lexicographic rank ranges; the merge is commutative, so the serialized
result is byte-identical for any worker count.  Witness configurations are
deduplicated under the 8 grid symmetries and the lexicographically smallest
canonical forms are kept up to a cap, while the raw count of optimal
subsets is always exact.

The hill-climb mode is a seeded single-point-move local search with random
restarts inside an evaluation budget; it can only ever report a value at or
above the exhaustive minimum.

Nothing here proves anything beyond the grid at hand: the per-n probe table
is labeled grid-restricted evidence and must be read that way.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from . import _kernel
from .arrangement import Configuration, build_arrangement
from .errors import InvalidSearchSpecError, SearchSpaceTooLargeError
from .inequalities import main_bound_threshold

__all__ = [
    "HARD_CAP_DEFAULT",
    "WITNESS_CAP_DEFAULT",
    "SearchSpec",
    "SearchResult",
    "ProbeRow",
    "ProbeTable",
    "run_search",
    "dirac_smalln_probe",
    "grid_cells",
    "canonical_grid_form",
]

HARD_CAP_DEFAULT = 10_000_000
WITNESS_CAP_DEFAULT = 32
BUDGET_DEFAULT = 20_000

GridPoint = tuple[int, int]
GridForm = tuple[GridPoint, ...]


@dataclass(frozen=True, slots=True)
class SearchSpec:
    """Parameters of one search run."""

    n: int
    grid_size: int
    mode: str = "exhaustive"
    budget: int | None = None  # hill_climb evaluations
    seed: int | None = None  # hill_climb stream
    hard_cap: int = HARD_CAP_DEFAULT
    witness_cap: int = WITNESS_CAP_DEFAULT


@dataclass(frozen=True, slots=True)
class SearchResult:
    """Outcome of a search run.

    witnesses holds the lexicographically smallest canonical forms of
    optimal subsets, at most witness_cap of them; optima_count is the exact
    number of examined subsets attaining best_max_degree (before symmetry
    dedupe).
    """

    spec: SearchSpec
    best_max_degree: int
    witnesses: tuple[GridForm, ...]
    optima_count: int
    examined: int
    theorem_floor: int
    dirac_floor: int


@dataclass(frozen=True, slots=True)
class ProbeRow:
    n: int
    estimate: int
    feasible: bool
    dirac_floor: int
    min_max_degree: int | None
    met: bool | None


@dataclass(frozen=True, slots=True)
class ProbeTable:
    """Per-n exhaustive minima over a bounded grid; evidence, not proof."""

    g: int
    rows: tuple[ProbeRow, ...]
    note: str = "grid-restricted evidence"


def grid_cells(g: int) -> list[GridPoint]:
    """Cells of the g x g grid; index i maps to (i % g, i // g)."""
    return [(i % g, i // g) for i in range(g * g)]


def _symmetry_images(pts: GridForm, g: int):
    m = g - 1
    yield tuple(sorted(pts))
    yield tuple(sorted((y, m - x) for x, y in pts))
    yield tuple(sorted((m - x, m - y) for x, y in pts))
    yield tuple(sorted((m - y, x) for x, y in pts))
    yield tuple(sorted((m - x, y) for x, y in pts))
    yield tuple(sorted((x, m - y) for x, y in pts))
    yield tuple(sorted((y, x) for x, y in pts))
    yield tuple(sorted((m - y, m - x) for x, y in pts))


def canonical_grid_form(pts, g: int) -> GridForm:
    """Least point list among the 8 dihedral images: the witness dedupe key."""
    return min(_symmetry_images(tuple(pts), g))


def _unrank_combination(m: int, n: int, rank: int) -> list[int]:
    """The combination of rank ``rank`` in lexicographic order over C(m, n)."""
    combo = []
    x = 0
    for slots in range(n, 0, -1):
        while True:
            block = comb(m - 1 - x, slots - 1)
            if rank < block:
                break
            rank -= block
            x += 1
        combo.append(x)
        x += 1
    return combo


def _next_combination(combo: list[int], m: int) -> bool:
    """Advance to the lexicographic successor in place; False when exhausted."""
    n = len(combo)
    i = n - 1
    while i >= 0 and combo[i] == m - n + i:
        i -= 1
    if i < 0:
        return False
    combo[i] += 1
    for j in range(i + 1, n):
        combo[j] = combo[j - 1] + 1
    return True


class _Accumulator:
    """Running minimum with exact optima count and capped witness forms."""

    __slots__ = ("g", "cap", "best", "count", "forms", "examined")

    def __init__(self, g: int, cap: int):
        self.g = g
        self.cap = cap
        self.best: int | None = None
        self.count = 0
        self.forms: set[GridForm] = set()
        self.examined = 0

    def feed(self, degree: int, pts: GridForm) -> None:
        if self.best is None or degree < self.best:
            self.best = degree
            self.count = 0
            self.forms.clear()
        if degree == self.best:
            self.count += 1
            self.forms.add(canonical_grid_form(pts, self.g))
            if len(self.forms) > 4 * self.cap:
                # keep only candidates for the final cap-smallest set
                self.forms = set(sorted(self.forms)[: self.cap])

    def part(self) -> tuple:
        return (
            self.best,
            self.count,
            tuple(sorted(self.forms)[: self.cap]),
            self.examined,
        )


def _scan_chunk(args) -> tuple:
    """Evaluate one lexicographic rank range [start, start + count).

    Module-level and argument-picklable so it can run in worker processes.
    """
    g, n, start, count, witness_cap = args
    cells = grid_cells(g)
    m = len(cells)
    acc = _Accumulator(g, witness_cap)
    if count <= 0:
        return acc.part()
    combo = _unrank_combination(m, n, start)
    for _ in range(count):
        acc.examined += 1
        pts = tuple(cells[i] for i in combo)
        degree, is_collinear = _kernel.subset_stats(
            [p[0] for p in pts], [p[1] for p in pts]
        )
        if not is_collinear:
            acc.feed(degree, pts)
        if not _next_combination(combo, m):
            break
    return acc.part()


def _scan_debug(g: int, n: int, witness_cap: int) -> tuple:
    """Serial exhaustive scan that re-analyzes both members of every
    symmetry-class merge, guarding against a canonical form ever gluing
    together subsets of different max degree."""
    cells = grid_cells(g)
    acc = _Accumulator(g, witness_cap)
    reps: dict[GridForm, GridForm] = {}
    for combo in itertools.combinations(range(len(cells)), n):
        acc.examined += 1
        pts = tuple(cells[i] for i in combo)
        degree, is_collinear = _kernel.subset_stats(
            [p[0] for p in pts], [p[1] for p in pts]
        )
        if is_collinear:
            continue
        if acc.best is not None and degree == acc.best:
            form = canonical_grid_form(pts, g)
            other = reps.setdefault(form, pts)
            if other is not pts and _reanalyzed_degree(other) != _reanalyzed_degree(pts):
                raise AssertionError(
                    f"grid symmetry merged subsets of different degree: {other} vs {pts}"
                )
        elif acc.best is None or degree < acc.best:
            reps = {canonical_grid_form(pts, g): pts}
        acc.feed(degree, pts)
    return acc.part()


def _reanalyzed_degree(pts: GridForm) -> int:
    return build_arrangement(Configuration.from_xy(pts)).max_degree


def _merge_parts(parts, witness_cap: int) -> tuple:
    best = min((p[0] for p in parts if p[0] is not None), default=None)
    examined = sum(p[3] for p in parts)
    if best is None:
        return None, 0, (), examined
    count = sum(p[1] for p in parts if p[0] == best)
    forms: set[GridForm] = set()
    for p in parts:
        if p[0] == best:
            forms.update(p[2])
    return best, count, tuple(sorted(forms)[:witness_cap]), examined


def _resolve_workers(workers: int | None) -> int:
    if workers is not None:
        if workers < 1:
            raise InvalidSearchSpecError(f"workers must be >= 1, got {workers}")
        return workers
    env = os.environ.get("INCIDENCE_LAB_THREADS")
    if env:
        try:
            cap = int(env)
        except ValueError:
            raise InvalidSearchSpecError(
                f"INCIDENCE_LAB_THREADS must be an integer, got {env!r}"
            ) from None
        if cap >= 1:
            return cap
    return 1


def _validate(spec: SearchSpec) -> None:
    if spec.n < 3:
        raise InvalidSearchSpecError(f"need n >= 3, got {spec.n}")
    if spec.grid_size < 2:
        raise InvalidSearchSpecError(f"need grid size >= 2, got {spec.grid_size}")
    if spec.n > spec.grid_size**2:
        raise InvalidSearchSpecError(
            f"{spec.n} points do not fit in a {spec.grid_size}x{spec.grid_size} grid"
        )
    if spec.mode not in ("exhaustive", "hill_climb"):
        raise InvalidSearchSpecError(f"unknown mode {spec.mode!r}")
    if spec.witness_cap < 1:
        raise InvalidSearchSpecError("witness_cap must be >= 1")


def run_search(
    spec: SearchSpec, workers: int | None = None, debug: bool = False
) -> SearchResult:
    """Run one search; deterministic for a fixed spec, whatever the worker count.

    Exhaustive mode refuses upfront (with the subset-count estimate) when
    C(g^2, n) exceeds spec.hard_cap.  debug currently implies a serial scan.
    """
    _validate(spec)
    nworkers = _resolve_workers(workers)

    if spec.mode == "exhaustive":
        total = comb(spec.grid_size**2, spec.n)
        if total > spec.hard_cap:
            raise SearchSpaceTooLargeError(estimate=total, cap=spec.hard_cap)
        if debug:
            parts = [_scan_debug(spec.grid_size, spec.n, spec.witness_cap)]
        else:
            tasks = _chunk_tasks(spec, total, nworkers)
            if len(tasks) == 1:
                parts = [_scan_chunk(tasks[0])]
            else:
                with ProcessPoolExecutor(max_workers=nworkers) as pool:
                    parts = list(pool.map(_scan_chunk, tasks))
    else:
        parts = [_hill_climb(spec)]

    best, count, witnesses, examined = _merge_parts(parts, spec.witness_cap)
    if best is None:
        raise InvalidSearchSpecError(
            "search space contains no non-collinear subset"
        )
    return SearchResult(
        spec=spec,
        best_max_degree=best,
        witnesses=witnesses,
        optima_count=count,
        examined=examined,
        theorem_floor=main_bound_threshold(spec.n),
        dirac_floor=spec.n // 2,
    )


def _chunk_tasks(spec: SearchSpec, total: int, nworkers: int) -> list[tuple]:
    bounds = [i * total // nworkers for i in range(nworkers + 1)]
    return [
        (spec.grid_size, spec.n, lo, hi - lo, spec.witness_cap)
        for lo, hi in zip(bounds, bounds[1:])
        if hi > lo
    ]


def _hill_climb(spec: SearchSpec) -> tuple:
    """Seeded first-improvement local search with random restarts.

    Runs serially regardless of the worker setting so that results depend
    on the seed alone.
    """
    g, n = spec.grid_size, spec.n
    cells = grid_cells(g)
    m = len(cells)
    budget = spec.budget if spec.budget is not None else BUDGET_DEFAULT
    if budget < 1:
        raise InvalidSearchSpecError(f"budget must be >= 1, got {budget}")
    rng = random.Random(spec.seed if spec.seed is not None else 0)
    acc = _Accumulator(g, spec.witness_cap)

    def evaluate(indices: list[int]) -> int | None:
        acc.examined += 1
        pts = tuple(cells[i] for i in indices)
        degree, is_collinear = _kernel.subset_stats(
            [p[0] for p in pts], [p[1] for p in pts]
        )
        if is_collinear:
            return None
        acc.feed(degree, pts)
        return degree

    while acc.examined < budget:
        current = sorted(rng.sample(range(m), n))
        degree = evaluate(current)
        if degree is None:
            continue
        improved = True
        while improved and acc.examined < budget:
            improved = False
            chosen = set(current)
            for pos in range(n):
                for cell in range(m):
                    if cell in chosen:
                        continue
                    if acc.examined >= budget:
                        break
                    candidate = sorted(current[:pos] + current[pos + 1 :] + [cell])
                    cand_degree = evaluate(candidate)
                    if cand_degree is not None and cand_degree < degree:
                        current, degree = candidate, cand_degree
                        improved = True
                        break
                if improved or acc.examined >= budget:
                    break
    return acc.part()


def dirac_smalln_probe(
    n_max: int,
    g: int,
    hard_cap: int = HARD_CAP_DEFAULT,
    workers: int | None = None,
) -> ProbeTable:
    """Exhaustive per-n minima of max_degree over the g x g grid, 3 <= n <= n_max.

    Each row reports whether the grid minimum meets floor(n/2); infeasible
    sizes (subset count over hard_cap) are refused per n with the estimate.
    This is evidence restricted to one grid, never a proof.
    """
    if n_max < 3:
        raise InvalidSearchSpecError(f"need n_max >= 3, got {n_max}")
    if g < 2:
        raise InvalidSearchSpecError(f"need grid size >= 2, got {g}")
    rows = []
    for n in range(3, n_max + 1):
        estimate = comb(g * g, n) if n <= g * g else 0
        floor = n // 2
        if n > g * g or estimate > hard_cap:
            rows.append(
                ProbeRow(
                    n=n,
                    estimate=estimate,
                    feasible=False,
                    dirac_floor=floor,
                    min_max_degree=None,
                    met=None,
                )
            )
            continue
        result = run_search(
            SearchSpec(n=n, grid_size=g, hard_cap=hard_cap), workers=workers
        )
        rows.append(
            ProbeRow(
                n=n,
                estimate=estimate,
                feasible=True,
                dirac_floor=floor,
                min_max_degree=result.best_max_degree,
                met=result.best_max_degree >= floor,
            )
        )
    return ProbeTable(g=g, rows=tuple(rows))
