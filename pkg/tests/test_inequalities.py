"""Verdict arithmetic, applicability rules, and bound thresholds."""

from fractions import Fraction

import pytest

from incidence_lab import (
    CollinearConfigurationError,
    Configuration,
    bojanowski_check,
    bounds_report,
    build_arrangement,
    corpus,
    degree_sum_check,
    hirzebruch_check,
    main_bound_check,
    main_bound_threshold,
    near_pencil,
    pigeonhole_bound,
    two_lines_parallel,
)


def stats_of(coords):
    return build_arrangement(Configuration.from_xy(coords))


TRIANGLE = [(0, 0), (1, 0), (0, 1)]
GRID33 = [(x, y) for y in range(3) for x in range(3)]


def test_hirzebruch_on_grid(grid33_stats):
    v = hirzebruch_check(grid33_stats)
    assert v.applicable  # 3 collinear <= 9 - 3
    assert (v.lhs_q, v.rhs_q, v.slack_q) == (72, 36, 36)
    assert v.satisfied


def test_hirzebruch_inapplicable_cases():
    near5 = build_arrangement(near_pencil(5))
    assert near5.max_collinear == 4  # > n - 3 = 2
    assert not hirzebruch_check(near5).applicable
    assert not hirzebruch_check(stats_of(TRIANGLE)).applicable  # n - 3 = 0


def test_bojanowski_cases(grid33_stats):
    assert bojanowski_check(grid33_stats).applicable
    assert bojanowski_check(grid33_stats).lhs_q == 72

    near6 = build_arrangement(near_pencil(6))
    assert near6.max_collinear == 5  # > floor(12/3) = 4
    assert not bojanowski_check(near6).applicable

    two6 = build_arrangement(two_lines_parallel(3))
    v = bojanowski_check(two6)
    assert v.applicable  # 3 <= 4
    assert (v.lhs_q, v.rhs_q) == (42, 24)
    assert v.satisfied


def test_degree_sum_cases(grid33_stats):
    tri = degree_sum_check(stats_of(TRIANGLE))
    assert tri.applicable
    assert (tri.lhs_q, tri.rhs_q, tri.slack_q) == (18, 18, 0)  # x3 units, equality
    assert tri.satisfied

    v = degree_sum_check(grid33_stats)
    assert (v.lhs_q, v.rhs_q) == (144, 108)
    assert v.satisfied

    assert not degree_sum_check(build_arrangement(near_pencil(6))).applicable


def test_main_bound_cases(grid33_stats):
    tri = main_bound_check(stats_of(TRIANGLE))
    assert tri.threshold == 2 and tri.met  # equality: max_degree = 2
    assert tri.witness_index == 0

    assert main_bound_check(grid33_stats).met  # 6 >= 4
    near5 = main_bound_check(build_arrangement(near_pencil(5)))
    assert near5.threshold == 3 and near5.met  # apex degree 4


def test_main_bound_rejects_collinear():
    with pytest.raises(CollinearConfigurationError):
        main_bound_check(stats_of([(0, 0), (1, 0), (2, 0)]))
    with pytest.raises(CollinearConfigurationError):
        bounds_report(stats_of([(0, 0), (1, 0), (2, 0)]))


def test_bounds_report_entries(grid33_stats):
    two6 = bounds_report(build_arrangement(two_lines_parallel(3)))
    assert two6.max_degree == 4
    assert two6.entry("sqrt_bound").threshold == 3 and two6.entry("sqrt_bound").met
    assert two6.entry("main_bound").threshold == 3 and two6.entry("main_bound").met
    assert two6.entry("dirac_floor").threshold == 3 and two6.entry("dirac_floor").met
    assert two6.entry("dirac_floor").conjectural

    tri = bounds_report(stats_of(TRIANGLE))
    assert tri.entry("sqrt_bound").threshold == 2
    assert tri.entry("dirac_floor").threshold == 1

    g = bounds_report(grid33_stats)
    assert all(e.met for e in g.entries)
    assert g.entry("payne_wood").threshold == Fraction(9, 37)
    assert g.entry("pham_phi").threshold == Fraction(9, 26) + 2


def test_threshold_arithmetic():
    assert main_bound_threshold(3) == 2
    assert main_bound_threshold(4) == 3
    assert main_bound_threshold(9) == 4
    # the proven thresholds dominate each other from n = 4 on
    for n in range(4, 200):
        main = main_bound_threshold(n)
        assert main >= Fraction(n, 26) + 2 >= Fraction(n, 37)


def test_quarter_units_recompute_independently(grid33_stats):
    # same sums accumulated in reverse histogram order must be identical
    hist = grid33_stats.histogram
    n = grid33_stats.n
    for check, rhs_term in (
        (hirzebruch_check, lambda r: 4 * (2 * r - 9)),
        (bojanowski_check, lambda r: r * r - 4 * r),
    ):
        v = check(grid33_stats)
        lhs = 3 * hist.get(3, 0) + 4 * hist.get(2, 0)
        rhs = sum(rhs_term(r) * c for r, c in sorted(hist.items(), reverse=True) if r >= 5)
        assert v.lhs_q == lhs
        assert v.rhs_q == 4 * n + rhs


def test_verdicts_on_corpus_slice():
    for config in corpus(seed=5, count=40, n_max=16):
        stats = build_arrangement(config)
        for verdict in (
            hirzebruch_check(stats),
            bojanowski_check(stats),
            degree_sum_check(stats),
        ):
            assert verdict.satisfied == (verdict.slack_q >= 0)
            if verdict.applicable:
                assert verdict.satisfied, (config.name, verdict)
        assert stats.max_degree >= pigeonhole_bound(stats)
