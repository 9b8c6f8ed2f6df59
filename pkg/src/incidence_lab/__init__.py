"""Exact toolkit for the lines determined by a planar point set.

Builds the full arrangement statistics of a finite point configuration
(r-rich line counts, per-point incident-line-numbers), checks the classical
double-counting identities and Hirzebruch-type inequalities exactly, and
searches small integer grids for configurations of minimal maximum degree.
All geometric decisions use arbitrary-precision integer arithmetic.
"""

from ._kernel import backend_name as kernel_backend, has_compiled
from .arrangement import (
    ArrangementStats,
    Configuration,
    IdentityReport,
    build_arrangement,
    is_noncollinear,
    verify_degree_identity,
    verify_pair_identity,
)
from .errors import (
    CollinearConfigurationError,
    DegeneratePairError,
    DuplicatePointsError,
    IncidenceLabError,
    InvalidFamilySpecError,
    InvalidLineError,
    InvalidPointError,
    InvalidSearchSpecError,
    PointFileError,
    SearchSpaceTooLargeError,
    TooFewPointsError,
)
from .geometry import Line, Point, collinear, incident, line_through, point_from_rational
from .generators import (
    FamilySpec,
    corpus,
    family_instances,
    generate,
    grid,
    near_pencil,
    random_corpus,
    random_integer,
    two_lines_crossing,
    two_lines_parallel,
)
from .inequalities import (
    BoundEntry,
    BoundsReport,
    InequalityVerdict,
    bojanowski_check,
    bounds_report,
    degree_sum_check,
    hirzebruch_check,
    main_bound_check,
    main_bound_threshold,
    pigeonhole_bound,
)
from .pointfile import load_point_file, parse_points, write_point_file
from .report import (
    Analysis,
    analyze_configuration,
    dumps_document,
    probe_document,
    proven_checks_pass,
    report_document,
    search_document,
)
from .search import (
    ProbeRow,
    ProbeTable,
    SearchResult,
    SearchSpec,
    dirac_smalln_probe,
    run_search,
)
from .svgplot import render_svg

__version__ = "0.1.0"
