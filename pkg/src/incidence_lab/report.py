"""Analysis bundles and their JSON documents.

Documents are plain dicts with a fixed, documented key order (insertion
order is preserved through serialization) so repeated runs are
byte-identical.  Integers are unbounded: values outside the signed 64-bit
range are serialized as decimal strings, everything else as JSON numbers;
exact rational thresholds are serialized as fraction strings ("5/2", "3").
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import (
    ArrangementStats,
    Configuration,
    IdentityReport,
    build_arrangement,
    verify_degree_identity,
    verify_pair_identity,
)
from .inequalities import (
    BoundsReport,
    InequalityVerdict,
    bojanowski_check,
    bounds_report,
    degree_sum_check,
    hirzebruch_check,
    meets_strict_collinearity,
)

__all__ = [
    "Analysis",
    "analyze_configuration",
    "proven_checks_pass",
    "report_document",
    "search_document",
    "probe_document",
    "dumps_document",
]

SCHEMA_VERSION = "1"

_I64_MIN = -(2**63)
_I64_MAX = 2**63 - 1


@dataclass(frozen=True, slots=True)
class Analysis:
    """Everything the report knows about one configuration."""

    config: Configuration
    stats: ArrangementStats
    lemma1: IdentityReport
    lemma2: IdentityReport
    hirzebruch: InequalityVerdict
    bojanowski: InequalityVerdict
    degree_sum: InequalityVerdict
    strict_hypothesis: bool
    noncollinear: bool
    bounds: BoundsReport | None  # None when the input is collinear


def analyze_configuration(config: Configuration) -> Analysis:
    """Run the full pipeline: stats, identities, verdicts, degree bounds."""
    stats = build_arrangement(config)
    noncollinear = stats.max_collinear < stats.n
    return Analysis(
        config=config,
        stats=stats,
        lemma1=verify_pair_identity(stats),
        lemma2=verify_degree_identity(stats),
        hirzebruch=hirzebruch_check(stats),
        bojanowski=bojanowski_check(stats),
        degree_sum=degree_sum_check(stats),
        strict_hypothesis=meets_strict_collinearity(stats),
        noncollinear=noncollinear,
        bounds=bounds_report(stats) if noncollinear else None,
    )


def proven_checks_pass(analysis: Analysis) -> bool:
    """True iff every proven identity, inequality, and bound holds.

    A False here is a bug sentinel: the mathematics is proven, so only an
    implementation defect can fail it.  Conjectural entries never count.
    """
    if not (analysis.lemma1.equal and analysis.lemma2.equal):
        return False
    for verdict in (analysis.hirzebruch, analysis.bojanowski, analysis.degree_sum):
        if verdict.applicable and not verdict.satisfied:
            return False
    if analysis.bounds is not None:
        for entry in analysis.bounds.entries:
            if not entry.conjectural and not entry.met:
                return False
    return True


def _identity_doc(report: IdentityReport) -> dict:
    return {"lhs": report.lhs, "rhs": report.rhs, "equal": report.equal}


def _verdict_doc(verdict: InequalityVerdict) -> dict:
    return {
        "applicable": verdict.applicable,
        "satisfied": verdict.satisfied,
        "lhs_q": verdict.lhs_q,
        "rhs_q": verdict.rhs_q,
        "slack_q": verdict.slack_q,
    }


def report_document(analysis: Analysis) -> dict:
    """The analyze/verify JSON document; see README for the schema."""
    stats = analysis.stats
    degree_sum_doc = _verdict_doc(analysis.degree_sum)
    degree_sum_doc["strict_hypothesis"] = analysis.strict_hypothesis
    doc = {
        "schema_version": SCHEMA_VERSION,
        "configuration": {
            "n": stats.n,
            "name": analysis.config.name,
            "points": [[p.x, p.y, p.w] for p in analysis.config.points],
        },
        "stats": {
            "lines": stats.line_count,
            "histogram": {str(r): c for r, c in stats.histogram.items()},
            "degrees": list(stats.degrees),
            "max_degree": stats.max_degree,
            "witness_index": stats.witness_index,
            "max_collinear": stats.max_collinear,
        },
        "identities": {
            "lemma1": _identity_doc(analysis.lemma1),
            "lemma2": _identity_doc(analysis.lemma2),
        },
        "verdicts": {
            "hirzebruch": _verdict_doc(analysis.hirzebruch),
            "bojanowski": _verdict_doc(analysis.bojanowski),
            "degree_sum": degree_sum_doc,
        },
        "bounds": None,
    }
    if analysis.bounds is not None:
        doc["bounds"] = {
            entry.name: {
                "threshold": str(entry.threshold),
                "met": entry.met,
                "conjectural": entry.conjectural,
            }
            for entry in analysis.bounds.entries
        }
    return doc


def search_document(result) -> dict:
    """The search-result JSON document (also the golden-file schema)."""
    spec = result.spec
    return {
        "schema_version": SCHEMA_VERSION,
        "spec": {
            "n": spec.n,
            "grid": spec.grid_size,
            "mode": spec.mode,
            "budget": spec.budget,
            "seed": spec.seed,
            "hard_cap": spec.hard_cap,
            "witness_cap": spec.witness_cap,
        },
        "examined": result.examined,
        "best_max_degree": result.best_max_degree,
        "theorem_floor": result.theorem_floor,
        "dirac_floor": result.dirac_floor,
        "optima_count": result.optima_count,
        "witnesses": [[list(p) for p in w] for w in result.witnesses],
    }


def probe_document(table) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "g": table.g,
        "note": table.note,
        "rows": [
            {
                "n": row.n,
                "estimate": row.estimate,
                "feasible": row.feasible,
                "dirac_floor": row.dirac_floor,
                "min_max_degree": row.min_max_degree,
                "met": row.met,
            }
            for row in table.rows
        ],
    }


def _jsonable(value):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value if _I64_MIN <= value <= _I64_MAX else str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps_document(doc: dict) -> str:
    """Deterministic JSON text: fixed key order, big ints as strings."""
    return json.dumps(_jsonable(doc), indent=2, sort_keys=False) + "\n"
