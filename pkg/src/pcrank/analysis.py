"""Full single-matrix analysis bundling every measure, bound and check."""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import (
    BoundsReport,
    CopCounts,
    CopReport,
    bounds_report,
    cop_counts,
    cop_report,
)
from .discrepancy import DiscrepancyReport, global_discrepancy
from .eigen import DEFAULT_MAX_ITER, DEFAULT_TOL, Ranking, principal_eigenpair
from .inconsistency import inconsistency_report
from .matrix import PCMatrix, ScaleReport, Triad, scale_check

# Row-level POIP detail is attached only up to this size; the O(n^4) row list
# stops being useful (and JSON-friendly) beyond it.  Counts are always exact.
COP_DETAIL_MAX_N = 8

# Threshold note surfaced with every report: K <= 1/11 caps Saaty's index at
# 0.1, the customary acceptability cutoff (S <= K/(1-K)).
SAATY_ACCEPT_NOTE = (
    "K <= 1/11 = 0.0909… guarantees S <= 0.1 via S <= 1/(1-K) - 1"
)


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the workbench knows about one matrix and its eigen ranking.

    Triad-based fields (koczkodaj, alpha, worst_triad, bounds, cop*) are None
    when n < 3.  bounds is always recomputable from the report's own
    koczkodaj, discrepancy.worst and n.
    """

    matrix: PCMatrix
    ranking: Ranking
    lambda_max: float
    eigen_iterations: int
    eigen_residual: float
    saaty: float
    koczkodaj: float | None
    alpha: float | None
    worst_triad: Triad | None
    discrepancy: DiscrepancyReport
    bounds: BoundsReport | None
    scale: ScaleReport
    cop: CopCounts | None
    cop_detail: CopReport | None

    @property
    def n(self) -> int:
        return self.matrix.n


def analyze(
    m: PCMatrix,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    cop_rows: bool | None = None,
) -> AnalysisReport:
    """Compute the full report for one matrix.

    cop_rows controls whether row-level POP/POIP results are attached:
    None picks them up automatically for n <= COP_DETAIL_MAX_N.
    """
    pair = principal_eigenpair(m, tol=tol, max_iter=max_iter)
    ranking = Ranking(values=pair.vector / pair.vector.sum(), labels=m.labels)
    inconsistency = inconsistency_report(m, pair.lambda_max)
    disc = global_discrepancy(m, ranking)

    bounds = None
    counts = None
    detail = None
    if inconsistency.koczkodaj is not None:
        k = inconsistency.koczkodaj
        bounds = bounds_report(k, disc.worst, m.n)
        counts = cop_counts(m, ranking, k)
        if cop_rows or (cop_rows is None and m.n <= COP_DETAIL_MAX_N):
            detail = cop_report(m, ranking, k)

    return AnalysisReport(
        matrix=m,
        ranking=ranking,
        lambda_max=pair.lambda_max,
        eigen_iterations=pair.iterations,
        eigen_residual=pair.residual,
        saaty=inconsistency.saaty,
        koczkodaj=inconsistency.koczkodaj,
        alpha=inconsistency.alpha,
        worst_triad=inconsistency.worst_triad,
        discrepancy=disc,
        bounds=bounds,
        scale=scale_check(m),
        cop=counts,
        cop_detail=detail,
    )


def _triad_dict(t: Triad) -> dict:
    return {"i": t.i, "j": t.j, "k": t.k, "localInconsistency": float(t.local_inconsistency)}


def report_to_dict(report: AnalysisReport, include_cop_detail: bool = True) -> dict:
    """JSON-ready dict with full float precision (camelCase keys on the wire)."""
    bounds = report.bounds
    cop = report.cop
    out = {
        "n": report.n,
        "labels": list(report.matrix.labels),
        "matrix": report.matrix.to_json_dict(),
        "ranking": {
            "labels": list(report.ranking.labels),
            "values": [float(v) for v in report.ranking.values],
        },
        "lambdaMax": float(report.lambda_max),
        "eigen": {
            "iterations": report.eigen_iterations,
            "residual": float(report.eigen_residual),
        },
        "saaty": float(report.saaty),
        "koczkodaj": None if report.koczkodaj is None else float(report.koczkodaj),
        "alpha": None if report.alpha is None else float(report.alpha),
        "worstTriad": None if report.worst_triad is None else _triad_dict(report.worst_triad),
        "discrepancy": {
            "global": float(report.discrepancy.worst),
            "worstPair": list(report.discrepancy.worst_pair),
            "localGrid": [list(map(float, row)) for row in report.discrepancy.local_grid],
        },
        "bounds": None
        if bounds is None
        else {
            "discrepancyBound": float(bounds.discrepancy_bound),
            "saatyLower": float(bounds.saaty_lower),
            "saatyUpper": float(bounds.saaty_upper),
            "lambdaLower": float(bounds.lambda_lower),
            "lambdaUpper": float(bounds.lambda_upper),
            "kappa": float(bounds.kappa),
            "popThreshold": float(bounds.pop_threshold),
            "poipThreshold": float(bounds.poip_threshold),
        },
        "scale": {
            "maxEntry": float(report.scale.max_entry),
            "fulopConstant": float(report.scale.fulop_constant),
            "withinScale": report.scale.within_scale,
        },
        "cop": None
        if cop is None
        else {
            "popPairs": cop.pop_pairs,
            "popPremisesMet": cop.pop_premises_met,
            "popPremiseFailures": cop.pop_premise_failures,
            "rawPopViolations": cop.raw_pop_violations,
            "poipQuadruples": cop.poip_quadruples,
            "poipPremisesMet": cop.poip_premises_met,
            "poipPremiseFailures": cop.poip_premise_failures,
            "rawPoipViolations": cop.raw_poip_violations,
        },
        "notes": [SAATY_ACCEPT_NOTE],
    }
    if include_cop_detail and report.cop_detail is not None:
        detail = report.cop_detail
        out["copDetail"] = {
            "pop": [
                {
                    "i": r.i,
                    "j": r.j,
                    "judgment": float(report.matrix.entries[r.i, r.j]),
                    "premiseMet": r.premise_met,
                    "conclusionHolds": r.conclusion_holds,
                }
                for r in detail.pop_results
            ],
            "poip": [
                {
                    "i": r.i,
                    "j": r.j,
                    "k": r.k,
                    "l": r.l,
                    "premiseMet": r.premise_met,
                    "conclusionHolds": r.conclusion_holds,
                }
                for r in detail.poip_results
            ],
            "rawPopViolations": [list(p) for p in detail.raw_pop_violations],
            "rawPoipViolations": [list(q) for q in detail.raw_poip_violations],
        }
    return out
