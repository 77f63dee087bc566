"""Bound theorems and order-preservation checks driven by the Koczkodaj index.

With alpha = 1 - K, the eigenvector ranking obeys:

  * every ranking error lies in [alpha, 1/alpha],
  * global discrepancy D <= 1/alpha - 1,
  * Saaty's index lies in [alpha - 1, 1/alpha - 1],
  * lambda_max lies in [(n-1)(alpha-1) + n, (n-1)(1/alpha - 1) + n],
  * m_ij > 1/alpha forces mu_i > mu_j (POP),
  * m_ij/m_kl > 1/alpha^2 forces mu_i/mu_j > mu_k/mu_l (POIP).

kappa = K + 1/(D+1) - 1 is the smallest inconsistency reduction that
guarantees the revised matrix has strictly smaller discrepancy.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .eigen import Ranking
from .matrix import PCMatrix

# Premises of the order-preservation theorems are strict inequalities and are
# evaluated strictly; only the conclusion side gets an absolute guard against
# eigenvector rounding.
CONCLUSION_SLACK = 1e-12

# Accepted overshoot of D above its 1/alpha - 1 bound before a (K, D) pair is
# rejected as inconsistent (both values carry eigensolver rounding).
BOUND_SLACK = 1e-9


@dataclass(frozen=True)
class BoundsReport:
    """All closed-form bounds derivable from K (and D, for kappa) alone."""

    discrepancy_bound: float
    saaty_lower: float
    saaty_upper: float
    lambda_lower: float
    lambda_upper: float
    kappa: float
    pop_threshold: float
    poip_threshold: float


@dataclass(frozen=True)
class PopResult:
    i: int
    j: int
    premise_met: bool
    conclusion_holds: bool


@dataclass(frozen=True)
class PoipResult:
    i: int
    j: int
    k: int
    l: int
    premise_met: bool
    conclusion_holds: bool


@dataclass(frozen=True)
class CopCounts:
    """Aggregate order-preservation tallies (theorem rows and raw violations)."""

    pop_pairs: int
    pop_premises_met: int
    pop_premise_failures: int
    raw_pop_violations: int
    poip_quadruples: int
    poip_premises_met: int
    poip_premise_failures: int
    raw_poip_violations: int


@dataclass(frozen=True)
class CopReport:
    """Row-level order-preservation results.

    A premise failure (premise met, conclusion false) would falsify the
    underlying theorem for the eigenvector ranking; raw violations list the
    unconditioned order breaks, which can legitimately occur.
    """

    pop_results: list[PopResult]
    poip_results: list[PoipResult]
    raw_pop_violations: list[tuple[int, int]]
    raw_poip_violations: list[tuple[int, int, int, int]]

    def counts(self) -> CopCounts:
        pop_met = sum(1 for r in self.pop_results if r.premise_met)
        pop_bad = sum(1 for r in self.pop_results if r.premise_met and not r.conclusion_holds)
        poip_met = sum(1 for r in self.poip_results if r.premise_met)
        poip_bad = sum(1 for r in self.poip_results if r.premise_met and not r.conclusion_holds)
        return CopCounts(
            pop_pairs=len(self.pop_results),
            pop_premises_met=pop_met,
            pop_premise_failures=pop_bad,
            raw_pop_violations=len(self.raw_pop_violations),
            poip_quadruples=len(self.poip_results),
            poip_premises_met=poip_met,
            poip_premise_failures=poip_bad,
            raw_poip_violations=len(self.raw_poip_violations),
        )


def _check_k(k: float) -> None:
    if not 0.0 <= k < 1.0:
        raise ValueError(f"inconsistency index must lie in [0, 1), got {k}")


def discrepancy_bound(k: float) -> float:
    """Upper bound 1/(1-K) - 1 on the global discrepancy of the eigenvector ranking."""
    _check_k(k)
    return 1.0 / (1.0 - k) - 1.0


def saaty_bounds(k: float) -> tuple[float, float]:
    """(alpha - 1, 1/alpha - 1) enclosing Saaty's index, alpha = 1 - K."""
    _check_k(k)
    alpha = 1.0 - k
    return alpha - 1.0, 1.0 / alpha - 1.0


def eigenvalue_bounds(k: float, n: int) -> tuple[float, float]:
    """Closed interval for lambda_max; the lower end is always positive."""
    _check_k(k)
    if n < 2:
        raise ValueError("eigenvalue bounds require n >= 2")
    alpha = 1.0 - k
    return (n - 1) * (alpha - 1.0) + n, (n - 1) * (1.0 / alpha - 1.0) + n


def kappa_recommendation(k: float, d: float) -> float:
    """Minimum meaningful inconsistency reduction K + 1/(D+1) - 1.

    Reducing K by at least this amount guarantees the discrepancy of the
    revised matrix drops below D.  Zero only when the matrix is consistent
    or D sits exactly on its bound.
    """
    _check_k(k)
    if d < 0.0:
        raise ValueError(f"discrepancy must be nonnegative, got {d}")
    if d > discrepancy_bound(k) + BOUND_SLACK:
        raise ValueError(
            f"D = {d} exceeds the bound 1/(1-K) - 1 = {discrepancy_bound(k)}; "
            "K and D cannot come from the same matrix"
        )
    kappa = k + 1.0 / (d + 1.0) - 1.0
    return 0.0 if kappa < 0.0 else kappa


def bounds_report(k: float, d: float, n: int) -> BoundsReport:
    """Assemble every bound for one matrix's (K, D, n).

    Deterministic in its inputs, so a report can be revalidated bit-for-bit
    from its own stored K and D.
    """
    saaty_lo, saaty_hi = saaty_bounds(k)
    lambda_lo, lambda_hi = eigenvalue_bounds(k, n)
    pop = 1.0 / (1.0 - k)
    return BoundsReport(
        discrepancy_bound=discrepancy_bound(k),
        saaty_lower=saaty_lo,
        saaty_upper=saaty_hi,
        lambda_lower=lambda_lo,
        lambda_upper=lambda_hi,
        kappa=kappa_recommendation(k, d),
        pop_threshold=pop,
        poip_threshold=pop * pop,
    )


def pop_check(
    m: PCMatrix, ranking: Ranking, k: float
) -> tuple[list[PopResult], list[tuple[int, int]]]:
    """Preservation-of-order rows for every ordered pair i != j.

    premise_met: m_ij > 1/(1-K); conclusion_holds: mu_i > mu_j.  Also
    returns the raw order breaks (m_ij > 1 yet mu_i <= mu_j), which the
    theorem does not forbid.
    """
    _check_k(k)
    e = m.entries
    mu = ranking.values
    threshold = 1.0 / (1.0 - k)
    results = []
    raw = []
    for i in range(m.n):
        for j in range(m.n):
            if i == j:
                continue
            results.append(
                PopResult(
                    i=i,
                    j=j,
                    premise_met=bool(e[i, j] > threshold),
                    conclusion_holds=bool(mu[i] > mu[j] - CONCLUSION_SLACK),
                )
            )
            if e[i, j] > 1.0 and mu[i] <= mu[j]:
                raw.append((i, j))
    return results, raw


def poip_check(
    m: PCMatrix, ranking: Ranking, k: float
) -> tuple[list[PoipResult], list[tuple[int, int, int, int]]]:
    """Preservation-of-intensity rows for every quadruple (i, j, k, l).

    premise_met: m_ij/m_kl > (1/(1-K))^2; conclusion_holds:
    mu_i/mu_j > mu_k/mu_l.  Raw violations are quadruples with
    m_ij > m_kl > 1 whose ranking intensity order breaks anyway.
    """
    _check_k(k)
    e = m.entries
    mu = ranking.values
    threshold = (1.0 / (1.0 - k)) ** 2
    pairs = [(i, j) for i, j in itertools.permutations(range(m.n), 2)]
    results = []
    raw = []
    for i, j in pairs:
        lhs = e[i, j]
        intensity_ij = mu[i] / mu[j]
        for kk, ll in pairs:
            results.append(
                PoipResult(
                    i=i,
                    j=j,
                    k=kk,
                    l=ll,
                    premise_met=bool(lhs / e[kk, ll] > threshold),
                    conclusion_holds=bool(intensity_ij > mu[kk] / mu[ll] - CONCLUSION_SLACK),
                )
            )
            if lhs > e[kk, ll] > 1.0 and intensity_ij <= mu[kk] / mu[ll]:
                raw.append((i, j, kk, ll))
    return results, raw


def cop_report(m: PCMatrix, ranking: Ranking, k: float) -> CopReport:
    """Full row-level POP and POIP scan (O(n^2) and O(n^4) rows)."""
    pop_rows, pop_raw = pop_check(m, ranking, k)
    poip_rows, poip_raw = poip_check(m, ranking, k)
    return CopReport(
        pop_results=pop_rows,
        poip_results=poip_rows,
        raw_pop_violations=pop_raw,
        raw_poip_violations=poip_raw,
    )


def cop_counts(m: PCMatrix, ranking: Ranking, k: float) -> CopCounts:
    """Order-preservation tallies without materializing rows.

    Vectorized equivalent of CopReport.counts(); keeps per-mutation
    recomputation cheap for sessions up to n = 25.
    """
    _check_k(k)
    e = m.entries
    mu = ranking.values
    n = m.n
    off = ~np.eye(n, dtype=bool)

    pop_threshold = 1.0 / (1.0 - k)
    gt = mu[:, None] > mu[None, :]
    gt_slack = mu[:, None] > mu[None, :] - CONCLUSION_SLACK
    pop_premise = (e > pop_threshold) & off
    pop_failures = pop_premise & ~gt_slack
    raw_pop = (e > 1.0) & ~gt & off

    idx = np.array([(i, j) for i, j in itertools.permutations(range(n), 2)])
    judgments = e[idx[:, 0], idx[:, 1]]
    intensity = mu[idx[:, 0]] / mu[idx[:, 1]]
    ratio_premise = judgments[:, None] / judgments[None, :] > pop_threshold**2
    intensity_gt = intensity[:, None] > intensity[None, :]
    intensity_gt_slack = intensity[:, None] > intensity[None, :] - CONCLUSION_SLACK
    poip_failures = ratio_premise & ~intensity_gt_slack
    raw_poip = (
        (judgments[:, None] > judgments[None, :])
        & (judgments[None, :] > 1.0)
        & ~intensity_gt
    )

    return CopCounts(
        pop_pairs=int(off.sum()),
        pop_premises_met=int(pop_premise.sum()),
        pop_premise_failures=int(pop_failures.sum()),
        raw_pop_violations=int(raw_pop.sum()),
        poip_quadruples=len(idx) ** 2,
        poip_premises_met=int(ratio_premise.sum()),
        poip_premise_failures=int(poip_failures.sum()),
        raw_poip_violations=int(raw_poip.sum()),
    )
