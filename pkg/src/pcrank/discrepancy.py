"""Output-quality measures relating a matrix to a ranking.

The ranking error eps(i, j) = (1/m_ij) * (mu_i / mu_j) is 1 when a judgment
and the ranking agree perfectly; the local discrepancy folds over- and
under-estimation into one nonnegative number, and the global discrepancy is
the worst local value over all pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .eigen import Ranking
from .matrix import PCMatrix


@dataclass(frozen=True)
class DiscrepancyReport:
    """Worst local discrepancy, the pair attaining it, and the full pair grid.

    The grid is symmetric with a zero diagonal; worst is its maximum over
    i != j and worst_pair the lexicographically first attaining pair.  The
    ranking the discrepancies were measured against is carried along.
    """

    worst: float
    worst_pair: tuple[int, int]
    local_grid: np.ndarray
    ranking: Ranking


def ranking_error(m: PCMatrix, ranking: Ranking, i: int, j: int) -> float:
    """eps(i, j) = (1/m_ij) * (mu_i / mu_j); reciprocal in (i, j)."""
    if i == j:
        raise ValueError("ranking error is undefined for i == j")
    mu = ranking.values
    return float((1.0 / m.entries[i, j]) * (mu[i] / mu[j]))


def local_discrepancy(m: PCMatrix, ranking: Ranking, i: int, j: int) -> float:
    """max(eps - 1, 1/eps - 1) >= 0; symmetric in (i, j)."""
    eps = ranking_error(m, ranking, i, j)
    return max(eps - 1.0, 1.0 / eps - 1.0)


def global_discrepancy(m: PCMatrix, ranking: Ranking) -> DiscrepancyReport:
    """Exhaustive worst local discrepancy over all ordered pairs i != j."""
    n = m.n
    if len(ranking.values) != n:
        raise ValueError(
            f"ranking has {len(ranking.values)} values for a {n}x{n} matrix"
        )
    grid = np.zeros((n, n))
    worst = 0.0
    worst_pair = (0, 1)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            value = local_discrepancy(m, ranking, i, j)
            grid[i, j] = value
            if value > worst:
                worst = value
                worst_pair = (i, j)
    grid.setflags(write=False)
    return DiscrepancyReport(worst=worst, worst_pair=worst_pair, local_grid=grid, ranking=ranking)
