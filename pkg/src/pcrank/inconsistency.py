"""Input-quality measures: Saaty's eigenvalue index and Koczkodaj's triad index."""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import PCMatrix, Triad, UndefinedIndexError

# How far below n the supplied eigenvalue may sit before it is rejected as
# inconsistent with lambda_max >= n (absolute slack for eigensolver rounding).
LAMBDA_SLACK = 1e-7


@dataclass(frozen=True)
class InconsistencyReport:
    """Saaty and Koczkodaj indices for one matrix.

    koczkodaj, alpha and worst_triad are None when n < 3 (the triad index
    needs at least three concepts); alpha = 1 - koczkodaj otherwise.
    """

    saaty: float
    koczkodaj: float | None
    alpha: float | None
    worst_triad: Triad | None


def saaty_index(lambda_max: float, n: int) -> float:
    """(lambda_max - n) / (n - 1), clamped to 0 against eigensolver rounding."""
    if n < 2:
        raise ValueError("Saaty index requires n >= 2")
    if lambda_max < n - LAMBDA_SLACK:
        raise ValueError(
            f"lambda_max = {lambda_max} is below n = {n}; not a principal "
            "eigenvalue of a reciprocal matrix"
        )
    s = (lambda_max - n) / (n - 1)
    return 0.0 if s < 0.0 else s


def koczkodaj_index(m: PCMatrix) -> tuple[float, Triad]:
    """Worst-triad relative distance from transitivity, with an attaining triad.

    Exhaustive scan over all ordered triples (i, j, k) of distinct indices;
    each contributes min(|1 - m_ij/(m_ik*m_kj)|, |1 - (m_ik*m_kj)/m_ij|).
    Returns the maximum and the lexicographically first triple attaining it.
    """
    n = m.n
    if n < 3:
        raise UndefinedIndexError("Koczkodaj index undefined for n < 3")
    e = m.entries
    best = -1.0
    arg = (0, 1, 2)
    for i in range(n):
        for j in range(n):
            if j == i:
                continue
            for k in range(n):
                if k == i or k == j:
                    continue
                r = e[i, j] / (e[i, k] * e[k, j])
                term = float(min(abs(1.0 - r), abs(1.0 - 1.0 / r)))
                if term > best:
                    best = term
                    arg = (i, j, k)
    return best, Triad(arg[0], arg[1], arg[2], best)


def inconsistency_report(m: PCMatrix, lambda_max: float) -> InconsistencyReport:
    """Bundle both indices; the triad-based fields are None for n < 3."""
    saaty = saaty_index(lambda_max, m.n)
    if m.n < 3:
        return InconsistencyReport(saaty=saaty, koczkodaj=None, alpha=None, worst_triad=None)
    k, worst = koczkodaj_index(m)
    return InconsistencyReport(saaty=saaty, koczkodaj=k, alpha=1.0 - k, worst_triad=worst)
