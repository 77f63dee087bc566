"""Heuristic inconsistency reduction by revising one judgment at a time.

Each step targets the currently worst triad and moves one of its three
entries toward the transitive estimate through the remaining index, using a
geometric blend m^(1-theta) * (path)^theta so positivity and reciprocity are
preserved for free.  This is a judgment-revision heuristic, not the closest
consistent approximation: with overlapping triads the index can plateau, so
the loop keeps the best matrix seen.
"""

from __future__ import annotations

from dataclasses import dataclass

from .discrepancy import global_discrepancy
from .eigen import rank_ev
from .inconsistency import koczkodaj_index
from .matrix import PCMatrix


class AlreadyConsistentError(ValueError):
    """No revision exists because the matrix is already consistent."""


@dataclass(frozen=True)
class Revision:
    """Proposed change of one upper-triangle judgment, with predicted effect.

    predicted_k / predicted_d are the Koczkodaj index and global discrepancy
    of the matrix after applying the change (with its reciprocal mirror).
    """

    i: int
    j: int
    old_value: float
    new_value: float
    theta: float
    predicted_k: float
    predicted_d: float


@dataclass(frozen=True)
class ReductionResult:
    matrix: PCMatrix
    revisions: list[Revision]
    reached_target: bool


def apply_revision(m: PCMatrix, revision: Revision) -> PCMatrix:
    """Matrix with the revision applied (reciprocal mirror included)."""
    return m.with_entry(revision.i, revision.j, revision.new_value)


def _blend(m: PCMatrix, i: int, j: int, mid: int, theta: float) -> float:
    e = m.entries
    return e[i, j] ** (1.0 - theta) * (e[i, mid] * e[mid, j]) ** theta


def suggest_revision(m: PCMatrix, theta: float = 0.5) -> Revision:
    """Propose the revision of one entry of the worst triad.

    Of the triad's three entries, the one whose blended revision yields the
    smallest whole-matrix Koczkodaj index is chosen; ties fall to the first
    candidate in lexicographic (i, k, j) order, i.e. the entry spanning the
    triad's outer indices revised toward the path through its middle index.
    """
    if not 0.0 < theta <= 1.0:
        raise ValueError(f"theta must lie in (0, 1], got {theta}")
    k_value, worst = koczkodaj_index(m)
    if k_value == 0.0:
        raise AlreadyConsistentError("matrix is already consistent; nothing to revise")

    a, b, c = sorted((worst.i, worst.j, worst.k))
    # Candidate (i, k, j) readings of the triad, lexicographic order.
    candidates = [(a, b, c), (a, c, b), (b, a, c)]
    best = None
    best_k = None
    for i, mid, j in candidates:
        value = float(_blend(m, i, j, mid, theta))
        revised_k, _ = koczkodaj_index(m.with_entry(i, j, value))
        if best_k is None or revised_k < best_k:
            best = (i, j, value)
            best_k = revised_k

    i, j, value = best
    revised = m.with_entry(i, j, value)
    return Revision(
        i=i,
        j=j,
        old_value=float(m.entries[i, j]),
        new_value=float(value),
        theta=theta,
        predicted_k=best_k,
        predicted_d=global_discrepancy(revised, rank_ev(revised)).worst,
    )


def reduce(
    m: PCMatrix,
    target_k: float,
    max_steps: int = 100,
    theta: float = 0.5,
) -> ReductionResult:
    """Apply suggested revisions until the Koczkodaj index reaches target_k.

    Returns the revised matrix and the revision log; when max_steps runs out
    first, the best matrix seen is returned with reached_target False.  A
    matrix already at or below the target comes back unchanged.
    """
    if target_k < 0.0:
        raise ValueError(f"target_k must be nonnegative, got {target_k}")
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")

    current_k, _ = koczkodaj_index(m)
    if current_k <= target_k:
        return ReductionResult(matrix=m, revisions=[], reached_target=True)

    revisions: list[Revision] = []
    best_matrix, best_k, best_len = m, current_k, 0
    for _ in range(max_steps):
        revision = suggest_revision(m, theta=theta)
        m = apply_revision(m, revision)
        revisions.append(revision)
        current_k = revision.predicted_k
        if current_k < best_k:
            best_matrix, best_k, best_len = m, current_k, len(revisions)
        if current_k <= target_k:
            return ReductionResult(matrix=m, revisions=revisions, reached_target=True)
    return ReductionResult(
        matrix=best_matrix, revisions=revisions[:best_len], reached_target=False
    )
