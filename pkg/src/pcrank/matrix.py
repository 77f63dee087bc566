"""Pairwise-comparison matrix model: validation, parsing, triads, scale check.

A PC matrix holds ratio judgments m[i][j] > 0 estimating how many times
concept i outweighs concept j.  Every matrix handled here is reciprocal
(m[i][j] * m[j][i] = 1) and carries one label per concept.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

# Relative tolerance accepted on reciprocity and on the unit diagonal before
# an input is rejected.  Inputs inside the tolerance are canonicalized.
RECIPROCITY_TOL = 1e-9

# Theoretical upper bound for judgment-scale entries, sqrt((11 + 5*sqrt(5))/2).
FULOP_CONSTANT = math.sqrt((11.0 + 5.0 * math.sqrt(5.0)) / 2.0)


class MatrixValidationError(ValueError):
    """Input does not satisfy the reciprocal PC-matrix contract."""


class UndefinedIndexError(ValueError):
    """Triad-based quantity requested for a matrix with fewer than 3 concepts."""


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"C{i + 1}" for i in range(n))


@dataclass(frozen=True)
class PCMatrix:
    """Square positive reciprocal judgment matrix with concept labels.

    Construction validates and canonicalizes the input: the diagonal is
    forced to exactly 1 and the lower triangle is rewritten as the exact
    reciprocal of the upper triangle (upper triangle wins).  Instances are
    immutable; the entry array is read-only and safe to share.
    """

    entries: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        a = np.array(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise MatrixValidationError(f"matrix must be square, got shape {a.shape}")
        n = a.shape[0]
        if n < 2:
            raise MatrixValidationError("at least 2 concepts are required")
        if not np.all(np.isfinite(a)):
            raise MatrixValidationError("matrix entries must be finite")
        if not np.all(a > 0.0):
            i, j = np.argwhere(a <= 0.0)[0]
            raise MatrixValidationError(
                f"entry ({i},{j}) = {a[i, j]} is not strictly positive"
            )
        for i in range(n):
            if abs(a[i, i] - 1.0) > RECIPROCITY_TOL:
                raise MatrixValidationError(
                    f"diagonal entry ({i},{i}) = {a[i, i]} must equal 1"
                )
            for j in range(i + 1, n):
                if abs(a[i, j] * a[j, i] - 1.0) > RECIPROCITY_TOL:
                    raise MatrixValidationError(
                        f"reciprocity violated at ({i},{j}): "
                        f"{a[i, j]} * {a[j, i]} != 1"
                    )

        # Canonical form: unit diagonal, lower triangle derived from upper.
        canon = np.ones((n, n))
        for i in range(n):
            for j in range(i + 1, n):
                canon[i, j] = a[i, j]
                canon[j, i] = 1.0 / a[i, j]
        canon.setflags(write=False)
        object.__setattr__(self, "entries", canon)

        labels = self.labels
        if labels is None:
            labels = default_labels(n)
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise MatrixValidationError(
                f"{len(labels)} labels given for {n} concepts"
            )
        if any(not lab for lab in labels):
            raise MatrixValidationError("labels must be non-empty")
        if len(set(labels)) != n:
            raise MatrixValidationError("labels must be distinct")
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def with_entry(self, i: int, j: int, value: float) -> "PCMatrix":
        """New matrix with upper-triangle entry (i, j) replaced (i < j).

        The mirror entry (j, i) is set to the reciprocal, so the result is
        reciprocal by construction.
        """
        if not 0 <= i < j < self.n:
            raise MatrixValidationError(
                f"expected indices 0 <= i < j < {self.n}, got ({i},{j})"
            )
        if not (value > 0.0 and math.isfinite(value)):
            raise MatrixValidationError(f"judgment must be a positive number, got {value}")
        a = np.array(self.entries)
        a[i, j] = value
        a[j, i] = 1.0 / value
        return PCMatrix(a, self.labels)

    def to_json_dict(self) -> dict:
        return {"labels": list(self.labels), "matrix": [list(row) for row in self.entries]}


@dataclass(frozen=True)
class Triad:
    """Index triple with its local inconsistency (the min-of-two-distances term)."""

    i: int
    j: int
    k: int
    local_inconsistency: float


@dataclass(frozen=True)
class ScaleReport:
    """Largest judgment against the theoretical scale bound; informational only."""

    max_entry: float
    fulop_constant: float
    within_scale: bool


def _parse_ratio(value, where: str) -> float:
    """Accept a decimal or an 'a/b' fraction; return it as a float."""
    if isinstance(value, bool):
        raise MatrixValidationError(f"{where}: expected a number, got {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return float(text)
        except ValueError:
            pass
        try:
            return float(Fraction(text))
        except (ValueError, ZeroDivisionError):
            raise MatrixValidationError(
                f"{where}: {value!r} is not a decimal or 'a/b' fraction"
            ) from None
    raise MatrixValidationError(f"{where}: expected a number, got {type(value).__name__}")


def _parse_json(text: str) -> PCMatrix:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixValidationError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(data, dict):
        raise MatrixValidationError("top-level JSON value must be an object")

    labels = data.get("labels")
    if labels is not None and not isinstance(labels, list):
        raise MatrixValidationError('"labels" must be a list of names')

    if "matrix" in data:
        grid = data["matrix"]
        if not isinstance(grid, list) or not all(isinstance(r, list) for r in grid):
            raise MatrixValidationError('"matrix" must be a list of rows')
        rows = []
        for i, row in enumerate(grid):
            rows.append([_parse_ratio(v, f"matrix[{i}][{j}]") for j, v in enumerate(row)])
        if any(len(r) != len(rows) for r in rows):
            raise MatrixValidationError("matrix grid is not square")
        return PCMatrix(np.array(rows, dtype=float), tuple(labels) if labels else None)

    if "judgments" in data:
        if "n" not in data:
            raise MatrixValidationError('judgment-form JSON requires an "n" field')
        n = data["n"]
        if not isinstance(n, int):
            raise MatrixValidationError('"n" must be an integer')
        upper = {}
        for idx, j in enumerate(data["judgments"]):
            if not isinstance(j, dict) or not {"i", "j", "value"} <= set(j):
                raise MatrixValidationError(
                    f"judgments[{idx}] must be an object with i, j, value"
                )
            key = (j["i"], j["j"])
            if key in upper:
                raise MatrixValidationError(f"judgments[{idx}]: pair {key} given twice")
            upper[key] = _parse_ratio(j["value"], f"judgments[{idx}].value")
        return complete_reciprocal(upper, n, tuple(labels) if labels else None)

    raise MatrixValidationError('JSON must contain either "matrix" or "judgments"')


def _parse_csv(text: str) -> PCMatrix:
    rows = [row for row in csv.reader(io.StringIO(text)) if any(c.strip() for c in row)]
    if not rows:
        raise MatrixValidationError("empty CSV input")

    labels = None
    first = [c.strip() for c in rows[0]]
    try:
        for c in first:
            _parse_ratio(c, "header probe")
    except MatrixValidationError:
        labels = tuple(first)
        rows = rows[1:]
        if not rows:
            raise MatrixValidationError("CSV has a header row but no data rows") from None

    grid = []
    for lineno, row in enumerate(rows, start=2 if labels else 1):
        grid.append(
            [_parse_ratio(c.strip(), f"line {lineno}, column {col + 1}") for col, c in enumerate(row)]
        )
    if any(len(r) != len(grid) for r in grid):
        raise MatrixValidationError(
            f"CSV grid is not square: {len(grid)} rows, "
            f"row lengths {sorted({len(r) for r in grid})}"
        )
    return PCMatrix(np.array(grid, dtype=float), labels)


def parse_matrix(text: str, fmt: str = "json") -> PCMatrix:
    """Parse a PC matrix from JSON or CSV text.

    JSON accepts either a full grid, {"labels": [...], "matrix": [[...]]},
    or an upper-triangle list, {"n": N, "judgments": [{"i", "j", "value"}]}.
    CSV is one row per line with an optional leading label row.  Numbers may
    be decimals or fractions like "5/2".  The result is validated and
    canonicalized.
    """
    if fmt == "json":
        return _parse_json(text)
    if fmt == "csv":
        return _parse_csv(text)
    raise MatrixValidationError(f"unknown format {fmt!r}; expected 'json' or 'csv'")


def complete_reciprocal(
    upper: Mapping[tuple[int, int], float],
    n: int,
    labels: tuple[str, ...] | None = None,
) -> PCMatrix:
    """Build a full PC matrix from upper-triangle judgments.

    Every pair (i, j) with i < j must be present exactly once; the diagonal
    is set to 1 and the lower triangle to the reciprocals.
    """
    if n < 2:
        raise MatrixValidationError("at least 2 concepts are required")
    a = np.ones((n, n))
    seen = set()
    for (i, j), value in upper.items():
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < j < n):
            raise MatrixValidationError(
                f"judgment key ({i},{j}) must satisfy 0 <= i < j < {n}"
            )
        v = _parse_ratio(value, f"judgment ({i},{j})")
        if not (v > 0.0 and math.isfinite(v)):
            raise MatrixValidationError(f"judgment ({i},{j}) = {v} must be positive")
        a[i, j] = v
        a[j, i] = 1.0 / v
        seen.add((i, j))
    missing = [
        (i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in seen
    ]
    if missing:
        raise MatrixValidationError(f"missing judgments for pairs {missing}")
    return PCMatrix(a, labels)


def is_consistent(m: PCMatrix, tol: float = 1e-9) -> bool:
    """True iff every triad product m[i][j]*m[j][k]*m[k][i] is within tol of 1.

    Both cycle orientations are checked.  A 2x2 reciprocal matrix has no
    triad and is always consistent.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    e = m.entries
    for i, j, k in itertools.combinations(range(m.n), 3):
        t = e[i, j] * e[j, k] * e[k, i]
        if abs(t - 1.0) > tol or abs(1.0 / t - 1.0) > tol:
            return False
    return True


def triads(m: PCMatrix) -> list[Triad]:
    """One Triad per unordered index triple, C(n,3) in total.

    The stored local inconsistency is the worst min-of-two-distances term
    over the triple's orderings, so the maximum over these records equals
    the maximum over all ordered triples.
    """
    n = m.n
    if n < 3:
        raise UndefinedIndexError("Koczkodaj index undefined for n < 3")
    e = m.entries
    out = []
    for a, b, c in itertools.combinations(range(n), 3):
        worst = 0.0
        for i, j, k in itertools.permutations((a, b, c)):
            r = e[i, j] / (e[i, k] * e[k, j])
            term = float(min(abs(1.0 - r), abs(1.0 - 1.0 / r)))
            if term > worst:
                worst = term
        out.append(Triad(a, b, c, worst))
    return out


def scale_check(m: PCMatrix) -> ScaleReport:
    """Report whether all judgments stay below the Fulop scale constant."""
    max_entry = float(np.max(m.entries))
    return ScaleReport(
        max_entry=max_entry,
        fulop_constant=FULOP_CONSTANT,
        within_scale=max_entry < FULOP_CONSTANT,
    )
