"""Principal eigenpair and the eigenvector priority-deriving procedure.

A positive reciprocal matrix has a unique dominant real eigenvalue with a
strictly positive eigenvector (Perron-Frobenius), so plain power iteration
converges; no general eigensolver is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix import PCMatrix

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 10000


class ConvergenceError(RuntimeError):
    """Power iteration failed to reach the requested residual."""

    def __init__(self, iterations: int, residual: float, tol: float):
        super().__init__(
            f"power iteration did not converge within {iterations} iterations "
            f"(residual {residual:.3e}, requested {tol:.3e})"
        )
        self.iterations = iterations
        self.residual = residual


@dataclass(frozen=True)
class EigenPair:
    """Dominant eigenvalue and positive eigenvector, with convergence data.

    The certified residual is ||M v - lambda v||_inf / ||v||_inf.
    """

    lambda_max: float
    vector: np.ndarray
    iterations: int
    residual: float


@dataclass(frozen=True)
class Ranking:
    """Positive priority vector normalized to sum 1, one value per concept."""

    values: np.ndarray
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        v = np.array(self.values, dtype=float)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "labels", tuple(self.labels))


def principal_eigenpair(
    m: PCMatrix, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> EigenPair:
    """Dominant eigenpair of a PC matrix by power iteration.

    Iterates v <- M v with L1 renormalization from the uniform start vector;
    the eigenvalue estimate is the ratio of consecutive iterate norms.  Stops
    once the residual ||M v - lambda v||_inf / ||v||_inf drops to tol.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    a = m.entries
    v = np.full(m.n, 1.0 / m.n)
    residual = np.inf
    for iteration in range(1, max_iter + 1):
        w = a @ v
        lam = float(w.sum())  # v is L1-normalized and positive
        residual = float(np.max(np.abs(w - lam * v)) / np.max(v))
        if residual <= tol:
            v = np.array(v)
            v.setflags(write=False)
            return EigenPair(lambda_max=lam, vector=v, iterations=iteration, residual=residual)
        v = w / w.sum()
    raise ConvergenceError(max_iter, residual, tol)


def rank_ev(
    m: PCMatrix, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> Ranking:
    """Eigenvector ranking: principal eigenvector rescaled to sum 1."""
    pair = principal_eigenpair(m, tol=tol, max_iter=max_iter)
    return Ranking(values=pair.vector / pair.vector.sum(), labels=m.labels)
