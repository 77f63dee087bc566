import numpy as np
import pytest

from pcrank import PCMatrix


def consistent_matrix(rng: np.random.Generator, n: int) -> PCMatrix:
    """Matrix built as w_i / w_j from weights log-uniform in [1, 9]."""
    w = np.exp(rng.uniform(np.log(1.0), np.log(9.0), size=n))
    return PCMatrix(np.outer(w, 1.0 / w))


def reciprocal_matrix(rng: np.random.Generator, n: int) -> PCMatrix:
    """Reciprocal-closed matrix with upper entries log-uniform in [1/9, 9]."""
    a = np.ones((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            v = float(np.exp(rng.uniform(np.log(1.0 / 9.0), np.log(9.0))))
            a[i, j] = v
            a[j, i] = 1.0 / v
    return PCMatrix(a)


@pytest.fixture
def m_c() -> PCMatrix:
    # Consistent: generated by the weight vector (4, 2, 1).
    return PCMatrix([[1, 2, 4], [0.5, 1, 2], [0.25, 0.5, 1]])


@pytest.fixture
def m_x() -> PCMatrix:
    # Single inconsistent triad: direct 2 vs transitive 2*2 = 4.
    return PCMatrix([[1, 2, 2], [0.5, 1, 2], [0.5, 0.5, 1]])
