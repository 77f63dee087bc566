import itertools

import numpy as np
import pytest

from pcrank import (
    PCMatrix,
    bounds_report,
    cop_counts,
    cop_report,
    discrepancy_bound,
    eigenvalue_bounds,
    global_discrepancy,
    kappa_recommendation,
    koczkodaj_index,
    poip_check,
    pop_check,
    rank_ev,
    saaty_bounds,
)
from tests.conftest import reciprocal_matrix


class TestDiscrepancyBound:
    def test_consistent(self):
        assert discrepancy_bound(0.0) == 0.0

    def test_half(self):
        assert discrepancy_bound(0.5) == 1.0

    def test_one_eleventh_gives_saaty_cutoff(self):
        # K = 0.0909... caps S (and D) at 0.1.
        assert discrepancy_bound(1 / 11) == pytest.approx(0.1, abs=1e-12)

    def test_domain(self):
        with pytest.raises(ValueError):
            discrepancy_bound(1.0)
        with pytest.raises(ValueError):
            discrepancy_bound(-0.1)


class TestSaatyBounds:
    def test_consistent(self):
        assert saaty_bounds(0.0) == (0.0, 0.0)

    def test_half(self):
        lo, hi = saaty_bounds(0.5)
        assert lo == -0.5
        assert hi == 1.0

    def test_acceptability_threshold(self):
        assert saaty_bounds(1 / 11)[1] == pytest.approx(0.1, abs=1e-12)


class TestEigenvalueBounds:
    def test_consistent(self):
        assert eigenvalue_bounds(0.0, 5) == (5.0, 5.0)

    def test_half_n3(self, m_x):
        lo, hi = eigenvalue_bounds(0.5, 3)
        assert (lo, hi) == (2.0, 5.0)
        from pcrank import principal_eigenpair

        assert lo <= principal_eigenpair(m_x).lambda_max <= hi

    def test_high_inconsistency(self):
        lo, hi = eigenvalue_bounds(0.9, 3)
        assert lo == pytest.approx(1.2, abs=1e-12)
        assert hi == pytest.approx(21.0, abs=1e-9)

    def test_lower_bound_positive(self):
        for k in (0.0, 0.3, 0.9, 0.999):
            for n in (2, 5, 12):
                assert eigenvalue_bounds(k, n)[0] > 0.0

    def test_domain(self):
        with pytest.raises(ValueError):
            eigenvalue_bounds(0.5, 1)


class TestKappa:
    def test_consistent(self):
        assert kappa_recommendation(0.0, 0.0) == 0.0

    def test_worked_value(self):
        assert kappa_recommendation(0.5, 2 ** (1 / 3) - 1) == pytest.approx(
            0.293700, abs=1e-5
        )

    def test_bound_tight_pair_vanishes(self):
        assert kappa_recommendation(1 / 11, 0.1) == 0.0

    def test_rejects_impossible_pair(self):
        with pytest.raises(ValueError, match="cannot come from the same matrix"):
            kappa_recommendation(0.5, 1.5)

    def test_rejects_negative_discrepancy(self):
        with pytest.raises(ValueError):
            kappa_recommendation(0.5, -0.1)

    def test_positive_when_inconsistent(self):
        rng = np.random.default_rng(51)
        for _ in range(40):
            m = reciprocal_matrix(rng, int(rng.integers(3, 9)))
            k, _ = koczkodaj_index(m)
            if k == 0.0:
                continue
            d = global_discrepancy(m, rank_ev(m)).worst
            kappa = kappa_recommendation(k, d)
            assert 0.0 <= kappa < k


class TestBoundsReport:
    def test_structure(self):
        b = bounds_report(0.5, 0.25, 4)
        assert b.saaty_lower <= 0.0 <= b.saaty_upper
        assert b.lambda_lower <= 4 <= b.lambda_upper
        assert b.pop_threshold >= 1.0
        assert b.poip_threshold == b.pop_threshold * b.pop_threshold

    def test_deterministic_recomputation(self):
        a = bounds_report(0.37, 0.21, 6)
        b = bounds_report(0.37, 0.21, 6)
        assert a == b


class TestPop:
    def test_consistent_premises_hold(self, m_c):
        mu = rank_ev(m_c)
        rows, raw = pop_check(m_c, mu, 0.0)
        assert raw == []
        by_pair = {(r.i, r.j): r for r in rows}
        assert by_pair[(0, 1)].premise_met and by_pair[(0, 1)].conclusion_holds
        assert by_pair[(0, 2)].premise_met and by_pair[(0, 2)].conclusion_holds

    def test_all_premises_vacuous_at_threshold(self, m_x):
        # K = 0.5 puts the threshold at exactly 2; no entry exceeds it.
        rows, raw = pop_check(m_x, rank_ev(m_x), 0.5)
        assert not any(r.premise_met for r in rows)
        assert raw == []

    def test_row_count(self, m_c):
        rows, _ = pop_check(m_c, rank_ev(m_c), 0.0)
        assert len(rows) == 3 * 2


class TestPoip:
    def test_consistent_intensity_order(self, m_c):
        rows, raw = poip_check(m_c, rank_ev(m_c), 0.0)
        assert raw == []
        by_quad = {(r.i, r.j, r.k, r.l): r for r in rows}
        row = by_quad[(0, 2, 0, 1)]  # ratio m02/m01 = 2 > 1
        assert row.premise_met and row.conclusion_holds

    def test_consistent_4x4_from_powers_of_two(self):
        w = np.array([8.0, 4.0, 2.0, 1.0])
        m = PCMatrix(np.outer(w, 1.0 / w))
        rows, raw = poip_check(m, rank_ev(m), 0.0)
        by_quad = {(r.i, r.j, r.k, r.l): r for r in rows}
        row = by_quad[(0, 3, 1, 2)]  # m03/m12 = 8/2 = 4 > 1
        assert row.premise_met and row.conclusion_holds
        assert raw == []

    def test_all_premises_vacuous_at_threshold(self, m_x):
        # Threshold (1/alpha)^2 = 4; the largest ratio is exactly 4, not above.
        rows, _ = poip_check(m_x, rank_ev(m_x), 0.5)
        assert not any(r.premise_met for r in rows)

    def test_quadruple_count(self, m_x):
        rows, _ = poip_check(m_x, rank_ev(m_x), 0.5)
        assert len(rows) == (3 * 2) ** 2


def test_counts_match_row_scan():
    # The vectorized tally and the row-level scan must agree everywhere.
    rng = np.random.default_rng(52)
    for _ in range(15):
        m = reciprocal_matrix(rng, int(rng.integers(3, 7)))
        k, _ = koczkodaj_index(m)
        mu = rank_ev(m)
        assert cop_counts(m, mu, k) == cop_report(m, mu, k).counts()


def test_triad_entry_band():
    # alpha * m_ik * m_kj <= m_ij <= (1/alpha) * m_ik * m_kj for every triple.
    rng = np.random.default_rng(53)
    for _ in range(25):
        m = reciprocal_matrix(rng, int(rng.integers(3, 9)))
        k, _ = koczkodaj_index(m)
        alpha = 1.0 - k
        e = m.entries
        for i, j, kk in itertools.permutations(range(m.n), 3):
            path = e[i, kk] * e[kk, j]
            assert alpha * path - 1e-9 <= e[i, j] <= path / alpha + 1e-9


def test_discrepancy_follows_inconsistency_to_zero():
    # Blending a fixed inconsistent matrix toward consistency drives K down
    # a sequence; D must follow it to 0 through the 1/alpha - 1 bound.
    from pcrank import apply_revision, suggest_revision

    m = PCMatrix([[1, 2, 2], [0.5, 1, 2], [0.5, 0.5, 1]])
    previous_bound = None
    for theta in (0.2, 0.5, 0.8, 0.95, 1.0):
        revised = apply_revision(m, suggest_revision(m, theta=theta))
        k, _ = koczkodaj_index(revised)
        bound = 1.0 / (1.0 - k) - 1.0
        d = global_discrepancy(revised, rank_ev(revised)).worst
        assert d <= bound + 1e-9
        if previous_bound is not None:
            assert bound < previous_bound
        previous_bound = bound
    assert previous_bound == 0.0  # theta = 1 projects the only triad exactly


def test_theorem_premises_never_fail():
    rng = np.random.default_rng(54)
    for _ in range(40):
        m = reciprocal_matrix(rng, int(rng.integers(3, 8)))
        k, _ = koczkodaj_index(m)
        counts = cop_counts(m, rank_ev(m), k)
        assert counts.pop_premise_failures == 0
        assert counts.poip_premise_failures == 0
