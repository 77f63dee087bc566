import json

import numpy as np
import pytest

from pcrank import PCMatrix, analyze, bounds_report, parse_matrix, report_to_dict
from tests.conftest import reciprocal_matrix


class TestAnalyze:
    def test_consistent_report(self, m_c):
        report = analyze(m_c)
        assert report.saaty == pytest.approx(0.0, abs=1e-9)
        assert report.koczkodaj == 0.0
        assert report.alpha == 1.0
        assert report.discrepancy.worst <= 1e-9
        assert np.allclose(report.ranking.values, [4 / 7, 2 / 7, 1 / 7], atol=1e-9)

    def test_worked_example_report(self, m_x):
        report = analyze(m_x)
        assert report.koczkodaj == 0.5
        assert report.saaty == pytest.approx(0.026811, abs=1e-5)
        assert report.discrepancy.worst == pytest.approx(0.259921, abs=1e-5)
        assert report.lambda_max == pytest.approx(3.053622, abs=1e-5)
        assert report.bounds.kappa == pytest.approx(0.293700, abs=1e-5)

    def test_two_by_two(self):
        report = analyze(PCMatrix([[1, 3], [1 / 3, 1]]))
        assert report.koczkodaj is None
        assert report.alpha is None
        assert report.worst_triad is None
        assert report.bounds is None
        assert report.cop is None
        assert report.saaty == 0.0
        assert report.discrepancy.worst <= 1e-12

    def test_bounds_recomputable_bit_for_bit(self):
        rng = np.random.default_rng(71)
        for _ in range(20):
            m = reciprocal_matrix(rng, int(rng.integers(3, 9)))
            report = analyze(m)
            again = bounds_report(report.koczkodaj, report.discrepancy.worst, report.n)
            assert again == report.bounds

    def test_cop_detail_attached_for_small_n(self):
        rng = np.random.default_rng(72)
        assert analyze(reciprocal_matrix(rng, 4)).cop_detail is not None
        assert analyze(reciprocal_matrix(rng, 9)).cop_detail is None
        assert analyze(reciprocal_matrix(rng, 9), cop_rows=True).cop_detail is not None


class TestReportToDict:
    def test_matrix_echo_round_trips_bit_for_bit(self, m_x):
        payload = report_to_dict(analyze(m_x))
        text = json.dumps(payload["matrix"])
        again = parse_matrix(text, "json")
        assert np.array_equal(again.entries, m_x.entries)

    def test_random_matrix_echo_round_trips(self):
        rng = np.random.default_rng(73)
        for _ in range(10):
            m = reciprocal_matrix(rng, int(rng.integers(2, 9)))
            payload = report_to_dict(analyze(m))
            again = parse_matrix(json.dumps(payload["matrix"]), "json")
            assert np.array_equal(again.entries, m.entries)
            assert again.labels == m.labels

    def test_json_serializable_and_complete(self, m_x):
        payload = report_to_dict(analyze(m_x))
        json.dumps(payload)  # no numpy leakage
        for key in (
            "n", "labels", "matrix", "ranking", "lambdaMax", "saaty",
            "koczkodaj", "alpha", "worstTriad", "discrepancy", "bounds",
            "scale", "cop", "eigen", "notes",
        ):
            assert key in payload
        assert payload["discrepancy"]["global"] == pytest.approx(0.259921, abs=1e-5)
        assert payload["copDetail"]["pop"]

    def test_null_fields_below_three(self):
        payload = report_to_dict(analyze(PCMatrix([[1, 2], [0.5, 1]])))
        assert payload["koczkodaj"] is None
        assert payload["bounds"] is None
        assert payload["cop"] is None
        assert payload["saaty"] == 0.0
