import json

from fractions import Fraction

import pytest

import lie_elements.verify as verify_mod

from lie_elements.exactmath import MultiPoly
from lie_elements.verify import (conjecture_report, pair_weights,
                                 triple_weights, verify_iota, verify_main,
                                 verify_mtt, verify_pft, verify_rank2)


class TestReports:
    def test_json_schema(self):
        report = verify_mtt(3, seed=1)
        obj = json.loads(report.to_json())
        for key in ("theorem", "n", "seed", "status", "lhs", "rhs",
                    "elapsed_ms"):
            assert key in obj

    def test_determinism(self):
        a = verify_mtt(4, seed=9)
        b = verify_mtt(4, seed=9)
        assert (a.lhs, a.rhs, a.status) == (b.lhs, b.rhs, b.status)


class TestMtt:
    def test_n2_unit(self):
        report = verify_mtt(2, weights={(1, 2): Fraction(1)})
        assert report.passed and report.lhs == "2"

    def test_n3_unit(self):
        weights = {p: Fraction(1) for p in ((1, 2), (1, 3), (2, 3))}
        report = verify_mtt(3, weights=weights)
        assert report.passed and report.lhs == "9"

    def test_symbolic_n3_value(self):
        report = verify_mtt(3, symbolic=True)
        w = {p: MultiPoly.variable("w_%d_%d" % p)
             for p in ((1, 2), (1, 3), (2, 3))}
        expected = 3 * (w[(1, 2)] * w[(1, 3)] + w[(1, 2)] * w[(2, 3)]
                        + w[(1, 3)] * w[(2, 3)])
        assert report.passed and report.lhs == str(expected)

    def test_random_seeds(self):
        for seed in range(3):
            assert verify_mtt(5, seed=seed).passed


class TestPft:
    def test_n3_symbolic(self):
        report = verify_pft(3, symbolic=True)
        assert report.passed
        # Pf(Omega) = -3 w and the signed 3-tree sum is 3 w, so the
        # squares agree at 9 w^2
        w = MultiPoly.variable("w_1_2_3")
        assert report.lhs == str(-3 * w)
        assert report.rhs == str(3 * w)

    def test_even_degenerate(self):
        report = verify_pft(4, seed=1)
        assert report.passed and report.details["case"] == "even-degenerate"

    def test_n5_random(self):
        for seed in range(5):
            report = verify_pft(5, seed=seed)
            assert report.passed
            assert report.details.get("global_sign") == 1


class TestRank2:
    def test_reference_tuple(self):
        report = verify_rank2(1, 2, 3, 4, 4)
        assert report.passed and report.details["rank"] == 2

    def test_larger_degree(self):
        assert verify_rank2(2, 5, 1, 3, 5).passed


class TestMain:
    def test_n4(self):
        assert verify_main(4, seed=3).passed

    def test_n5(self):
        assert verify_main(5, seed=3).passed

    def test_explicit_single_eta(self):
        weights = {(q, v): Fraction(0)
                   for q in [(1, 2, 3, 4)] for v in ("T1", "T2")}
        weights[((1, 2, 3, 4), "T1")] = Fraction(1)
        report = verify_main(4, weights=weights)
        assert report.passed
        # charpoly of the single generator is t^4 - 4 t^2
        assert json.loads(report.lhs.replace("'", '"')) == \
            ["0", "0", "-4", "0", "1"]


class TestIota:
    def test_small_degrees(self):
        for n in (2, 3):
            assert verify_iota(n, trials=2, seed=0).passed


class TestConjectures:
    def test_n2_values(self):
        report = conjecture_report(2)
        assert report.status == "REPORT"
        assert report.details["dim_lie_space"] == 1
        assert report.details["dim_kappa_closure"] == 1
        assert report.details["dim_kernel"] == 0
        assert report.details["dim_quotient"] == 1

    def test_golden_persistence(self, tmp_path):
        first = conjecture_report(3, results_dir=str(tmp_path))
        assert first.status == "REPORT"
        again = conjecture_report(3, results_dir=str(tmp_path))
        assert again.status == "REPORT"
        # a tampered golden file turns the report into a failure
        path = tmp_path / "generation-conjectures-n3.json"
        data = json.loads(path.read_text())
        data["dim_lie_space"] = 99
        path.write_text(json.dumps(data))
        assert conjecture_report(3, results_dir=str(tmp_path)).status == "FAIL"
