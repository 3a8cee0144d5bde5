import json

from fractions import Fraction

import pytest

from lie_elements.cli import WeightConflictError, load_weights, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestVerifyCommand:
    def test_mtt_trials(self, capsys):
        code, out = run(capsys, "verify", "mtt", "--n", "4", "--seed", "7",
                        "--trials", "5")
        assert code == 0
        lines = [l for l in out.strip().splitlines() if l]
        assert len(lines) == 5
        assert all("status=PASS" in l for l in lines)

    def test_pft_json(self, capsys):
        code, out = run(capsys, "verify", "pft", "--n", "3", "--symbolic",
                        "--format", "json")
        assert code == 0
        records = json.loads(out)
        assert records[0]["status"] == "PASS"

    def test_iota(self, capsys):
        code, out = run(capsys, "verify", "iota", "--n", "2")
        assert code == 0 and "PASS" in out


class TestLieCommand:
    def test_dim(self, capsys):
        code, out = run(capsys, "lie", "dim", "--n", "2")
        assert code == 0 and out.strip() == "1"

    def test_basis_json(self, capsys):
        code, out = run(capsys, "lie", "basis", "--n", "3", "--format",
                        "json")
        assert code == 0
        assert len(json.loads(out)) == 4

    def test_closure(self, capsys):
        code, out = run(capsys, "lie", "closure", "--n", "3", "--format",
                        "json")
        assert code == 0
        assert len(json.loads(out)) == 4


class TestConjecturesCommand:
    def test_report(self, capsys):
        code, out = run(capsys, "conjectures", "--n", "3", "--format",
                        "json")
        assert code == 0
        record = json.loads(out)[0]
        assert record["status"] == "REPORT"


class TestSdetCommand:
    def test_eval(self, capsys):
        code, out = run(capsys, "sdet", "eval",
                        "--matrix-a", '[["1","2"],["3","4"]]',
                        "--matrix-b", '[["1","0"],["0","1"]]')
        assert code == 0 and out.strip() == "sdet=4"

    def test_symbolic_agrees(self, capsys):
        a = '[["1","2"],["3","4"]]'
        b = '[["2","-1"],["1/2","5"]]'
        _, out_eval = run(capsys, "sdet", "eval", "--matrix-a", a,
                          "--matrix-b", b)
        _, out_sym = run(capsys, "sdet", "symbolic", "--matrix-a", a,
                         "--matrix-b", b)
        assert out_eval == out_sym

    def test_coeff_graph(self, capsys):
        code, out = run(capsys, "sdet", "coeff-graph", "--edges",
                        "[[1,1],[1,1]]")
        assert code == 0 and "coefficient=2" in out


class TestEnumerateCommand:
    def test_trees(self, capsys):
        code, out = run(capsys, "enumerate", "trees", "--n", "3",
                        "--format", "json")
        assert code == 0 and len(json.loads(out)) == 3

    def test_three_trees(self, capsys):
        code, out = run(capsys, "enumerate", "3trees", "--m", "2",
                        "--format", "json")
        assert code == 0 and len(json.loads(out)) == 15

    def test_four_graphs(self, capsys):
        code, out = run(capsys, "enumerate", "4graphs", "--r", "1", "--n",
                        "4", "--format", "json")
        assert code == 0 and len(json.loads(out)) == 2


class TestExitCodes:
    def test_usage_error(self):
        with pytest.raises(SystemExit) as err:
            main(["verify", "nonsense", "--n", "3"])
        assert err.value.code == 2

    def test_resource_error(self, capsys):
        assert main(["lie", "dim", "--n", "9"]) == 3


class TestWeightFiles:
    def test_pairs_symmetrized(self, tmp_path):
        path = tmp_path / "w.json"
        path.write_text(json.dumps({"pairs": [[2, 1, "3/4"]]}))
        tables = load_weights(str(path))
        assert tables["pairs"][(1, 2)] == Fraction(3, 4)

    def test_triples_antisymmetrized(self, tmp_path):
        path = tmp_path / "w.json"
        path.write_text(json.dumps({"triples": [[2, 1, 3, "2"]]}))
        tables = load_weights(str(path))
        # w_213 = 2 means w_123 = -2
        assert tables["triples"][(1, 2, 3)] == -2

    def test_conflict_detected(self, tmp_path):
        path = tmp_path / "w.json"
        path.write_text(json.dumps(
            {"triples": [[1, 2, 3, "2"], [2, 1, 3, "2"]]}))
        with pytest.raises(WeightConflictError):
            load_weights(str(path))

    def test_missing_defaults_to_zero(self, tmp_path, capsys):
        path = tmp_path / "w.json"
        path.write_text(json.dumps({"pairs": [[1, 2, "1"], [1, 3, "2"],
                                              [2, 3, "1/2"]]}))
        code, out = run(capsys, "verify", "mtt", "--n", "3", "--weights",
                        str(path))
        assert code == 0 and "status=PASS" in out

    def test_weighted_pft(self, tmp_path, capsys):
        path = tmp_path / "w.json"
        path.write_text(json.dumps({"triples": [[1, 2, 3, "1"]]}))
        code, out = run(capsys, "verify", "pft", "--n", "3", "--weights",
                        str(path))
        assert code == 0 and "status=PASS" in out
