import json
import subprocess
import sys

from snakemod.cli import main

EXAMPLE_ONE = {
    "n": 5,
    "intervals": [[0, 4], [-1, 1], [1, 2], [2, 3]],
    "breaks": [1, 2, 4],
}
PAIR = {"n": 2, "intervals": [[0, 2], [-1, 1]], "breaks": [1, 2]}
UNSTABLE = {
    "n": 5,
    "intervals": [[-1, 0], [-3, -1], [-2, 1], [-4, 0], [-3, 2]],
    "breaks": [1, 2, 3, 4, 5],
}
TWO_FACTOR = {"n": 5, "intervals": [[0, 4], [-2, 1], [1, 4]], "breaks": [1, 2, 3]}


def write(tmp_path, payload, name="in.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestValidate:
    def test_example_one(self, tmp_path, capsys):
        code, out, _ = run_cli(["validate", write(tmp_path, EXAMPLE_ONE)], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["valid"] is True
        assert report["runs"] == ["left", "right"]
        assert report["stable"] is True
        assert report["prime"] is True
        assert report["canonical"] is True
        assert "version" in report

    def test_invalid_snake_reports_diagnostics(self, tmp_path, capsys):
        bad = {"n": 2, "intervals": [[0, 2], [0, 2]], "breaks": [1, 2]}
        code, out, _ = run_cli(["validate", write(tmp_path, bad)], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["valid"] is False
        assert report["diagnostics"][0]["code"] == "alt-1"

    def test_schema_error_exits_2(self, tmp_path, capsys):
        code, _, err = run_cli(["validate", write(tmp_path, {"n": 2})], capsys)
        assert code == 2
        assert json.loads(err)["error"] == "invalid-input"

    def test_bad_json_exits_2(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        code, _, err = run_cli(["validate", str(path)], capsys)
        assert code == 2
        assert json.loads(err)["error"] == "invalid-input"


class TestRankOverride:
    def test_upward_allowed(self, tmp_path, capsys):
        code, out, _ = run_cli(
            ["validate", write(tmp_path, PAIR), "--n", "4"], capsys
        )
        assert code == 0 and json.loads(out)["valid"] is True

    def test_downward_refused(self, tmp_path, capsys):
        code, _, err = run_cli(
            ["validate", write(tmp_path, EXAMPLE_ONE), "--n", "4"], capsys
        )
        assert code == 2
        assert "raise" in json.loads(err)["message"]

    def test_raising_rank_changes_normalization(self, tmp_path, capsys):
        # at n = 2 the crossed weight collapses; at n = 4 it does not
        code, out, _ = run_cli(["det-formula", write(tmp_path, PAIR)], capsys)
        low = json.loads(out)
        code, out, _ = run_cli(
            ["det-formula", write(tmp_path, PAIR), "--n", "4"], capsys
        )
        high = json.loads(out)
        assert sorted(len(t["weight"]["gens"]) for t in low["terms"]) == [1, 2]
        assert all(len(t["weight"]["gens"]) == 2 for t in high["terms"])


class TestDetFormula:
    def test_two_term_expansion(self, tmp_path, capsys):
        code, out, _ = run_cli(
            ["det-formula", write(tmp_path, PAIR), "--oracle"], capsys
        )
        assert code == 0
        report = json.loads(out)
        assert report["sigma_count"] == 2
        assert report["oracle"] == "ok"
        assert [t["coeff"] for t in report["terms"]] == [1, -1]

    def test_unstable_exits_3(self, tmp_path, capsys):
        code, _, err = run_cli(["det-formula", write(tmp_path, UNSTABLE)], capsys)
        assert code == 3
        assert json.loads(err)["error"] == "refused"


class TestDecompose:
    def test_two_factors(self, tmp_path, capsys):
        code, out, _ = run_cli(["decompose", write(tmp_path, TWO_FACTOR)], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["prime"] is False and report["stable"] is True
        assert [f["intervals"] for f in report["factors"]] == [
            [[0, 4], [-2, 1]],
            [[1, 4]],
        ]


class TestCharacter:
    def test_pair(self, tmp_path, capsys):
        code, out, _ = run_cli(["character", write(tmp_path, PAIR)], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["dim"] == 6
        assert len(report["weights"]) == 6

    def test_multi_run_exits_3(self, tmp_path, capsys):
        code, _, err = run_cli(["character", write(tmp_path, EXAMPLE_ONE)], capsys)
        assert code == 3
        assert json.loads(err)["error"] == "refused"


class TestKL:
    def test_pair_table(self, tmp_path, capsys):
        code, out, _ = run_cli(["kl", write(tmp_path, PAIR)], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["mu_plus_rho"] == [0, -1]
        assert report["lambda_plus_rho"] == [2, 1]
        assert report["rows"] == [
            {"nu_plus_rho": [-1, 0], "c": -1},
            {"nu_plus_rho": [0, -1], "c": 1},
        ]

    def test_small_rank_exits_3(self, tmp_path, capsys):
        code, _, err = run_cli(["kl", write(tmp_path, EXAMPLE_ONE)], capsys)
        assert code == 3
        assert json.loads(err)["error"] == "refused"


class TestGen:
    def test_mu_lambda(self, tmp_path, capsys):
        params = {"family": "mu-lambda", "mu": [0, 1], "lambda": [3, 2], "n": 4}
        code, out, _ = run_cli(["gen", write(tmp_path, params)], capsys)
        assert code == 0
        assert json.loads(out)["snake"]["intervals"] == [[0, 2], [1, 3]]

    def test_nested(self, tmp_path, capsys):
        params = {
            "family": "nested",
            "breaks": [1, 3, 4],
            "lows": [1, 0, -1, 2],
            "highs": [6, 5, 3, 4],
        }
        code, out, _ = run_cli(["gen", write(tmp_path, params)], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["n_min"] == 6
        assert report["snake"]["breaks"] == [1, 3, 4]

    def test_family_violation_exits_2(self, tmp_path, capsys):
        params = {"family": "mu-lambda", "mu": [0, -1], "lambda": [3, 2], "n": 4}
        code, _, err = run_cli(["gen", write(tmp_path, params)], capsys)
        assert code == 2

    def test_constructed_duplicate_exits_2(self, tmp_path, capsys):
        params = {"family": "mu-lambda", "mu": [0, 0, 1], "lambda": [3, 2, 2], "n": 4}
        code, _, err = run_cli(["gen", write(tmp_path, params)], capsys)
        assert code == 2
        assert json.loads(err)["error"] == "invalid-snake"

    def test_unknown_family_exits_2(self, tmp_path, capsys):
        code, _, _ = run_cli(["gen", write(tmp_path, {"family": "spiral"})], capsys)
        assert code == 2

    def test_non_integer_entries_exit_2(self, tmp_path, capsys):
        params = {"family": "mu-lambda", "mu": [0, "1"], "lambda": [3, 2], "n": 4}
        code, _, err = run_cli(["gen", write(tmp_path, params)], capsys)
        assert code == 2
        assert json.loads(err)["error"] == "invalid-input"


class TestInternalSentinel:
    def test_oracle_mismatch_exits_4(self, tmp_path, capsys, monkeypatch):
        from snakemod import RingElement
        import snakemod.cli as cli_module

        monkeypatch.setattr(
            cli_module, "det_leibniz", lambda m: RingElement.zero(m.snake.n)
        )
        code, _, err = run_cli(
            ["det-formula", write(tmp_path, PAIR), "--oracle"], capsys
        )
        assert code == 4
        assert json.loads(err)["error"] == "internal-check"


class TestDeterminism:
    def test_byte_identical_runs(self, tmp_path, capsys):
        path = write(tmp_path, EXAMPLE_ONE)
        outputs = []
        for _ in range(2):
            code, out, _ = run_cli(["det-formula", path, "--oracle"], capsys)
            assert code == 0
            outputs.append(out)
        assert outputs[0] == outputs[1]

    def test_output_file_and_stdin(self, tmp_path):
        out_path = tmp_path / "report.json"
        proc = subprocess.run(
            [sys.executable, "-m", "snakemod.cli", "validate", "-", "-o", str(out_path)],
            input=json.dumps(PAIR),
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        report = json.loads(out_path.read_text(encoding="utf-8"))
        assert report["valid"] is True
        text = out_path.read_text(encoding="utf-8")
        assert not any(line != line.rstrip() for line in text.splitlines())
