import json
import math
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest

from segrank.cli import RunRecord, main

REPO_ROOT = Path(__file__).resolve().parent.parent
SCHEMA = json.loads((REPO_ROOT / "schemas" / "run_record.json").read_text())


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--json")
    assert code == 0, err
    record = json.loads(out)
    jsonschema.validate(record, SCHEMA)
    return record


class TestEstimate:
    def test_small_run(self, capsys):
        record = run_json(
            capsys,
            "estimate", "--format", "2x2x2", "--trials", "500", "--seed", "7",
        )
        assert record["command"] == "estimate"
        p2 = record["results"]["rank_probabilities"]["2"]["p_hat"]
        assert abs(p2 - math.pi / 4) < 0.08
        dist = record["results"]["count_distribution"]
        assert dist["support"] == [0, 2]

    def test_tall_format(self, capsys):
        record = run_json(
            capsys,
            "estimate", "--format", "3x4x11", "--trials", "50", "--seed", "1",
        )
        assert record["results"]["rank_probabilities"]["11"]["p_hat"] == 1.0

    def test_unsupported_boundary_format_exits_2(self, capsys):
        code, out, err = run_cli(
            capsys, "estimate", "--format", "4x5x13", "--trials", "10"
        )
        assert code == 2
        assert "unsupported" in err.lower()

    def test_malformed_format_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "estimate", "--format", "4x5")
        assert code == 2

    def test_failed_run_writes_nothing(self, capsys, tmp_path):
        target = tmp_path / "out.json"
        code, _, _ = run_cli(
            capsys,
            "estimate", "--format", "4x5x13", "--trials", "10",
            "--json", "--output", str(target),
        )
        assert code == 2
        assert not target.exists()
        assert list(tmp_path.iterdir()) == []

    def test_output_file_atomic_write(self, capsys, tmp_path):
        target = tmp_path / "run.json"
        code, out, _ = run_cli(
            capsys,
            "estimate", "--format", "2x2x2", "--trials", "60", "--seed", "3",
            "--json", "--output", str(target),
        )
        assert code == 0
        assert out == ""
        record = json.loads(target.read_text())
        jsonschema.validate(record, SCHEMA)
        leftovers = [p for p in tmp_path.iterdir() if p != target]
        assert leftovers == []

    def test_deterministic_across_workers(self, capsys):
        records = []
        for workers in ("1", "2"):
            record = run_json(
                capsys,
                "estimate", "--format", "2x2x2", "--trials", "200",
                "--seed", "5", "--workers", workers,
            )
            record.pop("elapsed_seconds")
            records.append(record)
        assert records[0] == records[1]

    def test_csv_header(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "estimate", "--format", "2x2x2", "--trials", "50", "--seed", "2",
            "--csv",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "quantity,successes,trials,rejected,estimate,ci_lo,ci_hi"
        assert any(line.startswith("rank=2,") for line in lines)
        assert any(line.startswith("count=0,") for line in lines)


class TestExpectation:
    def test_three_by_seventeen(self, capsys):
        record = run_json(capsys, "expectation", "--m", "3", "--n", "17")
        assert record["results"]["expected_intersections"] == pytest.approx(17.0)
        assert record["results"]["odd_product"] == pytest.approx(17.0)

    def test_two_by_two(self, capsys):
        record = run_json(capsys, "expectation", "--m", "2", "--n", "2")
        assert record["results"]["expected_intersections"] == pytest.approx(
            math.pi / 2
        )
        assert "odd_product" not in record["results"]

    def test_asymptotic_ratio(self, capsys):
        record = run_json(
            capsys,
            "expectation", "--m", "5", "--n", "100",
            "--asymptotic", "--n-grid", "100,500",
        )
        ratios = record["results"]["asymptotic_ratios"]
        assert abs(ratios["100"] - 1.0) < 0.05
        assert abs(ratios["500"] - 1.0) < 0.01
        assert record["results"]["asymptotic_coefficient"] == pytest.approx(1 / 3)

    def test_invalid_order_exits_2(self, capsys):
        code, _, _ = run_cli(capsys, "expectation", "--m", "5", "--n", "3")
        assert code == 2


class TestLines:
    def test_small_run(self, capsys):
        record = run_json(
            capsys, "lines", "--trials", "120", "--seed", "1"
        )
        results = record["results"]
        half = (results["expected_ci_hi"] - results["expected_ci_lo"]) / 2
        assert 11 - half <= results["expected_lines"] <= 15 + half
        total = sum(
            entry["successes"]
            for entry in results["line_probabilities"].values()
        )
        assert total == 120 - record["rejected"]


class TestPolytope:
    def test_exact_vertices(self, capsys):
        record = run_json(capsys, "polytope")
        vertices = {
            (Fraction(e), Fraction(p)) for e, p in record["results"]["vertices"]
        }
        assert vertices == {
            (Fraction(11), Fraction(0)),
            (Fraction(12), Fraction(0)),
            (Fraction(12), Fraction(1, 4)),
            (Fraction(15), Fraction(1, 2)),
        }
        assert record["results"]["expected_lines_range"] == ["11", "15"]

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "polytope", "--csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "vertex,expected_lines,p27"
        assert len(lines) == 5


class TestInvariants:
    def test_three_by_three(self, capsys):
        record = run_json(capsys, "invariants", "--m", "3", "--n", "3")
        results = record["results"]
        assert results["degree"] == 6
        assert results["degree_odd"] is False
        assert results["conjugate_real_count"] == 2
        assert results["codim"] == 4
        assert results["expected_intersections"] == pytest.approx(3.0)

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--m", "2", "--n", "4", "--csv")
        header, row = out.splitlines()
        assert header.startswith("m,n,dim,codim,degree")
        assert row.startswith("2,4,")


class TestRecordPlumbing:
    def test_json_roundtrip(self, capsys):
        record = run_json(capsys, "invariants", "--m", "2", "--n", "2")
        parsed = RunRecord.from_dict(record)
        assert RunRecord.from_json(parsed.to_json()) == parsed

    def test_repeated_runs_identical_up_to_elapsed(self, capsys):
        first = run_json(
            capsys, "estimate", "--format", "2x3x3", "--trials", "80", "--seed", "4"
        )
        second = run_json(
            capsys, "estimate", "--format", "2x3x3", "--trials", "80", "--seed", "4"
        )
        first.pop("elapsed_seconds")
        second.pop("elapsed_seconds")
        assert first == second

    def test_console_script_installed(self):
        out = subprocess.run(
            [sys.executable, "-m", "segrank.cli", "polytope", "--json"],
            capture_output=True,
            text=True,
            check=True,
        )
        record = json.loads(out.stdout)
        jsonschema.validate(record, SCHEMA)

    def test_human_output_mentions_command(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--m", "3", "--n", "4")
        assert code == 0
        assert "invariants" in out
        assert "degree: 10" in out

    def test_excess_rejection_rate_exits_3(self, capsys, monkeypatch):
        import segrank.cli as cli_mod
        from segrank.classify import MonteCarloRun, ProbEstimate
        from segrank.formats import Format

        def fake_run(fmt, trials, seed, workers=1):
            return MonteCarloRun(
                format=fmt,
                trials=trials,
                seed=seed,
                rejected=trials // 2,
                rank_estimates={
                    2: ProbEstimate.from_tally(trials // 2, trials, trials // 2)
                },
                counts=None,
            )

        monkeypatch.setattr(cli_mod, "monte_carlo_rank", fake_run)
        code, out, err = run_cli(
            capsys, "estimate", "--format", "2x2x2", "--trials", "100"
        )
        assert code == 3
        assert "rejection rate" in err

    def test_workers_env_default(self, monkeypatch):
        from segrank.cli import build_parser

        monkeypatch.setenv("SEGRANK_WORKERS", "5")
        args = build_parser().parse_args(
            ["estimate", "--format", "2x2x2", "--trials", "1"]
        )
        assert args.workers == 5
