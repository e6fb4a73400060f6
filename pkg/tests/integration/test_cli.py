"""Integration tests for the command line interface."""

import json

import pytest

from bayesarith.cli.commands import EXIT_DISCREPANCY, EXIT_OK, EXIT_USAGE, main
from bayesarith.factoring.sweep import outcome_of
from bayesarith.report.claims import registered_claims
from bayesarith.report.schemas import ClaimRecord, SweepRow, Verdict


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def addition_file(tmp_path, capsys):
    path = tmp_path / "add.txt"
    code, _, _ = run(
        capsys, "encode-add", "--n", "2", "--u", "2", "--v", "3", "--output", str(path)
    )
    assert code == EXIT_OK
    return path


class TestEncode:
    def test_addition_stats(self, capsys):
        code, out, _ = run(capsys, "encode-add", "--n", "2", "--u", "2", "--v", "3", "--stats")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[0] == "unknowns=40 equations=44"
        assert lines[1] == "positive=13 data=4 structural=4 universal=36"

    def test_addition_equations(self, capsys):
        code, out, _ = run(capsys, "encode-add", "--n", "1", "--u", "0", "--v", "1")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "unknowns=12 equations=12"
        assert len(out.splitlines()) == 13

    def test_addition_json(self, capsys):
        code, out, _ = run(capsys, "--json", "encode-add", "--n", "1", "--u", "0", "--v", "1")
        payload = json.loads(out)
        assert payload["counts"]["unknowns"] == 12
        assert len(payload["equations"]) == 12

    def test_factoring_stats(self, capsys):
        code, out, _ = run(capsys, "encode-mul", "--factor", "6", "--stats")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "unknowns=48 equations=48"

    def test_shifted_rows(self, capsys):
        code, out, _ = run(
            capsys, "encode-mul", "--n", "2", "--m", "2", "--shifted", "--rows", "3", "1", "--stats"
        )
        assert code == EXIT_OK
        assert "data=4" in out.splitlines()[1]

    def test_formula_only(self, capsys):
        code, out, _ = run(
            capsys, "--json", "encode-mul", "--n", "2", "--m", "3", "--shifted", "--formula-only"
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["unknowns"] == 60
        assert payload["universal"] == 50

    def test_formula_only_for_a_768_bit_value(self, capsys):
        code, out, _ = run(capsys, "encode-mul", "--factor", str(1 << 767), "--formula-only")
        assert code == EXIT_OK
        assert out.strip() == "unknowns=8813590 equations=9987098"

    def test_stream(self, tmp_path, capsys):
        path = tmp_path / "c6.txt"
        code, out, _ = run(capsys, "encode-mul", "--factor", "6", "--stream", str(path))
        assert code == EXIT_OK
        assert out.splitlines()[0] == "unknowns=48 equations=48"
        assert path.read_text(encoding="utf-8").startswith("vars 48 rows 48\n")

    def test_roles(self, capsys):
        code, out, _ = run(capsys, "roles", "--n", "2")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[0] == "X1 = U_0"
        assert lines[-1] == "X8 = R_2"

    @pytest.mark.parametrize(
        "argv",
        [
            ["encode-add"],
            ["encode-add", "--n", "2", "--u", "4"],
            ["encode-mul", "--n", "2"],
            ["encode-mul", "--factor", "6", "--n", "2"],
            ["encode-mul", "--n", "2", "--m", "2", "--stream", "x.txt"],
            ["--mode", "quad", "factor", "6"],
            ["factor", "3"],
            ["sweep", "2", "5"],
            ["encode-mul", "--n", "2", "--m", "2", "--rows", "3", "1"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == EXIT_USAGE
        assert "error" in err

    def test_no_command_prints_help(self, capsys):
        code, out, _ = run(capsys)
        assert code == EXIT_OK
        assert "encode-add" in out


class TestFactorCommand:
    def test_six(self, capsys):
        code, out, _ = run(capsys, "factor", "6")
        assert code == EXIT_OK
        assert out.strip() == "Composite 2×3"

    def test_verbose(self, capsys):
        code, out, _ = run(capsys, "factor", "6", "-v")
        lines = out.splitlines()
        assert lines[0] == "Composite 2×3"
        assert lines[1] == " * bit 0=1: max P(11) = 1"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "--json", "factor", "6")
        record = json.loads(out)
        assert (record["A"], record["B"]) == (2, 3)
        assert record["lp_dims"] == [48, 48]
        assert record["decisions"][0]["objective"] == "P(11)"

    def test_trace(self, capsys):
        code, out, _ = run(capsys, "factor", "6", "--trace")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[0] == "Composite 2×3"
        assert lines[1].startswith("presolve: ")
        assert any(" = " in line for line in lines[2:])

    def test_json_trace(self, capsys):
        _, plain, _ = run(capsys, "--json", "factor", "6")
        assert json.loads(plain)["presolve_trace"] is None
        code, out, _ = run(capsys, "--json", "factor", "6", "--trace")
        trace = json.loads(out)["presolve_trace"]
        assert code == EXIT_OK
        assert trace
        assert all(set(entry) in ({"unknown", "value"}, {"unknown", "alias"}) for entry in trace)

    def test_float_mode(self, capsys):
        code, out, _ = run(capsys, "--mode", "float", "factor", "6")
        assert code == EXIT_OK
        assert out.startswith("Composite")

    def test_prime_is_not_factored(self, capsys):
        code, out, _ = run(capsys, "factor", "7")
        assert code in (EXIT_OK, EXIT_DISCREPANCY)
        assert not out.startswith("Composite")

    def test_sweep_json(self, tmp_path, capsys):
        output = tmp_path / "sweep.jsonl"
        code, out, _ = run(capsys, "--json", "sweep", "4", "6", "--output", str(output))
        lines = out.splitlines()
        assert code in (EXIT_OK, EXIT_DISCREPANCY)
        assert [json.loads(line)["C"] for line in lines[:3]] == [4, 5, 6]
        assert json.loads(lines[3])["total"] == 3
        assert len(output.read_text(encoding="utf-8").splitlines()) == 3


class TestSolveAndExport:
    def test_feasible(self, capsys, addition_file):
        code, out, _ = run(capsys, "solve", str(addition_file))
        assert code == EXIT_OK
        assert out.splitlines()[0] == "status=feasible"

    def test_rank(self, capsys, addition_file):
        code, out, _ = run(capsys, "solve", str(addition_file), "--rank")
        assert out.strip() == "rank=35"

    def test_float_rank(self, capsys, addition_file):
        code, out, _ = run(capsys, "--mode", "float", "solve", str(addition_file), "--rank")
        assert out.strip() == "rank=35"

    def test_objective(self, capsys, addition_file):
        # x0 is P(1): U_0 = 0 fixes it to zero
        code, out, _ = run(capsys, "--json", "solve", str(addition_file), "--objective", "x0")
        payload = json.loads(out)
        assert payload["status"] == "feasible"
        assert payload["objective"] == "0"

    def test_infeasible_with_certificate(self, tmp_path, capsys):
        path = tmp_path / "sub.txt"
        run(capsys, "encode-add", "--n", "1", "--u", "1", "--s", "0", "--output", str(path))
        code, out, _ = run(capsys, "solve", str(path))
        assert code == EXIT_OK
        assert out.splitlines()[0] == "status=infeasible"
        assert "certificate verified=True" in out

    def test_export_lp(self, tmp_path, capsys, addition_file):
        target = tmp_path / "add.lp"
        code, _, _ = run(
            capsys, "export", str(addition_file), "--objective", "x3 + x5", "--output", str(target)
        )
        text = target.read_text(encoding="utf-8")
        assert code == EXIT_OK
        assert " obj: 1 x3 + 1 x5" in text
        assert "Subject To" in text

    def test_export_to_stdout(self, capsys, addition_file):
        code, out, _ = run(capsys, "export", str(addition_file), "--format", "native")
        assert out.startswith("vars 40 rows 44")

    def test_malformed_file(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("vars 2 rows 1\n1*0 + 1*1 = 1\n", encoding="utf-8")
        code, _, err = run(capsys, "solve", str(path))
        assert code == EXIT_USAGE
        assert "line 2" in err


class TestVerifyCommands:
    def test_counts(self, capsys):
        code, out, _ = run(capsys, "verify-counts", "--max-n", "3", "--max-m", "3")
        assert code == EXIT_OK
        assert out.strip() == "11 systems checked, all match"

    def test_claims_count_only(self, tmp_path, capsys):
        output = tmp_path / "claims.jsonl"
        code, out, _ = run(
            capsys,
            "verify-claims",
            "--count-only",
            "--add-max-n",
            "4",
            "--mul-max",
            "4",
            "--output",
            str(output),
        )
        assert code == EXIT_OK
        assert f"Report written to {output}" in out
        lines = output.read_text(encoding="utf-8").splitlines()
        records = [ClaimRecord.model_validate_json(line) for line in lines]
        assert len(records) == len(registered_claims())

    def test_claims_default_location(self, capsys, _isolated_home):
        code, _, _ = run(
            capsys, "verify-claims", "--count-only", "--add-max-n", "3", "--mul-max", "3"
        )
        assert code == EXIT_OK
        assert (_isolated_home / "reports" / "claims.jsonl").exists()

    def test_claims_bounds(self, capsys):
        code, _, _ = run(capsys, "verify-claims", "--count-only", "--mul-max", "1")
        assert code == EXIT_USAGE


class TestExitCodes:
    @pytest.fixture
    def sweep_status(self, monkeypatch):
        statuses = {}

        def fake_row(value, settings):
            status = statuses.get(value, "composite")
            return SweepRow(
                C=value,
                status=status,
                A=2 if status == "composite" else None,
                B=value // 2 if status == "composite" else None,
                truth="composite",
                outcome=outcome_of(False, status),
            )

        monkeypatch.setattr("bayesarith.factoring.sweep.sweep_row", fake_row)
        return statuses

    def test_clean_sweep(self, capsys, sweep_status):
        code, _, _ = run(capsys, "sweep", "4", "6", "--jobs", "1")
        assert code == EXIT_OK

    def test_sweep_with_a_discrepancy(self, capsys, sweep_status):
        sweep_status[6] = "discrepancy"
        code, out, _ = run(capsys, "--json", "sweep", "4", "6", "--jobs", "1")
        assert code == EXIT_DISCREPANCY
        assert json.loads(out.splitlines()[-1])["discrepancies"] == 1

    def test_missed_composite_is_not_a_discrepancy(self, capsys, sweep_status):
        sweep_status[4] = "prime-by-procedure"
        code, _, _ = run(capsys, "sweep", "4", "6", "--jobs", "1")
        assert code == EXIT_OK

    @pytest.mark.parametrize(
        "verdicts, expected",
        [
            ([Verdict.MATCH, Verdict.TYPO_SUSPECTED], EXIT_OK),
            ([Verdict.MATCH, Verdict.NOT_RUN], EXIT_OK),
            ([Verdict.MATCH, Verdict.MISMATCH, Verdict.TYPO_SUSPECTED], EXIT_DISCREPANCY),
        ],
    )
    def test_claims(self, tmp_path, capsys, monkeypatch, verdicts, expected):
        records = [
            ClaimRecord(claim_id=f"c{i}", location="here", description="d", verdict=verdict)
            for i, verdict in enumerate(verdicts)
        ]
        monkeypatch.setattr("bayesarith.cli.commands.verify_all", lambda config: records)
        output = tmp_path / "claims.jsonl"
        code, _, _ = run(capsys, "verify-claims", "--output", str(output))
        assert code == expected
        assert len(output.read_text(encoding="utf-8").splitlines()) == len(verdicts)
