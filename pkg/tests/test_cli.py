"""Command-line surface: JSON lines on stdout and exit statuses 0, 1 and 2."""
import json

import pytest

from powersum import __version__
from powersum.cli import build_parser, main, pair_record
from powersum.config import WORKERS_ENV
from powersum.tables import TABLE_A, table_row

CUBIC_LHS = "11,22,4,3,21,5"
CUBIC_RHS = "20,7,6,23,9,1"


@pytest.mark.cli
class TestVerify:
    def test_valid_pair(self, run_cli):
        status, lines = run_cli("verify", "--degrees", "3", "--lhs", CUBIC_LHS, "--rhs", CUBIC_RHS)
        assert status == 0
        assert lines[0]["pass"] is True
        assert lines[0]["residuals"] == {"3": "0"}

    def test_failing_degree(self, run_cli):
        status, lines = run_cli("verify", "--degrees", "3,4", "--lhs", CUBIC_LHS, "--rhs", CUBIC_RHS)
        assert status == 1
        assert lines[0]["pass"] is False
        assert lines[0]["residuals"]["4"] == "-5760"

    def test_rational_and_negative_entries(self, run_cli):
        status, lines = run_cli("verify", "--degrees", "2", "--lhs=-3,4", "--rhs", "5,0")
        assert status == 0
        assert lines[0]["pair"]["lhs"] == ["-3", "4"]

    def test_bad_degrees(self, run_cli):
        status, lines = run_cli("verify", "--degrees", "0", "--lhs", "1", "--rhs", "1")
        assert status == 2
        assert lines == []

    def test_report_line(self, run_cli):
        _, lines = run_cli("verify", "--degrees", "3", "--lhs", CUBIC_LHS, "--rhs", CUBIC_RHS)
        report = lines[-1]["report"]
        assert report["version"] == __version__
        assert report["records"] == 1
        assert report["exit_status"] == 0


@pytest.mark.cli
class TestGen:
    def test_deg2(self, run_cli):
        status, lines = run_cli("gen", "deg2", "--k", "2")
        assert status == 0
        assert len(lines[0]["pair"]["lhs"]) == 6

    def test_deg7_keeps_coincident_terms(self, run_cli):
        status, lines = run_cli("gen", "deg7", "--p", "3", "--q", "2", "--a", "1", "--b", "13")
        assert status == 0
        assert len(lines[0]["pair"]["lhs"]) == 6
        assert {"19", "-19"} <= set(lines[0]["pair"]["rhs"])
        assert lines[0]["pair"]["degrees"] == [1, 3, 5, 7]

    def test_deg9_solves_w(self, run_cli):
        status, lines = run_cli("gen", "deg9", "--a", "3", "--b", "4", "--t", "27/41")
        assert status == 0
        assert lines[0]["pair"]["degrees"] == [1, 2, 3, 9]

    def test_canonical_flag(self, run_cli):
        status, lines = run_cli("gen", "deg6", "--a1", "1", "--b2", "1", "--k", "1", "--canonical")
        assert status == 0
        lhs = [int(v) for v in lines[0]["pair"]["lhs"]]
        assert lhs == sorted(lhs, reverse=True)

    def test_deg6_default_is_not_trivial(self, run_cli):
        status, lines = run_cli("gen", "deg6", "--canonical")
        assert status == 0
        assert lines[0]["pair"]["lhs"] != lines[0]["pair"]["rhs"]

    @pytest.mark.parametrize(
        "argv",
        [
            ("gen", "deg8", "--a", "47", "--b", "82"),
            ("gen", "deg7", "--p", "3"),
            ("gen", "deg3-sym"),
            ("gen", "deg6", "--k", "1/2"),
            ("gen", "deg10"),
        ],
    )
    def test_usage_errors(self, run_cli, argv):
        status, _ = run_cli(*argv)
        assert status == 2

    def test_wrong_coefficient_count(self, run_cli):
        status, _ = run_cli("gen", "deg3-sym", "--x", "1", "--coeffs", "1,2,3")
        assert status == 2

    def test_symmetry_condition_failure(self, run_cli):
        status, lines = run_cli("gen", "deg3-sym", "--x", "1", "--coeffs", "1,2,3,4,5,6")
        assert status == 1
        assert lines[0]["error"] == "SymmetryConditionError"
        assert lines[0]["residual"] == "-21"

    def test_inadmissible_w(self, run_cli):
        status, lines = run_cli("gen", "deg9", "--a", "3", "--b", "4", "--t", "27/41", "--w", "2")
        assert status == 1
        assert lines[0]["error"] == "NotAdmissibleError"
        assert lines[-1]["report"]["exit_status"] == 1


@pytest.mark.cli
class TestExtend:
    def test_deg8_next_point(self, run_cli):
        status, lines = run_cli("extend", "--degree", "8", "--steps", "1")
        assert status == 0
        records = [line for line in lines if "pair" in line]
        assert records
        assert all(record["point"]["u"] == "-200/67" for record in records)
        assert all(record["step"] == 1 for record in records)

    def test_deg9_next_point(self, run_cli):
        status, lines = run_cli("extend", "--degree", "9")
        assert status == 0
        assert lines[0]["point"]["u"] == "3181201/12876603"
        assert lines[0]["pass"] is True

    def test_unknown_degree(self, run_cli):
        status, _ = run_cli("extend", "--degree", "7")
        assert status == 2


@pytest.mark.cli
class TestSearchCommand:
    def test_cubes(self, run_cli):
        status, lines = run_cli("search", "--degrees", "3", "--height", "10", "--unsigned")
        assert status == 0
        records = lines[:-1]
        assert records and all(record["pass"] for record in records)

    def test_work_ceiling(self, run_cli):
        status, lines = run_cli("--work-ceiling", "100", "search", "--degrees", "3", "--height", "10", "--unsigned")
        assert status == 2
        assert lines == []

    def test_signed_flags_exclusive(self, run_cli):
        status, _ = run_cli("search", "--degrees", "3", "--height", "4", "--signed", "--unsigned")
        assert status == 2

    def test_bad_worker_environment(self, run_cli, monkeypatch):
        monkeypatch.setenv(WORKERS_ENV, "zero")
        status, _ = run_cli("search", "--degrees", "3", "--height", "4")
        assert status == 2

    def test_workers_flag_overrides_environment(self, run_cli, monkeypatch):
        monkeypatch.setenv(WORKERS_ENV, "2")
        status, _ = run_cli("search", "--degrees", "3", "--height", "6", "--unsigned", "--workers", "1")
        assert status == 0


@pytest.mark.cli
class TestTableA:
    def test_rows(self, run_cli):
        status, lines = run_cli("table-a")
        assert status == 0
        assert len(lines) == len(TABLE_A) + 1
        assert lines[5]["note"] == table_row(7).note

    @pytest.mark.slow
    def test_audit(self, run_cli):
        status, lines = run_cli("table-a", "--audit")
        assert status == 0
        errata = [line for line in lines if "erratum" in line]
        assert errata and all(line["holds"] for line in errata)


@pytest.mark.cli
class TestEntryPoints:
    def test_version(self, run_cli, capsys):
        status, _ = run_cli("--version")
        assert status == 0
        assert __version__ in capsys.readouterr().out

    def test_log_level_is_case_insensitive(self):
        args = build_parser().parse_args(["--log-level", "debug", "table-a"])
        assert args.log_level == "DEBUG"

    def test_main_exits_with_status(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["verify", "--degrees", "3", "--lhs", CUBIC_LHS, "--rhs", CUBIC_RHS])
        assert info.value.code == 0
        lines = capsys.readouterr().out.splitlines()
        assert json.loads(lines[0])["pass"] is True

    def test_pair_record_extra_fields(self):
        record = pair_record(table_row(2).pair(), note="x")
        assert record["note"] == "x"
        assert record["source"] == "table-a n=2"
