import csv
import io
import json

import pytest

from bicyclic_spectra import (
    CaseRecord,
    VerificationReport,
    WeightFunction,
    canonical_form,
    graph6_decode,
    graph_g2,
    run_table,
    verify_extremal,
    verify_kelmans,
    verify_theorem41,
)
from bicyclic_spectra.cli import main, parse_graph_argument
from bicyclic_spectra.verify import printed_tolerance

Z1 = WeightFunction("zagreb1")
ERRATA_CELLS = {
    ("appendix_n6", "G2", "1"),
    ("appendix_n6", "G4", "(x+y)^3"),
    ("appendix_n7", "G4", "(x+y)^3"),
}


class TestReportModel:
    def test_ok_logic(self):
        rep = VerificationReport("demo", cases=[
            CaseRecord("a", {}, {}, passed=True),
            CaseRecord("b", {}, {}, passed=None),
        ])
        assert rep.ok
        rep.cases.append(CaseRecord("c", {}, {}, passed=False))
        assert not rep.ok
        assert rep.summary()["failed"] == 1
        assert rep.summary()["informative"] == 1

    def test_json_schema(self):
        rep = run_table("extended_table1")
        payload = json.loads(rep.to_json())
        assert set(payload) == {"campaign", "cases", "summary"}
        case = payload["cases"][0]
        assert set(case) == {"case_id", "inputs", "computed", "expected",
                             "passed", "tolerance", "note"}
        assert payload["summary"]["ok"] is True

    def test_csv_round_trip(self):
        rep = run_table("appendix_n6")
        rows = list(csv.reader(io.StringIO(rep.to_csv())))
        assert rows[0][0] == "case_id"
        assert len(rows) == len(rep.cases) + 1


class TestPrintedTolerance:
    @pytest.mark.parametrize("printed,expected", [
        ("17.0855", 5e-4), ("18.208", 5e-4), ("749.14", 5e-3),
        ("1159.8", 5e-2), ("1131", 0.5),
    ])
    def test_half_last_place_with_floor(self, printed, expected):
        assert printed_tolerance(printed) == pytest.approx(expected)


class TestTables:
    @pytest.mark.parametrize("table", ["appendix_n6", "appendix_n7", "extended_table1"])
    def test_all_tables_pass(self, table):
        rep = run_table(table)
        assert rep.ok, [c.case_id for c in rep.cases if not c.passed]

    def test_paper_values_carried_verbatim(self):
        rep = run_table("appendix_n6")
        cell = next(c for c in rep.cases if c.case_id == "appendix_n6/G2/x+y")
        assert cell.expected["printed"] == "17.0855"
        assert cell.expected["row"] == "G2"

    def test_errata_cells_flagged_and_pinned(self):
        seen = set()
        for table in ("appendix_n6", "appendix_n7"):
            for c in run_table(table).cases:
                if "erratum" in c.note:
                    parts = c.case_id.split("/")
                    seen.add((parts[0], parts[1], parts[2]))
                    assert c.expected["matches_printed"] is False
                    assert c.passed  # matches the recomputed reference
        assert seen == ERRATA_CELLS

    def test_bold_patterns(self):
        rep6 = run_table("appendix_n6")
        bolds = {c.case_id: c for c in rep6.cases if "/bold/" in c.case_id}
        assert all(c.computed["row_maximum"] == "G4" for c in bolds.values())
        rep7 = run_table("appendix_n7")
        bolds7 = {c.case_id.split("/")[-1]: c.computed["row_maximum"]
                  for c in rep7.cases if "/bold/" in c.case_id}
        assert bolds7 == {"1": "G4", "x+y": "G2", "(x+y)^2": "G2", "(x+y)^3": "G2"}

    def test_unknown_table(self):
        with pytest.raises(ValueError):
            run_table("appendix_n99")

    def test_determinism(self):
        a = run_table("appendix_n7").to_dict()
        b = run_table("appendix_n7").to_dict()
        a["summary"].pop("runtime_seconds")
        b["summary"].pop("runtime_seconds")
        assert a == b


class TestExtremalCampaign:
    def test_exhaustive_first_small(self):
        rep = verify_extremal(range(4, 7), [Z1], rank="first", mode="exhaustive")
        assert rep.ok
        assert all(c.computed["winner_is_g1"] for c in rep.cases)

    def test_exhaustive_second_small(self):
        rep = verify_extremal(range(6, 8), [Z1], rank="second", mode="exhaustive")
        assert rep.ok
        assert all(c.computed["second_class"] in ("G2", "G3", "G4") for c in rep.cases)

    def test_candidate_below_threshold_informative(self):
        rep = verify_extremal([6], [Z1], rank="second", mode="candidate")
        case = rep.cases[0]
        assert case.passed is None
        assert case.computed["winner"] == "G4"  # small-order regime

    def test_candidate_above_threshold(self):
        rep = verify_extremal(range(10, 14), [Z1], rank="second", mode="candidate")
        assert rep.ok
        assert all(c.computed["winner"] == "G2" for c in rep.cases)

    def test_per_base_family_winners(self):
        # within the infinity-base classes the top graph is G2, within the
        # theta-base classes it is G1, order by order
        rep = verify_extremal(range(5, 9), [Z1], rank="first", mode="exhaustive")
        for case in rep.cases:
            assert case.computed["infinity_base_winner_is_g2"], case.case_id
            assert case.computed["theta_base_winner_is_g1"], case.case_id

    def test_exhaustive_confirmation_at_zagreb1_threshold(self):
        # all 2678 classes at the first order where G2 takes second place
        rep = verify_extremal([10], [Z1], rank="second", mode="exhaustive")
        assert rep.ok
        assert rep.cases[0].computed["second_class"] == "G2"

    def test_non_pstar_weight_marked_not_applicable(self):
        rep = verify_extremal(range(6, 8), [WeightFunction("extended")],
                              rank="first", mode="exhaustive")
        assert rep.cases[0].passed is None
        assert "not applicable" in rep.cases[0].note

    def test_input_validation(self):
        with pytest.raises(ValueError):
            verify_extremal([6], [Z1], rank="third")
        with pytest.raises(ValueError):
            verify_extremal([6], [Z1], mode="guess")


class TestNearTiePolicy:
    def test_artificial_gap_requirement_fails_loudly(self):
        # demanding an absurd winning gap must fail with both certificates shown
        rep = verify_extremal([6], [Z1], rank="first", mode="exhaustive", min_gap=1e9)
        case = rep.cases[0]
        assert case.passed is False
        assert "near-tie" in case.note and "certificates" in case.note


class TestThreadEnvVar:
    def test_parallel_run_matches_serial(self, monkeypatch):
        serial = verify_theorem41(range(12, 16)).to_dict()
        monkeypatch.setenv("BICYCLIC_SPECTRA_THREADS", "4")
        parallel = verify_theorem41(range(12, 16)).to_dict()
        serial["summary"].pop("runtime_seconds")
        parallel["summary"].pop("runtime_seconds")
        assert serial == parallel

    def test_garbage_env_value_ignored(self, monkeypatch):
        monkeypatch.setenv("BICYCLIC_SPECTRA_THREADS", "lots")
        assert verify_theorem41(range(12, 13)).ok


class TestKelmansCampaign:
    def test_deterministic_under_seed(self):
        a = verify_kelmans(40, range(4, 7), [Z1], rng_seed=11)
        b = verify_kelmans(40, range(4, 7), [Z1], rng_seed=11)
        assert [c.to_dict() for c in a.cases] == [c.to_dict() for c in b.cases]

    def test_zero_violations_for_pstar(self):
        rep = verify_kelmans(60, range(4, 8), [Z1], rng_seed=5)
        case = rep.cases[0]
        assert case.passed and case.computed["violations"] == 0
        assert case.computed["worst_delta"] > -1e-9

    def test_extended_runs_informative(self):
        rep = verify_kelmans(60, range(4, 8), [WeightFunction("extended")], rng_seed=5)
        case = rep.cases[0]
        assert case.passed is None
        assert "lacks P*" in case.note

    def test_sample_validation(self):
        with pytest.raises(ValueError):
            verify_kelmans(0, range(4, 6), [Z1], rng_seed=1)


class TestTheorem41Campaign:
    def test_range_validation(self):
        with pytest.raises(ValueError):
            verify_theorem41(range(10, 13))
        with pytest.raises(ValueError):
            verify_theorem41(range(55, 66))

    def test_small_run(self):
        rep = verify_theorem41(range(12, 15))
        assert rep.ok
        chain = next(c for c in rep.cases if c.case_id == "theorem41/chain/n=12")
        assert chain.computed["rho_ex_g2"] == pytest.approx(15.8028, abs=5e-4)


class TestCli:
    def test_tables_exit_code_and_stdout(self, capsys):
        assert main(["tables", "appendix_n6"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["summary"]["ok"] is True

    def test_json_and_csv_files(self, tmp_path, capsys):
        jpath = tmp_path / "report.json"
        cpath = tmp_path / "report.csv"
        code = main(["tables", "extended_table1", "--json", str(jpath), "--csv", str(cpath)])
        capsys.readouterr()
        assert code == 0
        assert json.loads(jpath.read_text())["campaign"] == "tables/extended_table1"
        assert cpath.read_text().startswith("case_id")

    def test_extremal_subcommand(self, capsys):
        code = main(["extremal", "--n", "4..6", "--f", "zagreb1", "--rank", "1",
                     "--mode", "exhaustive"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0 and payload["summary"]["failed"] == 0

    def test_kelmans_subcommand_requires_seed(self, capsys):
        with pytest.raises(SystemExit):
            main(["kelmans", "--samples", "10", "--f", "zagreb1"])
        capsys.readouterr()

    def test_kelmans_subcommand(self, capsys):
        code = main(["kelmans", "--samples", "25", "--seed", "9", "--f", "zagreb1",
                     "--n", "4..6"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0
        assert payload["cases"][0]["inputs"]["seed"] == 9

    def test_enumerate_streams_graph6(self, capsys):
        code = main(["enumerate", "--n", "5", "--graph6"])
        out = capsys.readouterr().out.strip().splitlines()
        assert code == 0
        summary = json.loads(out[-1])
        assert summary["count"] == 5
        decoded = [graph6_decode(line) for line in out[:-1]]
        assert len(decoded) == 5
        assert all(g.is_bicyclic() for g in decoded)

    def test_enumerate_max_degree(self, capsys):
        code = main(["enumerate", "--n", "7", "--max-degree", "6"])
        summary = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
        assert code == 0 and summary["count"] == 2

    def test_enumerate_targeted_family_via_cli(self, capsys):
        code = main(["enumerate", "--n", "12", "--max-degree", "10", "--graph6"])
        out = capsys.readouterr().out.strip().splitlines()
        assert code == 0
        assert json.loads(out[-1])["count"] == 9
        assert len(out) == 10

    def test_spectral_subcommand(self, capsys):
        code = main(["spectral", "--graph", "G2:6", "--f", "zagreb1", "--full-spectrum"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0
        assert payload["rho"] == pytest.approx(17.0855, abs=5e-4)
        assert len(payload["spectrum"]) == 6
        assert payload["n"] == 6 and payload["m"] == 7

    def test_spectral_accepts_graph6(self, capsys):
        from bicyclic_spectra import graph6_encode
        s = graph6_encode(graph_g2(6))
        code = main(["spectral", "--graph", s, "--f", "1"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0
        assert payload["graph6"] == s

    def test_theorem41_subcommand(self, capsys):
        code = main(["theorem41", "--n", "12..13"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0 and payload["summary"]["ok"]

    def test_failing_report_exits_nonzero(self, capsys):
        import argparse
        from bicyclic_spectra.cli import _emit
        rep = VerificationReport("demo", cases=[CaseRecord("x", {}, {}, passed=False)])
        ns = argparse.Namespace(json_out=None, csv_out=None)
        assert _emit(rep, ns) == 1
        capsys.readouterr()

    def test_module_entry_point(self):
        import subprocess, sys
        proc = subprocess.run(
            [sys.executable, "-m", "bicyclic_spectra", "enumerate", "--n", "4"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert json.loads(proc.stdout.strip().splitlines()[-1])["count"] == 1


class TestParseGraphArgument:
    def test_named(self):
        assert canonical_form(parse_graph_argument("G1:8")) == canonical_form(
            parse_graph_argument("G1:8"))
        assert parse_graph_argument("B:3,1,3").n == 5
        assert parse_graph_argument("P:2,1,2").n == 4

    def test_graph6_passthrough(self):
        from bicyclic_spectra import graph6_encode
        g = graph_g2(7)
        assert parse_graph_argument(graph6_encode(g)) == g

    def test_rejects_garbage(self):
        import argparse
        with pytest.raises(argparse.ArgumentTypeError):
            parse_graph_argument("nonsense:::")
