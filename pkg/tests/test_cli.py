"""End-to-end tests of the command-line interface."""

import json

import pytest

from hyperstate.cli import main

EXAMPLE_EDGES_FLAG = "0,3;0,2,3;1,2,3"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_state_json_matches_published_vector(capsys):
    code, out, _ = run_cli(capsys, "state", "--d", "4", "--edges", EXAMPLE_EDGES_FLAG,
                           "--format", "json")
    assert code == 0
    amplitudes = json.loads(out)
    signs = [round(re * 4) for re, _ in amplitudes]
    assert signs == [1, 1, 1, 1, 1, 1, 1, -1, 1, -1, 1, 1, 1, -1, 1, -1]
    assert all(im == 0.0 for _, im in amplitudes)


def test_state_table_and_csv(capsys):
    code, out, _ = run_cli(capsys, "state", "--d", "2", "--edges", "0,1")
    assert code == 0 and "|3>" in out and "-0.5" in out
    code, out, _ = run_cli(capsys, "state", "--d", "2", "--edges", "0,1", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "n,re,im"
    assert out.splitlines()[4].startswith("3,-0.5")


def test_circuit_text(capsys):
    code, out, _ = run_cli(capsys, "circuit", "--d", "3", "--edges", "0,1,2")
    assert code == 0
    assert out.splitlines() == ["H 0", "H 1", "H 2", "CZ 0 1 2"]


def test_circuit_json(capsys):
    code, out, _ = run_cli(capsys, "circuit", "--d", "2", "--edges", "", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"d": 2, "gates": [["H", [0]], ["H", [1]]]}


def test_squeeze_published_value(capsys):
    code, out, _ = run_cli(capsys, "squeeze", "--d", "4", "--edges", "0,1,2,3",
                           "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["s_p"] == pytest.approx(-0.2238, abs=1e-3)
    assert report["var_n"] == 21.25
    assert list(report) == ["d", "edges", "mean_n", "var_n", "mean_p", "var_p",
                            "half_comm", "s_n", "s_p"]


def test_agarwal_tara_exact(capsys):
    code, out, _ = run_cli(capsys, "agarwal-tara", "--d", "2", "--n", "2", "--exact",
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["a_n_exact"] == "-1/6"
    assert data["a_n"] == pytest.approx(-1 / 6)
    assert data["paper_discrepancies"] == []


def test_agarwal_tara_reports_discrepancies(capsys):
    code, out, _ = run_cli(capsys, "agarwal-tara", "--d", "3", "--n", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert any("mu_5" in note for note in data["paper_discrepancies"])


def test_agarwal_tara_insufficient_dimension(capsys):
    code, _, err = run_cli(capsys, "agarwal-tara", "--d", "2", "--n", "3")
    assert code == 1
    assert err.startswith("error:")


def test_coherence_json(capsys):
    code, out, _ = run_cli(capsys, "coherence", "--d", "4", "--edges", EXAMPLE_EDGES_FLAG,
                           "--basis", "number", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["c_l1"] == 15.0
    assert data["basis"] == "number"


def test_operators_check_all(capsys):
    code, out, _ = run_cli(capsys, "operators", "--d", "3", "--check-all", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["phase_operator"]["hermitian"]["holds"]
    assert report["phase_operator"]["circulant"]["holds"]
    assert report["number_phase_commutator"]["skew_hermitian"]["holds"]
    assert report["number_phase_commutator"]["toeplitz"]["holds"]
    assert report["check_all"]["fft_vs_dense_max_error"] < 1e-10
    assert report["check_all"]["eigenvalues_within_row_sum"] is True
    assert report["check_all"]["eigenvalues_within_stated_formula"] is False


def test_sweep_to_file(capsys, tmp_path):
    out_path = tmp_path / "sweep.csv"
    code, out, _ = run_cli(capsys, "sweep", "--family", "dminus1", "--d", "4",
                           "--format", "csv", "--out", str(out_path))
    assert code == 0
    assert out_path.exists()
    header = out_path.read_text().splitlines()[0]
    assert header.startswith("d,edges,s_p,")
    assert "family dminus1(d=4)" in out


def test_sweep_json_stdout(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--family", "complete-k", "--d", "5", "--k", "4",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["count"] == 1
    assert payload["records"][0]["s_p"] == pytest.approx(-0.401, abs=1e-3)


def test_sweep_requires_k_for_complete(capsys):
    code, _, err = run_cli(capsys, "sweep", "--family", "complete-k", "--d", "5")
    assert code == 1 and "requires --k" in err


def test_sweep_cache_dir(capsys, tmp_path):
    for _ in range(2):
        code, out, _ = run_cli(capsys, "sweep", "--family", "dminus1", "--d", "4",
                               "--cache-dir", str(tmp_path))
        assert code == 0
    assert len(list(tmp_path.glob("*.json"))) == 1


def test_sweep_cache_env_var(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("HYPERSTATE_CACHE", str(tmp_path))
    code, _, _ = run_cli(capsys, "sweep", "--family", "dminus1", "--d", "4")
    assert code == 0
    assert len(list(tmp_path.glob("*.json"))) == 1


def test_unknown_flag_is_user_error(capsys):
    code, _, err = run_cli(capsys, "state", "--d", "4", "--bogus")
    assert code == 1
    assert err.startswith("error:") and err.count("\n") == 1


def test_unknown_command_is_user_error(capsys):
    code, _, err = run_cli(capsys, "transmogrify")
    assert code == 1


def test_missing_required_flag(capsys):
    code, _, err = run_cli(capsys, "state")
    assert code == 1


def test_malformed_edges_is_user_error(capsys):
    code, _, err = run_cli(capsys, "state", "--d", "4", "--edges", "0,,1")
    assert code == 1
    assert err.startswith("error:")


def test_guard_violation_exit_code(capsys):
    code, _, err = run_cli(capsys, "state", "--d", "30")
    assert code == 2
    assert err.startswith("error: guard:")


def test_version(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0


def test_emit_plot_data(tmp_path):
    from hyperstate.cli import emit_plot_data

    path = tmp_path / "series.dat"
    emit_plot_data([(4, -0.2238), (5, -0.6817)], str(path), name="single_full_s_p")
    lines = path.read_text().splitlines()
    assert lines[0] == "# single_full_s_p"
    assert lines[1:] == ["4 -0.2238", "5 -0.6817"]
    empty = tmp_path / "empty.dat"
    emit_plot_data([], str(empty), name="nothing")
    assert empty.read_text() == "# nothing\n"


def test_reproduce_cli(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "reproduce", "--format", "json",
                           "--plot-dir", str(tmp_path / "plots"))
    # exit 2: the stated eigenvalue-bound formula check fails by design
    assert code == 2
    results = {r["key"]: r for r in json.loads(out)}
    failing = [key for key, r in results.items() if r["status"] == "FAIL"]
    assert failing == ["C10b"]
    assert any("mu_5 at d=3" in note for note in results["C7"]["notes"])
    series = list((tmp_path / "plots").glob("*.dat"))
    assert len(series) >= 9
    table1 = (tmp_path / "plots" / "single_full_s_p.dat").read_text().splitlines()
    assert table1[0].startswith("#") and len(table1) == 11
