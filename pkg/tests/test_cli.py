from __future__ import annotations

import io
import json

import pytest

from strongclique import build_graph, format_graph6
from strongclique.cli import main, parse_input_graphs

C5_EDGE_LIST = "5\n0 1\n1 2\n2 3\n3 4\n0 4\n"
K33 = format_graph6(
    build_graph(6, [(i, j + 3) for i in range(3) for j in range(3)])
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- input handling ---


def test_input_sniffing_edge_list_versus_graph6() -> None:
    (g,) = parse_input_graphs(C5_EDGE_LIST)
    assert (g.n, g.m) == (5, 5)
    graphs = parse_input_graphs("Bw\nBw\n")
    assert [h.n for h in graphs] == [3, 3]
    with pytest.raises(ValueError):
        parse_input_graphs("")
    with pytest.raises(ValueError):
        parse_input_graphs("3\n0 1 2\n")
    with pytest.raises(ValueError):
        parse_input_graphs("3\n0 x\n")


def test_compute_on_an_edge_list_file(tmp_path, capsys) -> None:
    path = tmp_path / "c5.txt"
    path.write_text(C5_EDGE_LIST)
    code, out, _ = run(capsys, "compute", str(path))
    assert code == 0
    assert out.splitlines() == [
        "omega2' = 5",
        "witness: 0-1 0-4 1-2 2-3 3-4",
    ]


def test_compute_reads_stdin(capsys, monkeypatch) -> None:
    monkeypatch.setattr("sys.stdin", io.StringIO("Bw\n"))
    code, out, _ = run(capsys, "compute", "-")
    assert code == 0
    assert out.splitlines() == ["omega2' = 3", "witness: 0-1 0-2 1-2"]


def test_compute_chi_flag(tmp_path, capsys) -> None:
    path = tmp_path / "c4.g6"
    path.write_text(format_graph6(build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])) + "\n")
    code, out, _ = run(capsys, "compute", str(path), "--chi")
    assert code == 0
    assert "chi2' = 4" in out.splitlines()


def test_compute_chi_budget_refusal_is_not_an_error(tmp_path, capsys) -> None:
    path = tmp_path / "c5.txt"
    path.write_text(C5_EDGE_LIST)
    code, out, _ = run(capsys, "compute", str(path), "--chi", "--chi-budget", "3")
    assert code == 0
    assert any(line.startswith("chi2' skipped:") for line in out.splitlines())


def test_compute_rejects_batches(tmp_path, capsys) -> None:
    path = tmp_path / "two.g6"
    path.write_text("Bw\nBw\n")
    code, _, err = run(capsys, "compute", str(path))
    assert code == 1
    assert "expected a single graph, found 2" in err
    assert "sweep" in err


def test_missing_file_is_exit_one(capsys) -> None:
    code, _, err = run(capsys, "compute", "/no/such/file")
    assert code == 1
    assert err.startswith("error: [Errno 2]")


def test_malformed_graph6_is_exit_one(tmp_path, capsys) -> None:
    path = tmp_path / "bad.g6"
    path.write_text("B\n")
    code, _, err = run(capsys, "compute", str(path))
    assert code == 1
    assert err.startswith("error:")


# --- profile ---


def test_profile_output_lines(tmp_path, capsys) -> None:
    path = tmp_path / "k33.g6"
    path.write_text(K33 + "\n")
    code, out, _ = run(capsys, "profile", str(path))
    assert code == 0
    assert out.splitlines() == [
        "n = 6, m = 9, delta = 3",
        "sigma = 6",
        "bipartite: yes",
        "girth = 4",
        "cycle lengths present (3..6): 4 6",
        "longest path order (window 7): 6",
    ]


def test_profile_acyclic_host(tmp_path, capsys) -> None:
    path = tmp_path / "p3.txt"
    path.write_text("3\n0 1\n1 2\n")
    code, out, _ = run(capsys, "profile", str(path))
    assert code == 0
    lines = out.splitlines()
    assert "girth = acyclic" in lines
    assert "cycle lengths present (3..3): none" in lines


# --- verify ---


def test_verify_reports_holds_and_tight(tmp_path, capsys) -> None:
    path = tmp_path / "k33.g6"
    path.write_text(K33 + "\n")
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    lines = out.splitlines()
    assert "omega2' = 9" in lines
    assert "T2.2: holds, tight, 9 <= 9" in lines
    assert any(line.startswith("L8: holds") for line in lines)
    assert "CANDIDATE" not in out


def test_verify_chi_targets_opt_in(tmp_path, capsys) -> None:
    path = tmp_path / "c5.txt"
    path.write_text(C5_EDGE_LIST)
    code, out, _ = run(capsys, "verify", str(path), "--chi")
    assert code == 0
    lines = out.splitlines()
    assert "chi2' = 5" in lines
    assert "CONJ1: holds, tight, 5 <= 5" in lines


def test_verify_prints_conjecture_candidates_and_stays_green(tmp_path, capsys) -> None:
    path = tmp_path / "cand.g6"
    path.write_text("G^CmE?\n")
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    lines = out.splitlines()
    assert "CONJ4[k=3]: VIOLATED, 11 <= 10" in lines
    assert "CANDIDATE COUNTEREXAMPLE for CONJ4[k=3]: G^CmE?" in lines


# --- sweep ---


def test_sweep_writes_jsonl_and_a_summary(tmp_path, capsys) -> None:
    src = tmp_path / "batch.g6"
    graphs = ["Bw", K33, format_graph6(build_graph(2, [(0, 1)]))]
    src.write_text("\n".join(graphs) + "\n")
    out_path = tmp_path / "report.jsonl"
    code, _, err = run(capsys, "sweep", str(src), "--out", str(out_path))
    assert code == 0
    assert "swept 3 graphs" in err
    assert "0 theorem violations" in err
    lines = out_path.read_text().splitlines()
    assert len(lines) == 4
    records = [json.loads(line) for line in lines[:-1]]
    assert [r["graph6"] for r in records] == graphs
    assert all(r["schema"] == 1 for r in records)
    summary = json.loads(lines[-1])["summary"]
    assert summary["graphs"] == 3
    assert summary["sound"] is True


def test_sweep_reruns_byte_identical(tmp_path, capsys) -> None:
    src = tmp_path / "batch.g6"
    src.write_text("Bw\n" + K33 + "\n")
    first = tmp_path / "a.jsonl"
    second = tmp_path / "b.jsonl"
    assert run(capsys, "sweep", str(src), "--out", str(first))[0] == 0
    assert run(capsys, "sweep", str(src), "--out", str(second))[0] == 0
    assert first.read_bytes() == second.read_bytes()


def test_sweep_to_stdout_by_default(tmp_path, capsys) -> None:
    src = tmp_path / "one.g6"
    src.write_text("Bw\n")
    code, out, _ = run(capsys, "sweep", str(src))
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert json.loads(lines[0])["graph6"] == "Bw"
    assert "summary" in json.loads(lines[1])


def test_sweep_candidate_counterexamples_keep_exit_zero(tmp_path, capsys) -> None:
    src = tmp_path / "cand.g6"
    src.write_text("G^CmE?\n")
    out_path = tmp_path / "cand.jsonl"
    code, _, err = run(capsys, "sweep", str(src), "--out", str(out_path))
    assert code == 0
    assert "1 conjecture counterexamples" in err
    summary = json.loads(out_path.read_text().splitlines()[-1])["summary"]
    assert summary["conjecture_counterexamples"][0]["graph6"] == "G^CmE?"
    assert summary["sound"] is True


# --- hunt ---


def test_hunt_with_a_family_start(capsys) -> None:
    code, out, err = run(
        capsys,
        "hunt",
        "--target", "CONJ5",
        "--k", "2",
        "--n", "6",
        "--delta-cap", "3",
        "--start", "bip_pendant:k=2,delta=3",
        "--max-steps", "0",
        "--restarts", "1",
    )
    assert code == 0
    result = json.loads(out)
    assert result["best"]["gap"] == 0
    assert result["best"]["omega2"] == 5
    assert "COUNTEREXAMPLE" not in err


def test_hunt_flags_a_positive_gap_on_stderr(capsys) -> None:
    code, out, err = run(
        capsys,
        "hunt",
        "--target", "CONJ4",
        "--k", "3",
        "--n", "8",
        "--delta-cap", "4",
        "--start", "G^CmE?",
        "--max-steps", "0",
        "--restarts", "1",
    )
    assert code == 0
    result = json.loads(out)
    assert result["best"]["gap"] == 1
    assert "COUNTEREXAMPLE CANDIDATE: gap 1 for CONJ4[k=3] at G^CmE?" in err


def test_hunt_start_from_a_file(tmp_path, capsys) -> None:
    path = tmp_path / "start.g6"
    path.write_text("Bw\n")
    code, out, _ = run(
        capsys,
        "hunt",
        "--target", "T2.2",
        "--n", "3",
        "--delta-cap", "2",
        "--start", "@" + str(path),
        "--max-steps", "0",
        "--restarts", "1",
    )
    assert code == 0
    assert json.loads(out)["best"]["graph6"] == "Bw"


def test_hunt_start_file_must_hold_one_graph(tmp_path, capsys) -> None:
    path = tmp_path / "two.g6"
    path.write_text("Bw\nBw\n")
    code, _, err = run(capsys, "hunt", "--start", "@" + str(path), "--n", "3")
    assert code == 1
    assert "exactly one graph" in err


def test_hunt_rejects_degenerate_cycle_bans(capsys) -> None:
    code, _, err = run(capsys, "hunt", "--forbid", "2", "--max-steps", "0", "--restarts", "1")
    assert code == 1
    assert "below 3" in err


# --- construct ---


def test_construct_emits_graph6_then_json(capsys) -> None:
    code, out, _ = run(capsys, "construct", "hairy_clique", "q=3", "delta=4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "H{`A@?_"
    payload = json.loads(lines[1])
    assert payload["family"] == "hairy_clique"
    assert payload["expected_strong_clique"] == 9
    assert payload["expected_max_degree"] == 4
    assert (payload["n"], payload["m"]) == (9, 9)
    assert payload["parameters"]["k"] == 2


def test_construct_unknown_family_is_a_usage_error(capsys) -> None:
    with pytest.raises(SystemExit) as exc:
        main(["construct", "nosuch"])
    assert exc.value.code == 1


def test_construct_missing_parameter(capsys) -> None:
    code, _, err = run(capsys, "construct", "hairy_clique", "q=3")
    assert code == 1
    assert err.startswith("error:")


def test_construct_malformed_parameter(capsys) -> None:
    code, _, err = run(capsys, "construct", "hairy_clique", "q")
    assert code == 1
    assert "key=value" in err


# --- parser plumbing ---


def test_help_exits_zero(capsys) -> None:
    with pytest.raises(SystemExit) as exc:
        main(["--help"])
    assert exc.value.code == 0


def test_unknown_subcommand_exits_one(capsys) -> None:
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_no_subcommand_exits_one(capsys) -> None:
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1
