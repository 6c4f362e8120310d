"""End-to-end runs of the command-line interface via main(argv)."""

import json

import pytest

from cliquefold import (
    Witness,
    complete,
    cycle,
    disjoint_union,
    read_graph6,
    write_graph6,
)
from cliquefold.cli import _finish_report, build_parser, main
from cliquefold.search import VerifyReport


@pytest.fixture
def two_k4_file(tmp_path):
    path = tmp_path / "in.g6"
    path.write_text(write_graph6(disjoint_union(complete(4), complete(4))) + "\n")
    return str(path)


@pytest.fixture
def cluster_file(tmp_path):
    # 5-vertex graph with a foldable 2-core cluster at bound 3
    g = read_graph6("D}K")
    path = tmp_path / "cluster.g6"
    path.write_text(write_graph6(g) + "\n")
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# inspection
# ---------------------------------------------------------------------------


def test_count_reports_cliques(capsys, two_k4_file):
    code, out, err = run(capsys, ["count", "--in", two_k4_file, "--t", "3"])
    assert code == 0 and not err
    data = json.loads(out)
    (row,) = data["graphs"]
    assert row["cliques_of_size"]["3"] == 8
    assert row["total_cliques"] == 2 * (4 + 6 + 4 + 1)
    assert row["clique_counts"] == [0, 8, 12, 8, 2, 0, 0, 0, 0]
    assert row["census"]["triangles"] == 8


def test_count_pretty(capsys, two_k4_file):
    code, out, _ = run(capsys, ["count", "--in", two_k4_file, "--pretty"])
    assert code == 0
    assert "total cliques: 30" in out and "mu:" in out


def test_clusters_listing(capsys, cluster_file):
    code, out, _ = run(capsys, ["clusters", "--in", cluster_file, "--r", "3"])
    assert code == 0
    data = json.loads(out)
    assert data["bound"] == 3
    (row,) = data["graphs"]
    (c,) = row["clusters"]
    assert c["foldable"] and not c["dischargeable"]
    assert len(c["core"]) == 2 and len(c["shared"]) == 2


def test_fold_emits_certificate(capsys, cluster_file):
    code, out, _ = run(capsys, ["fold", "--in", cluster_file, "--r", "3"])
    assert code == 0
    (row,) = json.loads(out)["graphs"]
    assert row["folded"]
    cert = row["certificate"]
    assert cert["gain"] == cert["triangles_after"] - cert["triangles_before"]
    assert cert["gain"] >= cert["gain_bound"]
    folded = read_graph6(row["result"])
    assert folded.n == 5


def test_fold_reports_nothing_to_do(capsys, tmp_path):
    path = tmp_path / "c5.g6"
    path.write_text(write_graph6(cycle(5)) + "\n")
    code, out, _ = run(capsys, ["fold", "--in", str(path), "--r", "3"])
    assert code == 0
    (row,) = json.loads(out)["graphs"]
    assert row["folded"] is False


def test_fold_on_complete_component_is_noop(capsys, two_k4_file):
    # a complete block is its own cluster with empty shared set; folding it
    # is formally allowed and changes nothing
    code, out, _ = run(capsys, ["fold", "--in", two_k4_file, "--r", "3"])
    assert code == 0
    (row,) = json.loads(out)["graphs"]
    assert row["folded"] and row["result"] == row["graph6"]
    assert row["certificate"]["gain"] == 0


def test_reduce_breaks_into_blocks(capsys, two_k4_file):
    code, out, _ = run(capsys, ["reduce", "--in", two_k4_file, "--r", "3"])
    assert code == 0
    (row,) = json.loads(out)["graphs"]
    assert row["blocks"] == 2
    assert read_graph6(row["remainder"]).n == 0
    assert row["remainder_order"] == 0


def test_enumerate_lines(capsys):
    code, out, _ = run(capsys, ["enumerate", "--n", "4"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 11
    assert len({write_graph6(read_graph6(ln)) for ln in lines}) == 11
    code, out, _ = run(capsys, ["enumerate", "--n", "6", "--r", "2", "--m", "6"])
    assert code == 0
    # 6 edges, max degree 2, 6 vertices: C_6, 2 C_3, C_3 u C_3? that *is* 2C_3;
    # exactly the disjoint cycle covers: C_6 and C_3+C_3
    assert len(out.strip().splitlines()) == 2


def test_enumerate_to_file(capsys, tmp_path):
    dest = tmp_path / "classes.g6"
    code, out, _ = run(capsys, ["enumerate", "--n", "3", "--out", str(dest)])
    assert code == 0 and out == ""
    assert len(dest.read_text().strip().splitlines()) == 4


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


def test_verify_gls_pass(capsys):
    code, out, _ = run(capsys, ["verify-gls", "--n", "8", "--r", "3"])
    assert code == 0
    rep = json.loads(out)
    assert rep["extremal_value"] == rep["conjectured_value"] == 8
    assert rep["witnesses"][0]["graph6"] == "GJ]CKK"
    assert rep["violations"] == []


def test_verify_gls_pretty_and_witness_out(capsys, tmp_path):
    wout = tmp_path / "wit.g6"
    code, out, _ = run(
        capsys,
        ["verify-gls", "--n", "7", "--r", "2", "--pretty",
         "--witness-out", str(wout)],
    )
    assert code == 0
    assert "status:      PASS" in out and "violations:  none" in out
    lines = wout.read_text().strip().splitlines()
    assert lines and all(read_graph6(ln).n == 7 for ln in lines)


def test_verify_total_pass(capsys):
    code, out, _ = run(capsys, ["verify-total", "--n", "7", "--r", "2"])
    assert code == 0
    rep = json.loads(out)
    assert rep["extremal_value"] == 15 and len(rep["witnesses"]) == 2


def test_verify_sweeps(capsys):
    for argv in (
        ["verify-lex-mu", "--n", "4"],
        ["verify-star-matching", "--n", "6"],
        ["verify-dichotomy", "--n", "6", "--r", "3"],
        ["verify-avgwt", "--r", "6"],
        ["verify-finite-calc", "--r", "3"],
        ["verify-pipeline", "--n", "6", "--r", "2"],
    ):
        code, out, _ = run(capsys, argv)
        assert code == 0, argv
        assert json.loads(out)["violations"] == []


def test_verify_avgwt_default_r(capsys):
    code, out, _ = run(capsys, ["verify-avgwt"])
    assert code == 0
    assert "r in 1..12" in json.loads(out)["space"]


def test_workers_flag_accepted(capsys):
    code, out, _ = run(capsys, ["enumerate", "--n", "5", "--workers", "2"])
    assert code == 0 and len(out.strip().splitlines()) == 34


# ---------------------------------------------------------------------------
# failure modes
# ---------------------------------------------------------------------------


def test_usage_error_exit_2(capsys):
    code, _, err = run(capsys, ["verify-finite-calc", "--r", "9"])
    assert code == 2 and "cliquefold:" in err
    code, _, err = run(capsys, ["verify-gls", "--n", "6", "--r", "2", "--t", "2"])
    assert code == 2 and "clique size" in err


def test_bad_input_file_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("D?\x1f\n")
    code, _, err = run(capsys, ["count", "--in", str(bad)])
    assert code == 2 and "byte" in err
    code, _, err = run(capsys, ["count", "--in", str(tmp_path / "missing.g6")])
    assert code == 2


def test_missing_required_flag_is_systemexit():
    with pytest.raises(SystemExit):
        main(["verify-gls", "--r", "3"])
    with pytest.raises(SystemExit):
        main([])


def test_failing_report_exits_1(capsys, tmp_path):
    # exercised without needing a genuinely false theorem
    rep = VerifyReport(
        target="synthetic", space="n=1", examined=1,
        extremal_value=0, conjectured_value=1,
        witnesses=(Witness.of(cycle(4)),),
        violations=({"detail": "synthetic violation"},), millis=0.1,
    )
    args = build_parser().parse_args(["verify-gls", "--n", "5", "--r", "2"])
    assert _finish_report(rep, args) == 1
    out = capsys.readouterr().out
    assert json.loads(out)["violations"][0]["detail"] == "synthetic violation"
    args = build_parser().parse_args(
        ["verify-gls", "--n", "5", "--r", "2", "--pretty",
         "--witness-out", str(tmp_path / "w.g6")]
    )
    assert _finish_report(rep, args) == 1
    assert "status:      FAIL" in capsys.readouterr().out
    assert (tmp_path / "w.g6").read_text().strip() == "C]"  # canonical C_4


def test_entry_point_installed():
    import shutil
    import subprocess

    exe = shutil.which("cliquefold")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run(
        [exe, "verify-finite-calc", "--r", "4"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["violations"] == []
