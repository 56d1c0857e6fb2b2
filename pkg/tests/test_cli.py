import json

from ribbonlab import parse_graph, load_graph, is_checkerboard_colourable
from ribbonlab.cli import main

from helpers import FIXTURES


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_torus(capsys):
    code, out, _ = run(capsys, "check", str(FIXTURES / "torus2loop.rg"))
    assert code == 0
    lines = dict(
        (line.split("  ")[0].strip(), line.split("  ")[-1].strip())
        for line in out.strip().splitlines()
    )
    assert lines["eulerian"] == "yes"
    assert lines["checkerboard"] == "no"
    assert lines["boundary components"] == "1"
    assert lines["euler characteristic"] == "0"


def test_check_missing_file(capsys):
    code, _, err = run(capsys, "check", "no/such/file.rg")
    assert code == 2
    assert "no such file" in err


def test_check_malformed_file(tmp_path, capsys):
    bad = tmp_path / "bad.rg"
    bad.write_text("vertex u: a.3\n")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2
    assert "line 1" in err


def test_op_ppetrial_fixes_torus(tmp_path, capsys):
    out_file = tmp_path / "out.rg"
    code, _, _ = run(
        capsys,
        "op",
        str(FIXTURES / "torus2loop.rg"),
        "--ppetrial",
        "a,b",
        "-o",
        str(out_file),
    )
    assert code == 0
    assert is_checkerboard_colourable(load_graph(out_file))


def test_op_word(capsys):
    code, out, _ = run(capsys, "op", str(FIXTURES / "loop.rg"), "--word", "a:d")
    assert code == 0
    g = parse_graph(out)
    assert len(g.vertices) == 2


def test_op_requires_exactly_one_operation(capsys):
    code, _, err = run(capsys, "op", str(FIXTURES / "loop.rg"), "--dual", "--petrial")
    assert code == 2
    assert "exactly one" in err


def test_op_unknown_edge(capsys):
    code, _, err = run(capsys, "op", str(FIXTURES / "loop.rg"), "--delete", "zz")
    assert code == 2


def test_op_bad_word(capsys):
    code, _, err = run(capsys, "op", str(FIXTURES / "loop.rg"), "--word", "a:xx")
    assert code == 2
    assert "bad word entry" in err


def test_medial_dot(capsys):
    code, out, _ = run(capsys, "medial", str(FIXTURES / "torus2loop.rg"), "--dot")
    assert code == 0
    assert out.startswith("digraph")
    assert "(c)" in out and "(d)" in out


def test_medial_summary(capsys):
    code, out, _ = run(capsys, "medial", str(FIXTURES / "loop.rg"))
    assert code == 0
    assert "medial vertices: 1" in out
    assert "corner edges: 2" in out


def test_medial_rejects_nonorientable(capsys):
    code, _, err = run(capsys, "medial", str(FIXTURES / "twisted_loop.rg"))
    assert code == 2


def test_theorem1(capsys):
    code, out, _ = run(capsys, "theorem1", str(FIXTURES / "interleaved_twist.rg"))
    assert code == 0
    assert "petrial set A: ['e1']" in out
    assert "dual set D: ['e1']" in out
    assert "red" in out and "blue" in out


def test_theorem2_torus(capsys):
    code, out, _ = run(capsys, "theorem2", str(FIXTURES / "torus2loop.rg"))
    assert code == 0
    assert "twisted edges I: ['a', 'b']" in out
    assert "edge a: -" in out and "edge b: -" in out
    assert "red" in out and "blue" in out


def test_theorem2_rejects_non_eulerian(capsys):
    code, _, err = run(capsys, "theorem2", str(FIXTURES / "path2.rg"))
    assert code == 2
    assert "odd degree" in err


def test_enumerate_counts(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-edges", "1")
    assert code == 0
    assert "edges 0: 1" in out
    assert "edges 1: 3" in out
    assert "total: 4" in out


def test_enumerate_cap(capsys):
    code, _, err = run(capsys, "enumerate", "--max-edges", "9")
    assert code == 2


def test_verify_single_property(capsys):
    code, out, _ = run(
        capsys, "verify", "checkerboard-implies-eulerian", "--max-edges", "2"
    )
    assert code == 0
    assert "pass" in out


def test_verify_all_at_three_edges_passes(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-edges", "3")
    assert code == 0
    lines = [l for l in out.strip().splitlines() if ":" in l]
    assert len(lines) >= 30
    assert all("pass" in l for l in lines)


def test_verify_json(capsys):
    code, out, _ = run(
        capsys, "verify", "arrow-roundtrip", "--max-edges", "1", "--json"
    )
    assert code == 0
    reports = json.loads(out)
    assert reports[0]["property"] == "arrow-roundtrip"
    assert reports[0]["failures"] == []


def test_verify_unknown_property(capsys):
    code, _, err = run(capsys, "verify", "bogus", "--max-edges", "1")
    assert code == 2
    assert "unknown property" in err


def test_verify_implication_table(capsys):
    code, out, _ = run(capsys, "verify", "implication-table", "--max-edges", "2")
    assert code == 0
    table = json.loads(out)
    assert table["holds"]["checkerboard"]["eulerian"]


def test_search_command(capsys):
    code, out, _ = run(capsys, "search", "--max-edges", "4")
    assert code == 0
    assert "subset A: ['e2']" in out
    assert "re-verified: yes" in out


def test_search_reports_absence(capsys):
    code, out, _ = run(capsys, "search", "--max-edges", "2")
    assert code == 0
    assert "no witness" in out


def test_op_pdual_and_contract(capsys):
    code, out, _ = run(capsys, "op", str(FIXTURES / "torus2loop.rg"), "--pdual", "b")
    assert code == 0
    assert len(parse_graph(out).vertices) == 2
    code, out, _ = run(capsys, "op", str(FIXTURES / "loop.rg"), "--contract", "a")
    assert code == 0
    g = parse_graph(out)
    assert not g.edges and len(g.vertices) == 2


def test_enumerate_print(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-edges", "1", "--print")
    assert code == 0
    assert out.count("vertex") >= 4


def test_iso_same_file(capsys):
    code, out, _ = run(
        capsys, "iso", str(FIXTURES / "loop.rg"), str(FIXTURES / "loop.rg")
    )
    assert code == 0
    assert "isomorphic" in out


def test_iso_different(capsys):
    code, out, _ = run(
        capsys, "iso", str(FIXTURES / "loop.rg"), str(FIXTURES / "twisted_loop.rg")
    )
    assert code == 1
    assert "not isomorphic" in out
