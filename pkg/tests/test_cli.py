import io

import pytest

from dihedral_flows.cli import main
from dihedral_flows.corpus import FIG4_GRAPH
from dihedral_flows.formats import emit_adjacency


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_corpus_list(capsys):
    code, out, _ = run(capsys, "corpus", "list")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 8
    assert lines[2].startswith("fig4 vertices=6 edges=9 faces=1 genus=2")


def test_faces_and_bridges(capsys):
    code, out, _ = run(capsys, "faces", "@theta")
    assert code == 0 and out.splitlines()[0] == "vertices=2 edges=3 faces=1 genus=1"
    code, out, _ = run(capsys, "bridges", "@fig1")
    assert out.splitlines()[0] == "bridges=3 plane_sided=0"


def test_exists_exit_codes(capsys):
    assert run(capsys, "exists", "@fig1", "--group", "D2n:3")[:2] == \
        (0, "exists=yes reason=NoPlaneSidedBridge\n")
    assert run(capsys, "exists", "@fig1", "--group", "D2n:4")[:2] == \
        (1, "exists=no reason=SearchResult(0)\n")
    code, out, _ = run(capsys, "exists", "@fig4", "--group", "D2n:4", "--budget", "5")
    assert code == 3 and "unknown" in out


@pytest.mark.parametrize("k", [1, 9, 16])
def test_count_fig4(capsys, k):
    assert run(capsys, "count", f"@fig4#{k}", "--ctx", "D2n:4")[1] == "count=576\n"
    assert run(capsys, "count", f"@fig4#{k}", "--ctx", "Dlt:4")[1] == "count=512\n"


def test_count_budget(capsys):
    code, _, err = run(capsys, "count", "@tietze", "--ctx", "D2n:5", "--budget", "10")
    assert code == 3 and "budget" in err


def test_find_verify_lift_reduce(capsys, tmp_path):
    code, out, _ = run(capsys, "find", "@k4planar", "--ctx", "D2n:5")
    assert code == 0 and out.startswith("flow k4planar ctx=D2n:5")
    p = tmp_path / "k.flow"
    p.write_text(out)
    assert run(capsys, "verify", "@k4planar", str(p))[:2] == \
        (0, "valid=yes nowhere_identity=yes\n")
    code, out, _ = run(capsys, "lift", "@k4planar", str(p))
    assert code == 0 and "ctx=Dlt:5" in out
    code, out, _ = run(capsys, "reduce", "@k4planar", str(p))
    assert code == 0 and all(line.split()[1].startswith("+") for line in out.splitlines()[1:])


def test_fig1_counterexample(capsys, tmp_path):
    p = tmp_path / "f.flow"
    p.write_text(run(capsys, "corpus", "emit", "fig1", "--flow", "counterexample")[1])
    assert run(capsys, "verify", "@fig1", str(p))[0] == 0
    assert run(capsys, "lift", "@fig1", str(p))[:2] == (1, "lift=none\n")
    assert run(capsys, "reduce", "@fig1", str(p))[:2] == (1, "blocked=non-contractible cycle=3,4\n")
    code, _, err = run(capsys, "verify", "@theta", str(p))
    assert code == 2 and "9 edges" in err


def test_special4_commands(capsys, tmp_path):
    flow = tmp_path / "k.flow"
    flow.write_text(run(capsys, "find", "@k4planar", "--ctx", "Dlt:2")[1])
    col = tmp_path / "k.col"
    code, out, _ = run(capsys, "special4", "from-flow", "@k4planar", str(flow))
    assert code == 0 and out.startswith("coloring k4planar kind=special4")
    col.write_text(out)
    assert run(capsys, "special4", "check", "@k4planar", str(col))[:2] == (0, "special=yes\n")
    code, out, _ = run(capsys, "special4", "to-flow", "@k4planar", str(col))
    assert code == 0 and out == flow.read_text()


def test_color3(capsys):
    code, out, _ = run(capsys, "color3", "@k4planar")
    assert code == 0 and out.startswith("coloring k4planar kind=proper3")
    assert run(capsys, "color3", "@petersen2t")[0] == 1


def test_sweep_theta(capsys):
    code, out, _ = run(capsys, "sweep", "@theta", "--ctx-family", "Dlt", "--n-from", "2", "--n-to", "5")
    assert [line.split()[-1] for line in out.splitlines()] == \
        ["count=0", "count=6", "count=18", "count=36"]


def test_rotations(capsys, tmp_path):
    p = tmp_path / "f4.adj"
    p.write_text(emit_adjacency(FIG4_GRAPH))
    code, out, _ = run(capsys, "rotations", str(p), "--faces", "1")
    lines = out.splitlines()
    assert code == 0 and lines[-1] == "systems=64 matching=16"
    assert len(lines) == 17 and all("faces=1 genus=2" in x for x in lines[:-1])


def test_stdin_and_parse_errors(capsys, monkeypatch, tmp_path):
    emitted = run(capsys, "corpus", "emit", "theta")[1]
    monkeypatch.setattr("sys.stdin", io.StringIO(emitted))
    assert run(capsys, "faces", "-")[0] == 0
    bad = tmp_path / "bad.graph"
    bad.write_text("graph g\nvertex 0: 0 0\n")
    code, _, err = run(capsys, "faces", str(bad))
    assert code == 2 and err.startswith("error:")
    assert run(capsys, "faces", "@nope")[0] == 2


def test_output_is_deterministic(capsys):
    a = run(capsys, "find", "@petersen3t", "--ctx", "D2n:3")
    b = run(capsys, "find", "@petersen3t", "--ctx", "D2n:3")
    assert a == b
