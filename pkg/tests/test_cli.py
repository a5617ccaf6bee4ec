import json

import pytest

from pdsgraphs.cli import run
from pdsgraphs.formats import from_edge_list, read_graph


def test_build_diff_then_verify(tmp_path, capsys):
    out = tmp_path / "z21.txt"
    assert run(["build", "diff", "--set", "0,1,4,14,16", "--mod", "21", "--out", str(out)]) == 0
    assert run(["verify", "graph", str(out), "--json"]) == 0
    rep = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert rep["order"] == 21
    assert rep["degree_histogram"] == {"4": 5, "5": 16}
    assert rep["diameter"] == 2


def test_build_to_stdout_with_report(capsys):
    assert run(["build", "brown", "--q", "2", "--report"]) == 0
    captured = capsys.readouterr()
    assert captured.out.splitlines()[0] == "7 9"
    assert "diameter: 2" in captured.err


def test_iso_singer_brown_certificate(tmp_path):
    cert = tmp_path / "c3.txt"
    assert run(["iso", "singer-brown", "--q", "3", "--out", str(cert)]) == 0
    lines = cert.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 13 and all("->" in ln for ln in lines)


def test_iso_singer_brown_json(capsys):
    assert run(["iso", "singer-brown", "--q", "4", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["verified"] is True
    assert data["certificate"][0] == "0 -> (1,0,1)"


def test_hybrid_q4_is_invalid_input(capsys):
    assert run(["build", "hybrid", "--q", "4"]) == 2
    assert "p=21 is not prime" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["build", "brown", "--q", "6"],
        ["build", "brown-aug", "--q", "3"],
        ["verify", "rds", "--p", "9"],
        ["verify", "pds", "--set", "0,1,x", "--mod", "7"],
        ["build", "diff"],
        ["build", "nonsense", "--q", "2"],
        ["iso", "singer-brown", "--q", "10"],
        ["verify", "graph", "/nonexistent/file"],
    ],
)
def test_invalid_input_exit_2(argv):
    assert run(argv) == 2


def test_verify_pds(capsys):
    assert run(["verify", "pds", "--set", "0,1,3", "--mod", "7"]) == 0
    assert run(["verify", "pds", "--set", "0,1,2 mod 7"]) == 1
    assert run(["verify", "rds", "--p", "13"]) == 0


def test_verify_graph_wrong_diameter(tmp_path):
    path = tmp_path / "path.txt"
    path.write_text("4 3\n0 1\n1 2\n2 3\n")
    assert run(["verify", "graph", str(path)]) == 1
    assert run(["verify", "graph", str(path), "--expect-diameter", "3"]) == 0
    assert run(["verify", "graph", str(path), "--any-diameter"]) == 0


def test_iso_general_and_check(tmp_path, capsys):
    g, h = tmp_path / "g.txt", tmp_path / "h.g6"
    assert run(["build", "diff", "--q", "3", "--out", str(g)]) == 0
    assert run(["export", "brown", "--q", "3", "--format", "graph6", "--out", str(h)]) == 0
    cert = tmp_path / "cert.txt"
    assert run(["iso", "general", str(g), str(h), "--out", str(cert)]) == 0
    assert run(["iso", "check", str(g), str(h), str(cert)]) == 0


def test_iso_general_non_isomorphic(tmp_path):
    g, h = tmp_path / "g.txt", tmp_path / "h.txt"
    g.write_text("6 6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n")
    h.write_text("6 6\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n")
    assert run(["iso", "general", str(g), str(h)]) == 1


def test_iso_check_table_certificate(tmp_path):
    g, h, cert = tmp_path / "g.txt", tmp_path / "h.txt", tmp_path / "c4.txt"
    run(["build", "diff", "--set", "0,1,4,14,16 mod 21", "--out", str(g)])
    run(["build", "brown", "--q", "4", "--out", str(h)])
    run(["iso", "singer-brown", "--q", "4", "--out", str(cert)])
    assert run(["iso", "check", str(g), str(h), str(cert), "--q", "4"]) == 0
    lines = cert.read_text(encoding="utf-8").splitlines()
    lines[0], lines[4] = "0 -> (0,1,0)", "4 -> (1,0,1)"
    cert.write_text("\n".join(lines) + "\n", encoding="utf-8")
    assert run(["iso", "check", str(g), str(h), str(cert), "--q", "4"]) == 1
    assert run(["iso", "check", str(g), str(h), str(cert)]) == 2


def test_exports_are_byte_stable(tmp_path):
    for fmt in ("edges", "graph6", "dot"):
        a, b = tmp_path / f"a.{fmt}", tmp_path / f"b.{fmt}"
        run(["export", "hybrid", "--q", "2", "--format", fmt, "--out", str(a)])
        run(["export", "hybrid", "--q", "2", "--format", fmt, "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()


def test_edge_roundtrip_report_identical(tmp_path, capsys):
    a = tmp_path / "a.txt"
    run(["build", "brown-aug", "--q", "4", "--out", str(a), "--report", "--json"])
    first = json.loads(capsys.readouterr().out)
    b = tmp_path / "b.txt"
    b.write_text(a.read_text())
    assert from_edge_list(b.read_text()).edges() == read_graph(a).edges()
    run(["verify", "graph", str(b), "--json"])
    assert json.loads(capsys.readouterr().out) == first


def test_bilinear_with_field_alpha(capsys):
    assert run(["build", "bilinear", "--q", "4", "--alpha", "ζ+1", "--report"]) == 0
    assert "order: 21" in capsys.readouterr().err
    assert run(["build", "bilinear", "--q", "3", "--alpha", "0"]) == 2
