import json
import re
import subprocess
import sys

import pytest
from matplotlib.mathtext import MathTextParser

from cuspidal.algebra import BiPoly, UniPoly
from cuspidal.cli import main, run
from cuspidal.errors import UnsupportedFormat
from cuspidal.family import CuspidalCurve, FamilyParams, certify
from cuspidal.render import latex_equation, render
from cuspidal.multiplicity import canonicalize
from cuspidal.topology import DualGraph, cusp_dual_graph


def cli(*argv):
    code, out, err = run(list(argv))
    return code, out, err


def test_certify_json():
    code, out, _ = cli("certify", "--d", "5", "--a", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert all(data["certified"].values())
    assert CuspidalCurve.from_json(data).to_json() == data


def test_construct_json_round_trip_is_stable():
    _, out, _ = cli("construct", "--d", "7", "--a", "4", "--format", "json")
    data = json.loads(out)
    again = render(CuspidalCurve.from_json(data), "json")
    assert again == out


def test_seq_validate_failure_names_condition():
    code, out, _ = cli("seq", "validate", "3,1,1")
    assert code == 1
    assert "condition (ii)" in out


def test_seq_commands():
    assert cli("seq", "validate", "(2_3)") == (0, "valid: (2_3) = (2,2,2,1,1,1)\n", "")
    assert cli("seq", "contacts", "(2_2)")[1] == "2 4 5\n"
    code, out, _ = cli("seq", "invariants", "(4)", "--format", "json")
    assert json.loads(out)["invariants"]["omega"] == 3
    assert cli("seq", "invariants", "(3,1)")[0] == 1


def test_branch_command():
    assert cli("branch", "--x", "t^4", "--y", "t^6+t^7")[1] == "(4,2,2,1,1,1)\n"
    code, _, err = cli("branch", "--x", "1+t", "--y", "t^2")
    assert code == 1 and "not zero" in err
    code, _, err = cli("branch", "--x", "t^2", "--y", "t^3 +* t")
    assert code == 1 and "position 5" in err


def test_branch_respects_precision_cap(monkeypatch):
    monkeypatch.setenv("CUSPIDAL_MAX_PRECISION", "8")
    code, _, _ = cli("branch", "--x", "t^2", "--y", "t^41", "--precision", "4")
    assert code == 1


def test_domain_errors_exit_1():
    assert cli("construct", "--d", "3", "--a", "1")[0] == 1
    assert cli("construct", "--d", "6", "--a", "2", "--b", "1")[0] == 1
    assert cli("construct", "--d", "6")[0] == 1
    assert cli("construct", "--d", "4", "--a", "1", "--format", "dot")[0] == 1
    assert cli("graph", "--seq", "(4,2,2)")[0] == 1


def test_certification_failure_exit_2(monkeypatch):
    import cuspidal.family as fam
    from cuspidal.algebra import X, Y
    monkeypatch.setattr(fam, "implicit_equation", lambda p: X * Y + X ** p.d)
    code, out, _ = cli("certify", "--d", "5", "--a", "2", "--format", "json")
    assert code == 2
    assert json.loads(out)["certified"]["pullback"] is False


def test_internal_error_exit_3(monkeypatch, capsys):
    import cuspidal.cli as mod

    def boom(args):
        raise RuntimeError("boom")

    monkeypatch.setitem(mod.COMMANDS, "pi1", boom)
    assert main(["pi1", "--d", "4", "--a", "1"]) == 3
    assert "internal error" in capsys.readouterr().err


def test_invariants_command():
    code, out, _ = cli("invariants", "--d", "5", "--cusp", "(3)", "--cusp", "(2_2)",
                       "--cusp", "(2)", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert (data["chi"], data["c_tilde_sq"], data["k_dot_c"]) == (0, -3, 1)
    assert data["rigidity_identity_ok"] is True


DOT_NODE = re.compile(r'^\s*"[^"]+" \[label="(E_\d+ \(-\d+\)|C~)"(, [a-z]+="?[^"\]]*"?)*\];$')
DOT_EDGE = re.compile(r'^\s*"[^"]+" -- "[^"]+"( \[dir=forward\])?;$')


def check_dot(text):
    """Tiny grammar for the subset of DOT we emit."""
    lines = text.strip().splitlines()
    assert re.match(r"^graph \w+ \{$", lines[0]) and lines[-1] == "}"
    depth = 0
    nodes = set()
    for line in lines[1:-1]:
        s = line.strip()
        if s.startswith("subgraph"):
            assert re.match(r'^subgraph "cluster_\w+" \{$', s)
            depth += 1
        elif s == "}":
            depth -= 1
        elif s.startswith("label="):
            assert depth == 1
        elif DOT_NODE.match(line):
            nodes.add(s.split('"')[1])
        else:
            assert DOT_EDGE.match(line), line
            for end in s.split('"')[1::2][:2]:
                assert end in nodes or end == "C"
    assert depth == 0
    return nodes


def test_graph_dot():
    code, out, _ = cli("graph", "--seq", "(3)", "--format", "dot")
    assert code == 0
    nodes = check_dot(out)
    assert nodes == {"E1", "E2", "E3", "E4", "C"}
    assert '"E4" -- "C" [dir=forward];' in out
    _, out, _ = cli("graph", "--d", "6", "--a", "3", "--format", "dot")
    check_dot(out)


def test_graph_json_round_trip():
    _, out, _ = cli("graph", "--seq", "(2_4)", "--format", "json")
    assert DualGraph.from_json(json.loads(out)) == cusp_dual_graph("(2_4)")


def test_graph_figure(tmp_path):
    png = tmp_path / "g.png"
    code, _, _ = cli("graph", "--d", "7", "--a", "3", "--figure", str(png))
    assert code == 0 and png.read_bytes()[:4] == b"\x89PNG"


def test_pi1_and_classify():
    code, out, _ = cli("pi1", "--d", "4", "--a", "1")
    assert code == 0 and out.startswith("G_{4,1}") and "finite" in out
    code, out, _ = cli("classify", "--d", "7", "--format", "json")
    data = json.loads(out)
    assert data["count"] == 2 and [c["a"] for c in data["curves"]] == [3, 4]


def test_latex_output_is_standalone():
    code, out, _ = cli("construct", "--d", "4", "--a", "1", "--format", "latex")
    assert code == 0
    assert out.startswith(r"\documentclass{article}") and out.rstrip().endswith(r"\end{document}")
    assert r"p_{4,1} = -\frac{1}{4}\,X^{2}Y^{2} - (X-Y)^{2} + XY\left(Y + X\right)" in out
    assert out.count("{") == out.count("}")


@pytest.mark.parametrize("d,a", [(4, 1), (5, 2), (6, 2), (6, 3), (7, 3), (7, 4)])
def test_latex_equation_parses(d, a):
    eq = latex_equation(certify(FamilyParams(d, a)))
    MathTextParser("path").parse(f"${eq}$")


def test_output_file(tmp_path):
    target = tmp_path / "curve.json"
    code, out, _ = cli("construct", "--d", "5", "--a", "2", "--format", "json", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["d"] == 5


def test_sweep_table_and_figure(tmp_path):
    png = tmp_path / "sweep.png"
    code, out, _ = cli("sweep", "--d-min", "4", "--d-max", "8", "--figure", str(png))
    assert code == 0
    lines = out.strip().splitlines()
    header = lines[0].split("\t")
    assert header[:4] == ["d", "a", "b", "certified"]
    rows = [dict(zip(header, ln.split("\t"))) for ln in lines[1:-1]]
    assert [(r["d"], r["a"]) for r in rows] == [("4", "1"), ("5", "2"), ("6", "2"), ("6", "3"),
                                               ("7", "3"), ("7", "4"), ("8", "3"), ("8", "4"),
                                               ("8", "5")]
    assert all(r["certified"] == "true" for r in rows)
    assert lines[-1] == "# 9 curves, 0 failure(s)"
    assert png.stat().st_size > 0


def test_sweep_parallel_matches_serial():
    a = json.loads(cli("sweep", "--d-min", "4", "--d-max", "9", "--format", "json")[1])
    b = json.loads(cli("sweep", "--d-min", "4", "--d-max", "9", "--format", "json", "--jobs", "2")[1])
    strip = lambda rows: [{k: v for k, v in r.items() if k != "seconds"} for r in rows]
    assert strip(a["rows"]) == strip(b["rows"])


def test_render_basics():
    assert render(UniPoly(), "text") == "0\n"
    assert render(BiPoly(), "text") == "0\n"
    assert render(canonicalize("(2_3)"), "text") == "(2_3) = (2,2,2,1,1,1)\n"
    with pytest.raises(UnsupportedFormat):
        render(UniPoly(), "yaml")
    with pytest.raises(UnsupportedFormat):
        render(UniPoly(), "dot")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cuspidal", "seq", "validate", "3,1,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert "condition (ii)" in proc.stdout
