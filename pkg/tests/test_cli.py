import io
import json

import pytest

from parikhgraph import cli, graphs
from parikhgraph.oracle import enumerate_words
from parikhgraph.parikh import parikh_graph


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.dispatch(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_json(capsys):
    code, out, _ = run(capsys, "build", "bbccabdc", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert len(data["x"]) + len(data["y"]) == 8 and len(data["edges"]) == 10
    assert "c:2" in data["x"]
    assert graphs.LabeledBipartiteGraph.from_json(out).to_json() == out.strip()


def test_build_dot(capsys):
    code, out, _ = run(capsys, "build", "abab", "--format", "dot")
    assert code == 0 and out.startswith("graph") and "rank=same" in out


def test_slender_count(capsys):
    code, out, _ = run(capsys, "slender", "--size", "4", "--count")
    assert (code, out.strip()) == (0, "5")


def test_recognize_c6(capsys, tmp_path, c6):
    path = tmp_path / "c6.json"
    path.write_text(c6.to_json())
    code, out, _ = run(capsys, "recognize", "--input", str(path))
    assert code == 0
    assert json.loads(out) == {"representable": False, "arity": None, "word": None, "strong_ordering": None}


def test_recognize_arity(capsys, tmp_path):
    path = tmp_path / "p5.json"
    path.write_text(graphs.path_graph(5).to_json())
    assert json.loads(run(capsys, "recognize", "--input", str(path), "--arity", "2")[1])["representable"] is False
    report = json.loads(run(capsys, "recognize", "--input", str(path), "--arity", "3")[1])
    assert report["representable"] and report["arity"] == 3


def test_build_then_recognize_round_trip(capsys, monkeypatch):
    for w in list(enumerate_words(3, 4))[::7]:
        _, built, _ = run(capsys, "build", str(w), "--alphabet-size", "3")
        code, out, _ = run(capsys, "recognize", "--input", "-", stdin=built, monkeypatch=monkeypatch)
        report = json.loads(out)
        assert code == 0 and report["representable"], str(w)
        assert graphs.are_isomorphic(parikh_graph(cli.Word.parse(report["word"])).graph, parikh_graph(w).graph)


def test_synthesize_with_trace(capsys, monkeypatch):
    _, built, _ = run(capsys, "build", "abbaccdb")
    code, out, _ = run(capsys, "synthesize", "--input", "-", "--trace", stdin=built, monkeypatch=monkeypatch)
    report = json.loads(out)
    assert code == 0 and report["trace"]["steps"] and report["trace"]["decomposition"]["n"] >= 1


def test_synthesize_non_representable(capsys, monkeypatch, c6):
    code, _, err = run(capsys, "synthesize", "--input", "-", stdin=c6.to_json(), monkeypatch=monkeypatch)
    assert code == 2 and err


def test_word_reports(capsys):
    assert json.loads(run(capsys, "diameter", "cdabcdab")[1])["diameter"] == 7
    ham = json.loads(run(capsys, "hamiltonian", "abbc")[1])
    assert ham["criterion_value"] is True and ham["hamiltonian"] is True
    assert json.loads(run(capsys, "longest-path", "--arity", "3")[1])["word"] == "bcabcab"
    assert json.loads(run(capsys, "compose", "ab", "ab")[1])["word"] == "cdab"
    assert json.loads(run(capsys, "core", "bacbbabcccbac", "--pattern", "cca")[1])["core"] == "cccca"


def test_verify_pass_and_capacity(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "edge-count", "--max-len", "5", "--alphabet-size", "3")
    assert code == 0 and json.loads(out.splitlines()[-1])["passed"]
    code, _, err = run(capsys, "verify", "--suite", "round-trip", "--max-vertices", "11")
    assert code == 2 and "capacity" in err


def test_verify_reports_counterexample(capsys, monkeypatch):
    from parikhgraph import analysis
    monkeypatch.setattr(analysis, "binary_hamiltonian", lambda w: True)
    code, out, _ = run(capsys, "verify", "--suite", "hamiltonian-binary", "--max-len", "4")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 1
    assert lines[0]["reproduce"].startswith("parikhgraph verify") and not lines[-1]["passed"]


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["build"], ["build", "a1b"], ["slender"], ["recognize", "--input", "/no/such/file"],
    ["build", "abc", "--alphabet-size", "2"],
])
def test_bad_input_exits_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err and not out


def test_bad_json_exits_2(capsys, monkeypatch):
    code, _, err = run(capsys, "recognize", "--input", "-", stdin="{not json", monkeypatch=monkeypatch)
    assert code == 2 and "invalid graph JSON" in err


def test_max_vertices_flag_overrides_cap(capsys, monkeypatch):
    monkeypatch.setenv("PARIKH_MAX_VERTICES", "3")
    g = graphs.path_graph(5).to_json()
    code, _, err = run(capsys, "recognize", "--input", "-", stdin=g, monkeypatch=monkeypatch)
    assert code == 2 and "capacity" in err
    code, out, _ = run(capsys, "recognize", "--input", "-", "--max-vertices", "10", stdin=g, monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["representable"]
