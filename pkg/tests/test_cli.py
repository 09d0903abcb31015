import json

import pytest

from conftest import EXAMPLE_GENS, G_EDGES, H_EDGES
from splitcm.cli import main


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def ideal_file(write, n, gens, name="ideal.txt"):
    return write(name, "\n".join([f"ring {n}", *gens]) + "\n")


def graph_file(write, n, edges, name="graph.txt"):
    return write(name, "\n".join([f"graph {n}", *(f"edge {a} {b}" for a, b in edges)]) + "\n")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_split_exit_codes(write, capsys):
    code, out, _ = run(capsys, "split", ideal_file(write, 2, ["x1*x2"]))
    assert code == 0 and "principal" in out
    code, _, _ = run(capsys, "split", ideal_file(write, 2, ["x1^2", "x2^2"]))
    assert code == 1
    code, _, err = run(capsys, "split", ideal_file(write, 2, ["x1^2", "oops"]))
    assert code == 2 and "bad factor" in err
    code, _, err = run(capsys, "split", "/nonexistent/file")
    assert code == 2


def test_cm_example(write, capsys):
    path = ideal_file(write, 4, EXAMPLE_GENS)
    code, out, _ = run(capsys, "cm", path, "--json")
    rep = json.loads(out)
    assert code == 0 and rep["result"]["cm"] is True and rep["result"]["dim"] == 1
    code, out, _ = run(capsys, "cm", path, "--explain")
    assert code == 0 and "split at x1" in out
    code, _, _ = run(capsys, "cm", ideal_file(write, 3, ["x1*x2", "x1*x3"]))
    assert code == 1


def test_cm_non_splittable_needs_oracle(write, capsys):
    path = ideal_file(write, 2, ["x1^2", "x2^2"])
    code, _, err = run(capsys, "cm", path)
    assert code == 2 and "--oracle" in err
    code, out, _ = run(capsys, "cm", path, "--oracle", "--json")
    assert code == 0 and json.loads(out)["result"]["gorenstein"] is True


def test_bicm_examples(write, capsys):
    code, out, _ = run(capsys, "bicm", graph_file(write, 5, G_EDGES), "--json")
    rep = json.loads(out)
    assert code == 0 and rep["result"]["bicm"] is True and rep["result"]["projdim"] == 3
    code, out, _ = run(capsys, "bicm", graph_file(write, 5, H_EDGES, "h.txt"))
    assert code == 1 and "bicm=False" in out
    code, _, _ = run(capsys, "bicm", write("bad.txt", "graph 2\nedge 1 5\n"))
    assert code == 2


def test_verify_squarefree_veronese(write, capsys):
    gens = ["x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4"]
    code, out, _ = run(capsys, "verify", ideal_file(write, 4, gens), "--json")
    rep = json.loads(out)
    assert code == 0 and rep["verdicts"]["agree"] == {"2": True, "32003": True}
    code, out, _ = run(capsys, "verify", ideal_file(write, 4, gens), "--field", "5")
    assert code == 0 and "GF(5): equal" in out
    code, _, _ = run(capsys, "verify", ideal_file(write, 4, gens), "--field", "6")
    assert code == 2


def test_classify(write, capsys):
    code, out, _ = run(capsys, "classify", ideal_file(write, 4, EXAMPLE_GENS), "--polymatroidal")
    assert code == 0 and "componentwise" in out
    code, out, _ = run(capsys, "classify", ideal_file(write, 2, ["x1^3", "x1^2*x2"]), "--polymatroidal", "--json")
    assert code == 1 and json.loads(out)["result"]["tag"] == "not_cm"
    code, _, _ = run(capsys, "classify", ideal_file(write, 3, ["x1*x2", "x1*x3", "x2*x3"]), "--tspread", "1")
    assert code == 0
    code, _, _ = run(capsys, "classify", ideal_file(write, 3, ["x1*x3"]), "--tspread", "1")
    assert code == 1
    code, _, _ = run(capsys, "classify", ideal_file(write, 3, ["x1*x3"]), "--tspread", "a,b")
    assert code == 2


def test_gen_and_betti_pipeline(write, capsys):
    code, out, _ = run(capsys, "gen", "--sqfree-veronese", "4", "2")
    assert code == 0 and out.startswith("ring 4")
    path = write("i42.txt", out)
    code, out, _ = run(capsys, "betti", path, "--quotient", "--json")
    table = json.loads(out)["result"]["betti"]
    assert code == 0 and max(i for i, _, _ in table) == 3
    code, _, _ = run(capsys, "gen", "--sqfree-veronese", "2", "3")
    assert code == 2
    assert run(capsys, "gen", "--veronese", "2", "2")[1] == "ring 2\nx1^2\nx1*x2\nx2^2\n"


def test_json_roundtrip_is_byte_identical(write, capsys):
    paths = [ideal_file(write, 4, EXAMPLE_GENS)]
    for argv in (["cm", paths[0], "--json", "--explain"], ["split", paths[0], "--json"],
                 ["verify", paths[0], "--json"], ["betti", paths[0], "--json"]):
        _, out, _ = run(capsys, *argv)
        assert json.dumps(json.loads(out), sort_keys=True, indent=2) + "\n" == out


def test_reports_are_deterministic(write, capsys):
    path = ideal_file(write, 4, EXAMPLE_GENS)
    first = run(capsys, "cm", path, "--json")[1]
    second = run(capsys, "cm", path, "--json")[1]
    assert first == second
    rep = json.loads(first)
    assert rep["input_digest"].startswith("sha256:") and rep["command"] == "cm" and "timings" not in rep
    assert "timings" in json.loads(run(capsys, "cm", path, "--json", "--timings")[1])


def test_corpus_subcommand(capsys):
    code, out, _ = run(capsys, "corpus", "--scan", "duality", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["verdicts"] == {"duality": True} and rep["result"]["seed"] == 0
    assert run(capsys, "corpus", "--scan", "nope")[0] == 2


def test_stdin_input(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("ring 2\nx1*x2\n"))
    assert run(capsys, "split", "-")[0] == 0


def test_usage_error_exit_code(capsys):
    assert run(capsys, "frobnicate")[0] == 2
