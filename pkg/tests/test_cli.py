import json
import subprocess
import sys

import pytest

from setchroma import cli, verify

from urn_table import URN_TABLE


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def graph_files(tmp_path):
    files = {
        "p3": "3\n1 2\n2 3\n",
        "triangle": "# triangle\n3\n1 2\n1 3\n2 3\n",
        "edgeless": "2\n",
        "loop": "2\n1 1\n",
    }
    paths = {}
    for name, text in files.items():
        path = tmp_path / f"{name}.txt"
        path.write_text(text)
        paths[name] = str(path)
    return paths


def test_urns_column(capsys):
    assert run(capsys, "urns", "--k", "2", "--nmax", "3") == (0, "1\t4\t10\t12\n")
    assert run(capsys, "urns", "--k", "0", "--nmax", "2") == (0, "1\t1\t0\n")


def test_urns_grid(capsys):
    code, out = run(capsys, "urns", "--grid", "7", "9")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t") == ["n\\k"] + [str(k) for k in range(8)]
    rows = [[int(x) for x in line.split("\t")[1:]] for line in lines[1:]]
    assert rows == URN_TABLE


def test_urns_needs_arguments(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["urns", "--k", "2"])
    assert info.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_graph_files(capsys, graph_files):
    assert run(capsys, "graph", "--graph", graph_files["p3"], "--k", "2") == (0, "26\n")
    assert run(capsys, "graph", "--graph", graph_files["triangle"], "--k", "2") == (0, "12\n")
    assert run(capsys, "graph", "--graph", graph_files["edgeless"], "--k", "3") == (0, "64\n")
    assert run(capsys, "graph", "--graph", "K2", "--blocks", "2,3") == (0, "12\n")


def test_graph_parse_error(capsys, graph_files):
    code = cli.main(["graph", "--graph", graph_files["loop"], "--k", "1"])
    assert code == 2
    assert "line 2" in capsys.readouterr().err


def test_alpha(capsys):
    assert run(capsys, "alpha", "--weights", "1,2,1", "--nmax", "4") == (0, "1\t4\t10\t12\t0\n")
    assert run(capsys, "alpha", "--weights", "1,1", "--nmax", "2") == (0, "1\t2\t2\n")
    assert run(capsys, "alpha", "--weights", "1,2", "--graph", "K2") == (0, "4\n")


def test_mode(capsys):
    code, out = run(capsys, "mode", "--k", "4")
    assert code == 0
    rows = dict(line.split("\t", 1) for line in out.splitlines())
    assert rows["M"] == "121/35"
    assert rows["candidates"] == "3\t4"
    assert rows["argmax"] == "4"
    assert rows["contains_argmax"] == "true"
    code, out = run(capsys, "mode", "--weights", "1,1", "--format", "json")
    doc = json.loads(out)
    assert doc["outputs"]["M"] == "1" and doc["outputs"]["candidates"] == [1]


def test_gain_commands(capsys, tmp_path):
    assert run(capsys, "gain", "--expand", "K3", "--k", "2") == (0, "12\n")
    code, out = run(capsys, "gain", "--probe", "K3", "--edge", "1,2", "--k", "2")
    assert out == "lhs\t12\ndeleted\t26\ncontracted\t10\nrhs\t16\nholds\tfalse\n"
    code, out = run(capsys, "gain", "--probe", "P3", "--edge", "2,3", "--k", "1")
    assert out.endswith("rhs\t2\nholds\ttrue\n")

    code, text = run(capsys, "gain", "--expand", "K3", "--k", "2", "--emit")
    path = tmp_path / "k3.gain"
    path.write_text(text)
    assert run(capsys, "gain", "--gain", str(path)) == (0, "12\n")
    assert run(capsys, "gain", "--gain", str(path), "--k", "2") == (0, "12\n")


def test_json_big_numbers_are_strings(capsys):
    code, out = run(capsys, "urns", "--k", "12", "--nmax", "13", "--format", "json")
    values = json.loads(out)["outputs"]["values"]
    code, tsv = run(capsys, "urns", "--k", "12", "--nmax", "13")
    tsv_values = [int(x) for x in tsv.split()]
    assert [int(v) for v in values] == tsv_values
    for v, t in zip(values, tsv_values):
        if t > 2**53:
            assert isinstance(v, str)
        else:
            assert isinstance(v, int)
    assert any(isinstance(v, str) for v in values)


def test_json_and_tsv_agree_on_grid(capsys):
    _, out = run(capsys, "urns", "--grid", "7", "9", "--format", "json")
    assert json.loads(out)["outputs"]["grid"] == URN_TABLE


def test_identical_invocations_identical_output(capsys):
    for argv in (["verify", "--max-n", "3", "--max-k", "2", "--seed", "5", "--format", "json"],
                 ["urns", "--grid", "4", "5"]):
        _, first = run(capsys, *argv)
        _, second = run(capsys, *argv)
        assert first == second


def test_seeded_sweeps_are_reproducible():
    assert verify.random_graphs(10, 3) == verify.random_graphs(10, 3)
    assert verify.random_weights(10, 3) == verify.random_weights(10, 3)
    assert verify.random_graphs(10, 3) != verify.random_graphs(10, 4)


def test_verify_passes(capsys):
    code, out = run(capsys, "verify", "--max-n", "4", "--max-k", "2")
    assert code == 0
    assert out.splitlines()[-1] == "ALL PASS"


def test_verify_detects_injected_fault(capsys, monkeypatch):
    from setchroma import chromafn
    real = chromafn.set_chromatic

    def broken(g, k, lattice=None):
        value = real(g, k, lattice)
        return value + 1 if g.n == 3 and k == 2 else value

    monkeypatch.setattr(chromafn, "set_chromatic", broken)
    code, out = run(capsys, "verify", "--max-n", "3", "--max-k", "2")
    assert code == 1
    assert "FAIL" in out and out.splitlines()[-1] == "FAILED"


def test_capacity_env_var(capsys, monkeypatch):
    monkeypatch.setenv("SETCHROMA_CAPACITY", "10")
    code = cli.main(["graph", "--graph", "E4", "--k", "1"])
    assert code == 2
    assert "SETCHROMA_CAPACITY" in capsys.readouterr().err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "setchroma", "urns", "--k", "3", "--nmax", "4"],
                         capture_output=True, text=True, check=True).stdout
    assert out == "1\t8\t44\t144\t216\n"
