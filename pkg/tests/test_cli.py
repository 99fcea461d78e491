import json

import pytest

from recgraphs.checks import CheckReport, run_suite
from recgraphs.cli import main
from recgraphs.graphs import FinitePrefix, to_json


@pytest.fixture
def run(capsys):
    def _run(*args):
        code = main(list(args))
        out, err = capsys.readouterr()
        return code, out, err

    return _run


def write_graph(tmp_path, name, n, edges):
    path = tmp_path / name
    path.write_text(to_json(FinitePrefix.from_edges(n, edges)))
    return str(path)


def complete_edges(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def test_list_programs(run):
    code, out, _ = run("list-programs")
    assert code == 0
    lines = out.splitlines()
    assert any(line.startswith("never ") for line in lines)
    binary = next(line for line in lines if line.startswith("tree:binary"))
    assert "HasInfinitePath" in binary


def test_list_programs_json(run):
    code, out, _ = run("list-programs", "--json")
    assert code == 0
    assert {"never", "tree:binary", "notree:gap"} <= {row["name"] for row in json.loads(out)}


def test_build_thm1_dot(run):
    code, out, _ = run("build", "thm1", "--program", "self5", "--count", "8", "--format", "dot")
    assert code == 0
    edges = [line.strip() for line in out.splitlines() if "--" in line]
    assert edges == ['"5" -- "6";', '"5" -- "7";', '"6" -- "7";']


def test_build_require_decided(run):
    code, out, err = run("build", "thm7-G", "--program", "notree:gap", "--count", "5", "--require-decided")
    assert code == 2
    assert "style=dashed" in out and "undecided" in err


def test_build_undecided_without_flag_succeeds(run):
    code, _, _ = run("build", "thm7-G", "--program", "notree:gap", "--count", "5")
    assert code == 0


@pytest.mark.parametrize(
    "args",
    [
        ("build", "nope"),
        ("build", "thm1", "--program", "nosuch"),
        ("build", "thm1"),
        ("build", "thm5", "--n", "2", "--injection", "halving"),
        ("build",),
        ("frobnicate",),
    ],
)
def test_build_errors_exit_1(run, args):
    code, _, err = run(*args)
    assert code == 1 and err


@pytest.mark.parametrize(
    "args",
    [
        ("thm1", "--program", "self5"),
        ("thm2", "--program", "evens"),
        ("thm4", "--program", "tree:binary"),
        ("thm5", "--n", "2"),
        ("thm6", "--tree", "tree:binary"),
        ("thm7-H",),
        ("thm7-G", "--program", "tree:ray0"),
        ("thm9-H", "--e", "1"),
        ("thm9-G", "--programs", "tree:finite(2),tree:binary"),
        ("thm10-3", "--tree", "tree:binary"),
        ("thm10-4", "--trees", "tree:ray0,tree:finite(2)"),
    ],
)
def test_build_every_construction(run, tmp_path, args):
    out_file = tmp_path / "g.json"
    code, _, _ = run("build", *args, "--count", "12", "--format", "json", "--out", str(out_file), "--require-decided")
    assert code == 0
    data = json.loads(out_file.read_text())
    assert len(data["vertices"]) == 12 and data["undecided"] == []


def test_build_output_deterministic(run):
    a = run("build", "thm2", "--program", "cof-minus-1", "--count", "30", "--format", "json")
    b = run("build", "thm2", "--program", "cof-minus-1", "--count", "30", "--format", "json")
    assert a == b


def test_solve_chrom(run, tmp_path):
    k6 = write_graph(tmp_path, "k6.json", 6, complete_edges(6))
    assert run("solve", "chrom", k6)[:2] == (0, "6\n")


def test_solve_color(run, tmp_path):
    k4 = write_graph(tmp_path, "k4.json", 4, complete_edges(4))
    assert run("solve", "color", "--k", "3", k4)[:2] == (0, "none\n")
    code, out, _ = run("solve", "color", "--k", "4", k4)
    assert code == 0 and json.loads(out) == {"0": 0, "1": 1, "2": 2, "3": 3}


def test_solve_subiso(run, tmp_path):
    h = write_graph(tmp_path, "h.json", 3, complete_edges(3))
    g = write_graph(tmp_path, "g.json", 4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert run("solve", "subiso", h, g)[:2] == (0, "none\n")
    code, out, _ = run("solve", "subiso", g, g)
    assert code == 0 and set(json.loads(out)) == {"0", "1", "2", "3"}


def test_solve_clique_indep_component(run, tmp_path):
    g = write_graph(tmp_path, "g.json", 5, [(0, 1), (1, 2), (0, 2)])
    assert json.loads(run("solve", "clique", "--size", "3", g)[1]) == ["0", "1", "2"]
    assert json.loads(run("solve", "indep", "--size", "3", g)[1]) == ["0", "3", "4"]
    assert json.loads(run("solve", "component", "--vertex", "1", g)[1]) == ["0", "1", "2"]


def test_solve_malformed_input(run, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("solve", "chrom", str(bad))[0] == 1
    assert run("solve", "chrom", str(tmp_path / "missing.json"))[0] == 1
    good = write_graph(tmp_path, "k2.json", 2, [(0, 1)])
    assert run("solve", "color", good)[0] == 1
    assert run("solve", "subiso", good)[0] == 1
    assert run("solve", "component", "--vertex", "7", good)[0] == 1


def test_solve_undecided_input(run, tmp_path):
    path = tmp_path / "u.json"
    path.write_text(to_json(FinitePrefix.from_edges(2, [], undecided=[(0, 1)])))
    assert run("solve", "chrom", str(path))[0] == 2


def test_build_then_solve(run, tmp_path):
    out_file = tmp_path / "thm5.json"
    run("build", "thm5", "--n", "2", "--count", "9", "--format", "json", "--out", str(out_file))
    assert run("solve", "chrom", str(out_file))[1] == "8\n"


def test_check_thm1(run):
    code, out, _ = run("check", "thm1")
    assert code == 0 and out.startswith("suite thm1: PASS")


def test_check_solvers_seed(run):
    code, out, _ = run("check", "solvers", "--seed", "7")
    assert code == 0
    assert run("check", "solvers", "--seed", "7")[1] == out


def test_check_json(run):
    code, out, _ = run("check", "thm5", "--json")
    assert code == 0 and json.loads(out)["passed"] is True


def test_check_unknown_suite(run):
    assert run("check", "thm3")[0] == 1


def test_check_failure_exit_code(run, monkeypatch):
    import recgraphs.cli as cli

    def failing(name, seed):
        rep = CheckReport("fake")
        rep.check("always false", lambda: False)
        return [rep]

    monkeypatch.setattr(cli, "run_suite", failing)
    code, out, _ = run("check", "thm1")
    assert code == 2 and "FAIL" in out


def test_report_serialisation_deterministic():
    a, b = run_suite("thm5", 0)[0], run_suite("thm5", 0)[0]
    assert a.to_json() == b.to_json()
    assert a.to_dict()["results"][0]["id"].startswith("doubling")


def test_report_catches_exceptions():
    rep = CheckReport("x")
    rep.check("boom", lambda: 1 / 0)
    assert not rep.passed and "ZeroDivisionError" in rep.results[0].detail
