import io
import json

from prettyclean.cli import main

EX = "intersect((x^2,y),(x,z),(z,w))"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--json")
    return code, json.loads(text)


def test_check_worked_example():
    code, rep = run_json("check", EX)
    assert code == 2
    assert rep["cm"] is False and rep["scm"] is False and rep["config"] == "Path3"
    assert rep["condition"] == {"clauses": [{"test": "P2 ⊆ P1+P3", "holds": False}], "satisfied": False}


def test_check_sequentially_cm():
    code, rep = run_json("check", "(x^2, x*y)")
    assert code == 0 and rep["scm"] is True and rep["cm"] is False and rep["config"] == "Single"


def test_filtrate_radical():
    code, rep = run_json("filtrate", "intersect((x,y),(x,z),(z,w))")
    assert code == 0 and rep["error"] is None
    assert rep["filtration"]["clean"] is True
    assert rep["filtration"]["steps"][-1] == {"u": "1", "prime": ["z", "w"]}


def test_filtrate_negative_answers():
    code, rep = run_json("filtrate", EX)
    assert code == 2 and rep["error"] == "NotCohenMacaulay" and rep["filtration"] is None
    code, rep = run_json("filtrate", "intersect((x),(x^2,y),(z,w))")
    assert code == 2 and rep["error"] == "NotSequentiallyCM"


def test_filtrate_strict_mode():
    gap = "(x^2*z, x*y*z, x*y*w^2, y^3*z^3)"
    assert run_json("filtrate", gap)[0] == 0
    code, rep = run_json("filtrate", gap, "--strict")
    assert code == 2 and rep["error"] == "NotCohenMacaulay"


def test_filtrate_pretty_clean():
    code, rep = run_json("filtrate", "(x^2, x*y)")
    assert code == 0
    assert rep["filtration"]["steps"] == [{"u": "x", "prime": ["x", "y"]}, {"u": "1", "prime": ["x"]}]
    assert rep["filtration"]["pretty_clean"] is True


def test_depth():
    code, rep = run_json("depth", "(x^2,y^3)")
    assert code == 0 and (rep["depth"], rep["dim"], rep["cm"]) == (2, 2, True)


def test_decompose_ass_dimfilt():
    assert run_json("decompose", "(x^2, x*y, y^3)")[1]["irreducible"] == [{"x": 2, "y": 1}, {"x": 1, "y": 3}]
    assert run_json("ass", EX)[1] == {"ass": [["x", "y"], ["x", "z"], ["z", "w"]]}
    rep = run_json("dimfilt", "(x^2, x*y)")[1]
    assert rep["u"] == "x" and rep["scm"] is True


def test_stanley():
    code, rep = run_json("stanley", "(x*y)")
    assert code == 0 and rep["sdepth"] == 3 and rep["depth"] == 3 and rep["stanley_ok"] is True
    code, rep = run_json("stanley", EX)
    assert code == 2 and rep["error"] == "NotSequentiallyCM"


def test_text_output():
    code, text = run("depth", "(x^2,y^3)")
    assert code == 0
    assert "depth: 2" in text and "cm: true" in text


def test_custom_variables():
    code, rep = run_json("ass", "(a*b)", "--vars", "a,b")
    assert code == 0 and rep == {"ass": [["a"], ["b"]]}


def test_usage_and_input_errors(capsys):
    assert run("bogus")[0] == 1
    assert run()[0] == 1
    assert run("depth")[0] == 1
    assert run("depth", "(x^2, q)")[0] == 1
    assert "unknown variable" in capsys.readouterr().err
    assert run("check", "(a)", "--vars", "a,b")[0] == 1
    assert run("depth", "(1)")[0] == 1
    assert run("fuzz", "--kinds", "Octagon")[0] == 1
    assert run("fuzz", "--count", "0")[0] == 1


def test_help_exits_cleanly(capsys):
    assert run("--help")[0] == 0
    assert "filtrate" in capsys.readouterr().out


def test_fuzz_json_is_deterministic():
    a = run("fuzz", "--seed", "3", "--count", "5")
    b = run("fuzz", "--seed", "3", "--count", "5")
    assert a == b and a[0] == 0
    rep = json.loads(a[1])
    assert rep["config"]["seed"] == 3 and rep["config"]["count"] == 5
    assert set(rep) == {"config", "kinds", "scm", "two_disjoint", "oracle", "coverage", "counterexamples", "mismatches"}
