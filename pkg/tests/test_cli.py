import json
import shutil
import subprocess
import sys

import pytest

from alog import parse_program
from alog.cli import main
from alog.corpus import bundled_corpus_dir, load_corpus

from programs import WORKED


@pytest.fixture
def program(tmp_path):
    def write(text, name="prog.alog"):
        path = tmp_path / name
        path.write_text(WORKED.get(text, text))
        return str(path)
    return write


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_ground_p2(program, capsys):
    code, out, _ = run(["ground", program("P2")], capsys)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert set(parse_program("\n".join(lines)).rules) == set(parse_program("""
        q(a) :- card{X:p(X,a)} = 1, r(a).
        q(b) :- card{X:p(X,b)} = 1, r(b).
        r(a). r(b). p(a,b).""").rules)


def test_ground_p3(program, capsys):
    code, out, _ = run(["ground", program("P3")], capsys)
    assert code == 0
    assert "r :- q(a), card{X : p(X)} >= 2." in out.splitlines()
    assert len(out.splitlines()) == 5


def test_solve_p1_prints_empty_set(program, capsys):
    assert run(["solve", program("P1")], capsys) == (10, "{}\n", "")


def test_solve_p4_is_unsatisfiable(program, capsys):
    code, out, _ = run(["solve", program("P4")], capsys)
    assert (code, out) == (20, "")


def test_solve_p5(program, capsys):
    code, out, _ = run(["solve", program("P5"), "--mode", "both"], capsys)
    assert code == 10
    assert "val(w0,0)" in out


def test_solve_all_and_limit(program, capsys):
    path = program("p :- not q. q :- not p.")
    assert run(["solve", path, "--all"], capsys)[1].splitlines() == ["{p}", "{q}"]
    assert run(["solve", path], capsys)[1].splitlines() == ["{p}"]
    assert len(run(["solve", path, "--n", "2"], capsys)[1].splitlines()) == 2


def test_jsonl_output(program, capsys):
    code, out, _ = run(["solve", program("P7"), "--format", "jsonl", "--mode", "oracle"], capsys)
    assert code == 10
    assert json.loads(out) == {"answer_set": ["q"]}


def test_parse_error_exit_code(program, capsys):
    code, out, err = run(["solve", program("p(a) :- q(b)")], capsys)
    assert code == 2 and out == ""
    assert "1:13: expected" in err


def test_missing_file(capsys, tmp_path):
    assert run(["ground", str(tmp_path / "none.alog")], capsys)[0] == 2


def test_classical_negation_needs_the_oracle(program, capsys):
    path = program("-p. q :- -p.")
    assert run(["solve", path], capsys)[0] == 2
    assert run(["solve", path, "--mode", "oracle"], capsys)[1] == "{-p, q}\n"


def test_oracle_cap_exceeded(program, capsys):
    path = program(" ".join(f"p({i}) or q({i})." for i in range(5)))
    code, _, err = run(["solve", path, "--mode", "oracle", "--oracle-cap", "4"], capsys)
    assert code == 2 and "cap" in err


def test_bundled_corpus_passes(capsys):
    code, out, _ = run(["corpus"], capsys)
    assert code == 0
    n = len(load_corpus())
    assert out.splitlines()[-1] == f"{n}/{n} passed"


def test_perturbed_corpus_fails(tmp_path, capsys):
    for f in bundled_corpus_dir().iterdir():
        if f.name.endswith(".alog"):
            shutil.copy(f, tmp_path / f.name)
    target = tmp_path / "p7_constructive.alog"
    target.write_text(target.read_text().replace("% expect: {q}", "% expect: {p(b)}"))
    code, out, _ = run(["corpus", "--dir", str(tmp_path)], capsys)
    assert code == 1
    assert "FAIL p7_constructive" in out


def test_empty_corpus_dir(tmp_path, capsys):
    assert run(["corpus", "--dir", str(tmp_path)], capsys)[0] == 2


def test_output_is_deterministic(program, capsys):
    path = program("p(X) or q(X) :- r(X). r(a). r(b).")
    first = run(["solve", path, "--all", "--mode", "both"], capsys)
    second = run(["solve", path, "--all", "--mode", "both"], capsys)
    assert first == second
    assert first[0] == 10 and len(first[1].splitlines()) == 4


def test_console_script_entry_point(program):
    proc = subprocess.run([sys.executable, "-m", "alog.cli", "solve", program("P7")],
                          capture_output=True, text=True)
    assert (proc.returncode, proc.stdout) == (10, "{q}\n")
