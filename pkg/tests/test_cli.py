import json

from inqmt import corpus
from inqmt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "-V", "p,q", "--team", "{10,11}", "p")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "eval", "-V", "p,q", "--team", "{10,01}", "p -> q")
    assert code == 1 and out.strip() == "false"
    code, out, _ = run(capsys, "eval", "-V", "p", "--team", "{}", "0")
    assert code == 0


def test_valid(capsys):
    code, out, _ = run(capsys, "valid", "-V", "p", "~~p -> p")
    assert code == 0
    code, out, _ = run(capsys, "valid", "-V", "p", "?p")
    assert code == 1


def test_flat_report(capsys):
    code, out, _ = run(capsys, "flat", "-V", "p,q", "~(p \\/ q)")
    assert code == 0
    assert "flat (pointwise support): True" in out
    code, out, _ = run(capsys, "flat", "-V", "p", "?p")
    assert code == 1


def test_translate(capsys):
    code, out, _ = run(capsys, "translate", "p \\/ ~p")
    assert code == 0 and out.strip() == "dn(p) \\/ dn(p ~> 0)"


def test_check_and_audit(tmp_path, capsys):
    script = tmp_path / "kp.sexp"
    script.write_text(corpus.text("appendix_kp"), encoding="utf-8")
    code, out, _ = run(capsys, "check", "--script", str(script))
    assert code == 0 and "result: ok" in out
    code, out, _ = run(capsys, "check", "--script", str(script), "--json")
    payload = json.loads(out)
    assert payload["ok"] and len(payload["nodes"]) == 37
    code, out, _ = run(capsys, "audit", "--script", str(script), "-V", "p")
    assert code == 0 and "result: sound" in out

    broken = tmp_path / "broken.sexp"
    broken.write_text(
        corpus.text("lemma52_base").replace('"d mon"', '"f mon"'), encoding="utf-8"
    )
    code, out, _ = run(capsys, "check", "--script", str(broken))
    assert code == 1 and "result: FAIL" in out


def test_reduce(tmp_path, capsys):
    script = tmp_path / "cut.sexp"
    script.write_text(corpus.text("cut_cap_before"), encoding="utf-8")
    out_path = tmp_path / "reduced.sexp"
    code, out, _ = run(capsys, "reduce", "--script", str(script), "--out", str(out_path))
    assert code == 0
    assert "reduced 1 principal cut(s)" in out
    assert out_path.read_text(encoding="utf-8") == corpus.text("cut_cap_after")


def test_selftest_fast(capsys):
    code, out, _ = run(capsys, "selftest", "--level", "fast")
    assert code == 0
    assert "result: all suites pass" in out
    assert "corpus replay" in out


def test_usage_errors(capsys):
    code, _, err = run(capsys, "valid", "p")
    assert code == 2 and "usage error" in err
    code, _, err = run(capsys, "eval", "-V", "p", "p")
    assert code == 2
    code, _, err = run(capsys, "valid", "-V", "p", "p -> ")
    assert code == 2 and "input error" in err
    code, _, err = run(capsys, "check", "--script", "/nonexistent/x.sexp")
    assert code == 2
    code, _, _ = run(capsys, "nosuchcommand")
    assert code == 2
    code, _, err = run(capsys, "eval", "-V", "p,q", "--team", "{101}", "p")
    assert code == 2


def test_size_cap_exit_code(capsys):
    code, _, err = run(capsys, "valid", "-V", "a,b,c,d,e", "a")
    assert code == 3 and "size cap" in err


def test_json_outputs(capsys):
    code, out, _ = run(capsys, "valid", "-V", "p", "~~p -> p", "--json")
    assert code == 0 and json.loads(out)["valid"] is True
    code, out, _ = run(capsys, "selftest", "--level", "fast", "--json")
    assert code == 0
    suites = json.loads(out)["suites"]
    assert all(s["ok"] for s in suites)
