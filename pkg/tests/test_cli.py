import json
from pathlib import Path

import pytest

from judgekit.cli import REPORT_VERSION, build_parser, main

DEMOS = Path(__file__).parent.parent / "demos"


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_report_version():
    assert REPORT_VERSION == "jt/1"


def test_check_toy_demo(capsys):
    code, out = run(capsys, "check", str(DEMOS / "toy.jt"))
    assert code == 0
    assert out.startswith("report jt/1\n")
    assert "status: ok" in out
    assert "FAIL" not in out


def test_check_broken_adjunction(capsys):
    code, out = run(capsys, "check", str(DEMOS / "broken_adjunction.jt"))
    assert code == 1
    assert "triangle identity" in out
    assert "status: fail" in out


def test_check_json(capsys):
    code, out = run(capsys, "check", "--json", str(DEMOS / "toy.jt"))
    assert code == 0
    data = json.loads(out)
    assert data["report"] == "jt/1"
    assert data["status"] == "ok"
    assert all(c["status"] == "ok" for c in data["checks"])


def test_check_json_failure_carries_diagnostics(capsys):
    code, out = run(capsys, "check", "--json",
                    str(DEMOS / "broken_adjunction.jt"))
    assert code == 1
    data = json.loads(out)
    assert data["status"] == "fail"
    bad = [c for c in data["checks"] if c["status"] == "fail"]
    assert bad and any("triangle identity" in d
                       for c in bad for d in c["diagnostics"])


def test_check_syntax_error(tmp_path, capsys):
    f = tmp_path / "bad.jt"
    f.write_text("category C\n  object\n")
    code, out = run(capsys, "check", str(f))
    assert code == 1
    assert "line 2" in out


def test_demo_toy(capsys):
    code, out = run(capsys, "demo", "toy")
    assert code == 0
    assert "judgements: t, c, v" in out
    assert "ext(A) ⊢ A ε_A Type" in out


def test_demo_dtt(capsys):
    code, out = run(capsys, "demo", "dtt-finset")
    assert code == 0
    for label in ("(ΠF)", "(ΠI)", "(ΠE)", "(ΠβC)", "(ΠηC)", "(IdF)",
                  "(⅀F)", "(⅀I)", "(DTy)", "(DTm)"):
        assert label in out


def test_demo_ndt(capsys):
    code, out = run(capsys, "demo", "ndt-powerset")
    assert code == 0
    for label in ("(H)", "(Sw)", "(C)", "(W)", "(Cut)", "(∧I)", "(∀I)",
                  "(∀E)"):
        assert label in out


def test_derive_pi(capsys):
    code, out = run(capsys, "derive", "--rule", "pi",
                    str(DEMOS / "dtt_finset.jt"))
    assert code == 0
    assert out.count("(Π") == 5


def test_derive_cut(capsys):
    code, out = run(capsys, "derive", "--rule", "cut",
                    str(DEMOS / "ndt_powerset.jt"))
    assert code == 0
    assert "(Cut)" in out


def test_derive_forall(capsys):
    code, out = run(capsys, "derive", "--rule", "forall",
                    str(DEMOS / "ndt_powerset.jt"))
    assert code == 0
    assert "(∀I)" in out


def test_render_latex(capsys):
    code, out = run(capsys, "render", "--rule", "Cut", "--format", "latex")
    assert code == 0
    assert "\\begin{prooftree}" in out and "\\BinaryInfC" in out


def test_render_unknown_rule(capsys):
    code, out = run(capsys, "render", "--rule", "nope")
    assert code == 1


def test_close_reports_new_keys(capsys):
    code, out = run(capsys, "close", str(DEMOS / "toy.jt"))
    assert code == 0
    assert "PB(" in out


def test_parser_rejects_unknown_command(capsys):
    with pytest.raises(SystemExit):
        build_parser().parse_args(["frobnicate"])
