from pathlib import Path

import pytest

from judgekit.render import (SCHEMAS, ascii_enabled, derived_rule, finalize,
                             fmt_ident, latex_math, render_judgement,
                             render_rule_tree, unfold_alias)
from judgekit.theory import close_pullback

GOLDEN = Path(__file__).parent / "golden"

FIGURES = [
    ("ΠF", "pi_formation"),
    ("ΠI", "pi_introduction"),
    ("DTy", "type_dependency"),
    ("Cut", "cut"),
    ("∀I", "forall_introduction"),
]


def _rule(name):
    return derived_rule(name, "", "", None)


@pytest.mark.parametrize("name,stem", FIGURES)
def test_golden_text(name, stem):
    got = render_rule_tree(_rule(name), "text") + "\n"
    assert got == (GOLDEN / f"{stem}.txt").read_text()


@pytest.mark.parametrize("name,stem", FIGURES)
def test_golden_latex(name, stem):
    got = render_rule_tree(_rule(name), "latex") + "\n"
    assert got == (GOLDEN / f"{stem}.tex").read_text()


def test_invertible_rule_gets_a_double_line():
    txt = render_rule_tree(_rule("∀I"), "text")
    assert "═" in txt and "─" not in txt
    tex = render_rule_tree(_rule("∀I"), "latex")
    assert "\\doubleLine" in tex


def test_latex_is_bussproofs_shaped():
    tex = render_rule_tree(_rule("Cut"), "latex")
    assert tex.startswith("\\begin{prooftree}")
    assert tex.endswith("\\end{prooftree}")
    assert tex.count("\\AxiomC") == 2 and "\\BinaryInfC" in tex


def test_fmt_ident():
    assert fmt_ident((0, 1)) == "{0,1}"
    assert fmt_ident(("f", 2, 3, (0, 2))) == "⟨0,2⟩:2→3"
    assert fmt_ident("x") == "x"
    assert fmt_ident((("f", 0, 1, ()), (0,))) == "(⟨⟩:0→1,{0})"


def test_render_judgement_dictionaries(topos2):
    J = topos2
    ty = ("ty", 2, (0,))
    raw = render_judgement(J.theory, J.u, ty, "raw")
    assert "⊢" in raw and raw.startswith("2 ")
    dtt = render_judgement(J.theory, J.u, ty, "dtt")
    assert dtt.endswith("Type")
    tm = render_judgement(J.theory, J.udot, ("tm", 2), "dtt")
    assert " : " in tm          # the typing rule supplies the type
    mb = render_judgement(J.theory, J.u, ty, "mitchell-benabou")
    assert mb.startswith("{i ∈ 2") and mb.endswith("↪ 2")
    with pytest.raises(ValueError):
        render_judgement(J.theory, J.u, ty, "nonsense")


def test_render_judgement_gentzen(ds2):
    e = next(iter(ds2.E.total.objects))
    out = render_judgement(ds2.theory, ds2.E, e, "gentzen")
    assert out.count("⊢") == 1 and ";" in out


def test_ascii_mode(monkeypatch):
    monkeypatch.setenv("JT_ASCII", "1")
    assert ascii_enabled()
    assert finalize("Γ ⊢ A") == "Gamma |- A"
    txt = render_rule_tree(_rule("Cut"), "text")
    assert "⊢" not in txt and "|-" in txt
    # The inference line still spans the widest row.
    lines = txt.splitlines()
    bar = lines[1].split(" (")[0]
    assert len(bar) >= max(len(lines[0]), len(lines[2]))
    monkeypatch.delenv("JT_ASCII")
    assert not ascii_enabled()


def test_latex_math_table():
    assert "\\vdash" in latex_math("⊢")
    assert "\\Gamma" in latex_math("Γ")


def test_unfold_alias_and_expanded_tree(toy):
    T = toy.theory
    close_pullback(T, toy.u, toy.u)
    block = unfold_alias(T, "PB(u,u)")
    assert len(block.splitlines()) == 2
    rule = derived_rule("ε-ext", toy.ext_lift.premise.name,
                        toy.ext_lift.conclusion.name, toy.ext_lift.rule,
                        schema_name="ε-ext")
    expanded = render_rule_tree(rule, "text", expand=True, theory=T)
    assert expanded.splitlines()[-1].strip() == "ext(A) ⊢ A ε_A Type"


def test_unknown_schema_is_an_error():
    assert "nope" not in SCHEMAS
    with pytest.raises(ValueError):
        render_rule_tree(_rule("nope"), "text")
    with pytest.raises(ValueError):
        render_rule_tree(_rule("Cut"), "html")
