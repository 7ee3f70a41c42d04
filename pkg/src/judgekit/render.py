"""Display of judgements and derived rules as proof figures.

Two output targets: plaintext proof trees (premises over a labelled
inference line) and LaTeX fragments for a standard proof-tree package.
Judgement strings come in four dictionaries — the raw classifier form
``Γ ⊢ F 𝔽``, the type-theoretic form ``Γ ⊢ a : A``, the sequent form
``x; Γ ⊢ ψ``, and the subobject form used by the internal language of a
topos.  Output is deterministic: the same input always produces the
same bytes.  Setting ``JT_ASCII=1`` in the environment switches every
mathematical symbol to an ASCII spelling.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .fibrations import Classifier
from .theory import DerivedRule, PreJudgementalTheory, expand_nested

#: ASCII spellings, applied to every emitted character when JT_ASCII=1.
ASCII_TABLE = {
    "⊢": "|-", "⊣": "-|", "⊨": "|=", "∀": "forall ", "∃": "exists ",
    "∧": "/\\", "∨": "\\/", "¬": "~", "⊤": "T", "⊥": "F", "∅": "0",
    "Γ": "Gamma", "Δ": "Delta", "Θ": "Theta", "Σ": "Sigma", "Π": "Pi",
    "Φ": "Phi", "Ψ": "Psi", "Λ": "Lambda", "Ω": "Omega", "⅀": "Sum",
    "λ": "lambda", "φ": "phi", "ψ": "psi", "χ": "chi", "ε": "epsilon",
    "δ": "delta", "η": "eta", "β": "beta", "α": "alpha", "μ": "mu",
    "σ": "sigma", "τ": "tau", "γ": "gamma", "ι": "iota", "π": "pi",
    "×": "*", "∘": "o", "≤": "<=", "≥": ">=", "≅": "~=", "≠": "/=",
    "⟨": "<", "⟩": ">", "⇒": "=>", "→": "->", "↪": ">->", "∈": "in",
    "∣": "|", "⋆": "*", "∗": "*", "♯": "#", "·": ".", "𝟙": "1",
    "𝟚": "2", "𝕌": "U", "𝕌̇": "U.", "u̇": "u.", "𝔽": "F", "𝔾": "G",
    "𝔼": "E", "ℍ": "H", "ℂ": "C", "𝔸": "A", "𝕏": "X", "𝕐": "Y",
    "─": "-", "═": "=", "ℰ": "E", "𝒥": "J", "ℛ": "R", "𝒫": "P",
}

#: LaTeX math spellings for the same symbols (identity on plain ASCII).
LATEX_TABLE = {
    "⊢": "\\vdash ", "⊣": "\\dashv ", "∀": "\\forall ", "∃": "\\exists ",
    "∧": "\\land ", "∨": "\\lor ", "¬": "\\neg ", "⊤": "\\top ",
    "⊥": "\\bot ", "∅": "\\emptyset ", "Γ": "\\Gamma ", "Δ": "\\Delta ",
    "Θ": "\\Theta ", "Σ": "\\Sigma ", "Π": "\\Pi ", "Φ": "\\Phi ",
    "Ψ": "\\Psi ", "Λ": "\\Lambda ", "Ω": "\\Omega ", "⅀": "\\Sigma ",
    "λ": "\\lambda ", "φ": "\\phi ", "ψ": "\\psi ", "χ": "\\chi ",
    "ε": "\\epsilon ", "δ": "\\delta ", "η": "\\eta ", "β": "\\beta ",
    "α": "\\alpha ", "μ": "\\mu ", "σ": "\\sigma ", "τ": "\\tau ",
    "γ": "\\gamma ", "π": "\\pi ", "×": "\\times ", "∘": "\\circ ",
    "≤": "\\leq ", "≅": "\\cong ", "⟨": "\\langle ", "⟩": "\\rangle ",
    "⇒": "\\Rightarrow ", "→": "\\to ", "∈": "\\in ", "∣": "\\mid ",
    "⋆": "\\star ", "∗": "\\ast ", "·": ".", "𝕌": "\\mathbb{U}",
    "𝔽": "\\mathbb{F}", "𝔾": "\\mathbb{G}", "𝔼": "\\mathbb{E}",
    "ℍ": "\\mathbb{H}", "ℂ": "\\mathbb{C}", "𝔸": "\\mathbb{A}",
    "𝕏": "\\mathbb{X}", "𝕐": "\\mathbb{Y}", "𝟙": "\\mathsf{1}",
    "{": "\\{", "}": "\\}",
}


def ascii_enabled() -> bool:
    return os.environ.get("JT_ASCII") == "1"


def _apply(table: dict, s: str) -> str:
    return "".join(table.get(ch, ch) for ch in s)


def finalize(s: str) -> str:
    """Apply the ASCII fallback when requested (the last step of every
    text-producing function here)."""
    return _apply(ASCII_TABLE, s) if ascii_enabled() else s


def latex_math(s: str) -> str:
    return _apply(LATEX_TABLE, s)


# --------------------------------------------------------------------------
# Judgement strings.
# --------------------------------------------------------------------------

def fmt_ident(o) -> str:
    """Deterministic compact printing of the tuple identifiers used for
    objects and morphisms throughout the library."""
    if isinstance(o, tuple):
        if len(o) == 4 and o[0] == "f":
            inner = ",".join(str(i) for i in o[3])
            return f"⟨{inner}⟩:{o[1]}→{o[2]}"
        if all(isinstance(i, int) for i in o):
            return "{" + ",".join(str(i) for i in o) + "}"
        return "(" + ",".join(fmt_ident(i) for i in o) + ")"
    return str(o)


def _split(cl: Classifier, obj):
    """Base part and fiber part of a classifier object."""
    if isinstance(obj, tuple) and len(obj) == 2 and \
            cl.proj.obj_map.get(obj) == obj[0]:
        return obj[0], obj[1]
    return cl.proj.obj_map[obj], obj


def render_judgement(theory: PreJudgementalTheory, cl: Classifier, obj,
                     dictionary: str = "raw") -> str:
    """One judgement as a string, under the chosen dictionary.

    * ``raw`` — the classifier form ``Γ ⊢ F 𝔽``;
    * ``dtt`` — types read ``Γ ⊢ A Type`` and terms ``Γ ⊢ a : A``
      (the typing rule named Σ supplies the type when present);
    * ``gentzen`` — sequents read ``x; Γ ⊢ ψ``, propositions ``x ⊢ φ``;
    * ``mitchell-benabou`` — the subobject reading
      ``{i ∈ x ∣ φ(i)} ↪ x``.
    """
    base, fib = _split(cl, obj)
    if dictionary == "raw":
        out = f"{fmt_ident(base)} ⊢ {fmt_ident(fib)} {cl.name}"
    elif dictionary == "dtt":
        sigma = theory.rules.get("Σ") if theory else None
        if sigma is not None and obj in sigma.obj_map:
            ty_obj = sigma.obj_map[obj]
            owner = cl
            if ty_obj not in cl.proj.obj_map:
                # The typing rule lands in a different judgement.
                for j in theory.judgements.values():
                    if ty_obj in j.proj.obj_map:
                        owner = j
                        break
            _, ty = _split(owner, ty_obj)
            out = f"{fmt_ident(base)} ⊢ {fmt_ident(fib)} : {fmt_ident(ty)}"
        else:
            out = f"{fmt_ident(base)} ⊢ {fmt_ident(fib)} Type"
    elif dictionary == "gentzen":
        if isinstance(fib, tuple) and len(fib) == 2:
            out = f"{fmt_ident(base)}; {fmt_ident(fib[0])} ⊢ {fmt_ident(fib[1])}"
        else:
            out = f"{fmt_ident(base)} ⊢ {fmt_ident(fib)}"
    elif dictionary == "mitchell-benabou":
        out = f"{{i ∈ {fmt_ident(base)} ∣ i ∈ {fmt_ident(fib)}}} ↪ {fmt_ident(base)}"
    else:
        raise ValueError(f"unknown dictionary {dictionary!r}")
    return finalize(out)


def unfold_alias(theory: PreJudgementalTheory, key: str) -> str:
    """Expand a nested-classifier judgement into its component block
    (one judgement per line); generators come back unchanged."""
    return finalize("\n".join(expand_nested(theory, key)))


# --------------------------------------------------------------------------
# Rule schemas and proof figures.
# --------------------------------------------------------------------------

@dataclass
class RuleSchema:
    """Display data for one inference rule: premise and conclusion
    templates plus the label printed beside the line."""

    name: str
    label: str
    premises: tuple
    conclusion: str
    double: bool = False          # invertible rules get a doubled line
    dictionary: str = "raw"


#: The schemas of every rule the library derives, shaped after the
#: usual displays of these calculi.
SCHEMAS = {s.name: s for s in [
    # Context extension and dependency.
    RuleSchema("ext", "(δ)", ("Γ ⊢ A Type",), "Γ.A ⊢ q_A : A δ_A",
               dictionary="dtt"),
    RuleSchema("DTy", "(DTy)", ("Γ ⊢ a : A", "Γ.A ⊢ B Type"),
               "Γ ⊢ B⟨a⟩ Type", dictionary="dtt"),
    RuleSchema("DTm", "(DTm)", ("Γ ⊢ a : A", "Γ.A ⊢ b : B"),
               "Γ ⊢ b⟨a⟩ : B⟨a⟩", dictionary="dtt"),
    # Dependent products.
    RuleSchema("ΠF", "(ΠF)", ("Γ ⊢ A Type", "Γ.A ⊢ B Type"),
               "Γ ⊢ Π_A B Type", dictionary="dtt"),
    RuleSchema("ΠI", "(ΠI)", ("Γ ⊢ A Type", "Γ.A ⊢ b : B"),
               "Γ ⊢ λ_A b : Π_A B", dictionary="dtt"),
    RuleSchema("ΠE", "(ΠE)", ("Γ ⊢ f : Π_A B", "Γ ⊢ a : A"),
               "Γ ⊢ f(a) : B⟨a⟩", dictionary="dtt"),
    RuleSchema("ΠβC", "(ΠβC)", ("Γ.A ⊢ b : B", "Γ ⊢ a : A"),
               "Γ ⊢ (λ_A b)(a) = b⟨a⟩ : B⟨a⟩", dictionary="dtt"),
    RuleSchema("ΠηC", "(ΠηC)", ("Γ ⊢ f : Π_A B",),
               "Γ ⊢ f = λ_A(f_B) : Π_A B", dictionary="dtt"),
    # Identity types.
    RuleSchema("IdF", "(IdF)", ("Γ ⊢ A Type", "Γ ⊢ a : A", "Γ ⊢ b : A"),
               "Γ ⊢ Id_A(a,b) Type", dictionary="dtt"),
    RuleSchema("IdI", "(IdI)", ("Γ ⊢ a : A",),
               "Γ ⊢ i(a) : Id_A(a,a)", dictionary="dtt"),
    RuleSchema("IdE1", "(IdE1)", ("Γ ⊢ c : Id_A(a,b)",),
               "Γ ⊢ a = b : A", dictionary="dtt"),
    RuleSchema("IdE2", "(IdE2)", ("Γ ⊢ c : Id_A(a,b)",),
               "Γ ⊢ c = i(a) : Id_A(a,a)", dictionary="dtt"),
    # Dependent sums.
    RuleSchema("⅀F", "(⅀F)", ("Γ ⊢ A Type", "Γ.A ⊢ B Type"),
               "Γ ⊢ ⅀_A B Type", dictionary="dtt"),
    RuleSchema("⅀I", "(⅀I)",
               ("Γ ⊢ A Type", "Γ.A ⊢ B Type", "Γ ⊢ a : A", "Γ ⊢ b : B⟨a⟩"),
               "Γ ⊢ ⟨a,b⟩ : ⅀_A B", dictionary="dtt"),
    # Generic constructors.
    RuleSchema("ΦF", "(ΦF)", ("Γ ⊢ Y 𝕐",), "Γ ⊢ Φ Y Type",
               dictionary="dtt"),
    RuleSchema("ΦI", "(ΦI)", ("Γ ⊢ X 𝕏",), "Γ ⊢ Ψ X : Φ Λ X",
               dictionary="dtt"),
    # Structural rules of the sequent side.
    RuleSchema("H", "(H)", (), "x; Γ,φ ⊢ φ", dictionary="gentzen"),
    RuleSchema("Sw", "(Sw)", ("x; Γ,Δ ⊢ φ",), "x; Δ,Γ ⊢ φ",
               dictionary="gentzen"),
    RuleSchema("C", "(C)", ("x; Γ,ψ,ψ ⊢ φ",), "x; Γ,ψ ⊢ φ",
               dictionary="gentzen"),
    RuleSchema("W", "(W)", ("x; Γ ⊢ φ",), "x; Γ,ψ ⊢ φ",
               dictionary="gentzen"),
    RuleSchema("Cut", "(Cut)", ("x; Γ ⊢ φ", "x; Γ,φ ⊢ ψ"), "x; Γ ⊢ ψ",
               dictionary="gentzen"),
    # Connectives and quantifiers.
    RuleSchema("∧I", "(∧I)", ("x; Γ ⊢ φ", "x; Γ ⊢ ψ"), "x; Γ ⊢ φ∧ψ",
               dictionary="gentzen"),
    RuleSchema("∧E1", "(∧E1)", ("x; Γ ⊢ φ∧ψ",), "x; Γ ⊢ φ",
               dictionary="gentzen"),
    RuleSchema("∧E2", "(∧E2)", ("x; Γ ⊢ φ∧ψ",), "x; Γ ⊢ ψ",
               dictionary="gentzen"),
    RuleSchema("∀I", "(∀I)", ("x×y; w_y Γ ⊢ φ",), "x; Γ ⊢ ∀_y φ",
               double=True, dictionary="gentzen"),
    RuleSchema("∀E", "(∀E)", ("x; Γ ⊢ ∀_y φ",), "x; Γ ⊢ φ[t/y]",
               dictionary="gentzen"),
    # The toy theory.
    RuleSchema("e", "(e)", (), "⊢ e(∗) Ctx"),
    RuleSchema("u", "(u)", ("⊢ A Type",), "⊢ Ctx(A) Ctx"),
    RuleSchema("ε-ext", "(ext)", ("Γ ⊢ A Type",), "ext(A) ⊢ A ε_A Type"),
]}


def render_rule_tree(rule: DerivedRule, format: str = "text",
                     expand: bool = False,
                     theory: PreJudgementalTheory = None) -> str:
    """One rule as a proof figure.

    By default premises appear in their synthetic (aliased) form; with
    ``expand=True`` the premise slots are replaced by the nested-
    judgement expansion of the rule's premise classifier, so their
    number equals the number of expansion components.
    """
    schema = rule.schema
    if schema is None:
        raise ValueError(f"rule {rule.name} has no display schema")
    premises = list(schema.premises)
    if expand:
        if theory is None:
            raise ValueError("expansion needs the owning theory")
        premises = expand_nested(theory, rule.premise)
    if format == "text":
        return _text_tree(premises, schema)
    if format == "latex":
        return _latex_tree(premises, schema)
    raise ValueError(f"unknown format {format!r}")


def _text_tree(premises, schema: RuleSchema) -> str:
    # Substitute symbols first so widths are computed on what is shown.
    top = finalize("   ".join(premises))
    conclusion = finalize(schema.conclusion)
    width = max(len(top), len(conclusion)) + 2
    bar = finalize("═" if schema.double else "─") * width
    lines = []
    if top:
        lines.append(top.center(width).rstrip())
    lines.append(f"{bar} {finalize(schema.label)}")
    lines.append(conclusion.center(width).rstrip())
    return "\n".join(lines)


def _latex_tree(premises, schema: RuleSchema) -> str:
    n = len(premises)
    inf = {0: "UnaryInfC", 1: "UnaryInfC", 2: "BinaryInfC",
           3: "TrinaryInfC", 4: "QuaternaryInfC", 5: "QuinaryInfC"}[n]
    lines = ["\\begin{prooftree}"]
    if n == 0:
        lines.append("\\AxiomC{}")
    for p in premises:
        lines.append(f"\\AxiomC{{${latex_math(p)}$}}")
    if schema.double:
        lines.append("\\doubleLine")
    lines.append(f"\\LeftLabel{{{latex_math(schema.label)}}}")
    lines.append(f"\\{inf}{{${latex_math(schema.conclusion)}$}}")
    lines.append("\\end{prooftree}")
    return "\n".join(lines)


def derived_rule(name: str, premise: str, conclusion: str, underlying,
                 schema_name: str = None) -> DerivedRule:
    """Package a validated rule with its standard schema for export."""
    return DerivedRule(name, premise, conclusion, underlying,
                       SCHEMAS.get(schema_name or name))
