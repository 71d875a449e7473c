"""Scripted NK propositional proofs, each expected to check Complete.

Every sequent here is classically valid; the acceptance suite replays
each script and cross-checks validity with the truth-table oracle.
"""


def _s(premises, conclusion, steps, system="NK"):
    return {"system": system, "premises": premises, "conclusion": conclusion, "steps": steps}


def g(n):
    return {"selectGoal": n}


def r(n):
    return {"selectResource": n}


def a(rule, **kw):
    return {"apply": {"rule": rule, **kw}}


DEMORGAN_SCRIPT = _s(
    ["~p | ~q"],
    "~(p & q)",
    [
        g(2), a("¬I"),
        g(4), r(1), a("∨E"),
        g(6), r(5), a("¬E"),
        g(9), r(3), a("∧E", side="left"),
        g(8), r(7), a("¬E"),
        g(10), r(3), a("∧E", side="right"),
    ],
    system="NJ",
)

EXCLUDED_MIDDLE_SCRIPT = _s(
    [],
    "p | ~p",
    [
        g(1), a("¬¬E"),
        g(2), a("¬I"),
        g(4), r(3), a("¬E"),
        g(5), a("∨I", side="right"),
        g(6), a("¬I"),
        g(8), r(3), a("¬E"),
        g(9), a("∨I", side="left"),
        g(10), r(7), a("Re"),
    ],
)

CORPUS = [
    ("identity", _s(["p"], "p", [g(2), r(1), a("Re")])),
    ("imp-refl", _s([], "p -> p", [g(1), a("→I"), g(3), r(2), a("Re")])),
    ("weakening-k", _s([], "p -> (q -> p)", [
        g(1), a("→I"), g(3), a("→I"), g(5), r(2), a("Re")])),
    ("and-intro", _s(["p", "q"], "p & q", [
        g(3), a("∧I"), g(4), r(1), a("Re"), g(5), r(2), a("Re")])),
    ("and-left", _s(["p & q"], "p", [g(2), r(1), a("∧E", side="left")])),
    ("and-right", _s(["p & q"], "q", [g(2), r(1), a("∧E", side="right")])),
    ("and-comm", _s(["p & q"], "q & p", [
        g(2), a("∧I"),
        g(3), r(1), a("∧E", side="right"),
        g(4), r(1), a("∧E", side="left")])),
    ("or-intro-left", _s(["p"], "p | q", [
        g(2), a("∨I", side="left"), g(3), r(1), a("Re")])),
    ("or-intro-right", _s(["q"], "p | q", [
        g(2), a("∨I", side="right"), g(3), r(1), a("Re")])),
    ("or-comm", _s(["p | q"], "q | p", [
        g(2), r(1), a("∨E"),
        g(4), a("∨I", side="right"), g(7), r(3), a("Re"),
        g(6), a("∨I", side="left"), g(8), r(5), a("Re")])),
    ("modus-ponens", _s(["p", "p -> q"], "q", [g(3), r(2), a("→E")])),
    ("imp-trans", _s(["p -> q", "q -> r"], "p -> r", [
        g(3), a("→I"),
        g(5), r(2), a("→E"),
        g(6), r(1), a("→E")])),
    ("non-contradiction", _s([], "~(p & ~p)", [
        g(1), a("¬I"),
        g(3), r(2), a("∧E", side="right"),
        g(3), r(4), a("¬E"),
        g(5), r(2), a("∧E", side="left")])),
    ("dneg-intro", _s(["p"], "~~p", [
        g(2), a("¬I"), g(4), r(3), a("¬E")])),
    ("dneg-elim", _s(["~~p"], "p", [
        g(2), a("¬¬E"), g(3), r(1), a("Re")])),
    ("excluded-middle", EXCLUDED_MIDDLE_SCRIPT),
    ("demorgan", DEMORGAN_SCRIPT),
    ("contraposition", _s(["p -> q"], "~q -> ~p", [
        g(2), a("→I"),
        g(4), a("¬I"),
        g(6), r(3), a("¬E"),
        g(7), r(1), a("→E")])),
    ("contraposition-converse", _s(["~q -> ~p"], "p -> q", [
        g(2), a("→I"),
        g(4), a("¬¬E"),
        g(5), a("¬I"),
        g(7), r(1), a("→E"),
        g(7), r(8), a("¬E")])),
    ("or-idem", _s(["p | p"], "p", [
        g(2), r(1), a("∨E"),
        g(4), r(3), a("Re"),
        g(6), r(5), a("Re")])),
    ("weakening", _s(["p"], "q -> p", [
        g(2), a("→I"), g(4), r(1), a("Re")])),
    ("and-to-or", _s(["p & q"], "p | q", [
        g(2), a("∨I", side="left"),
        g(3), r(1), a("∧E", side="left")])),
    ("curry-out", _s(["p -> (q -> r)", "p & q"], "r", [
        g(3), r(1), a("→E"),
        g(4), r(2), a("∧E", side="left"),
        g(3), r(5), a("→E"),
        g(6), r(2), a("∧E", side="right")])),
    ("case-analysis", _s(["p -> r", "q -> r", "p | q"], "r", [
        g(4), r(3), a("∨E"),
        g(6), r(1), a("→E"),
        g(8), r(2), a("→E")])),
    ("ex-falso", _s(["#f"], "p", [g(2), r(1), a("⊥E")])),
    ("contradiction-explodes", _s(["p", "~p"], "q", [
        g(3), a("¬¬E"),
        g(4), a("¬I"),
        g(6), r(2), a("¬E")])),
    ("neg-antecedent", _s(["~p"], "p -> q", [
        g(2), a("→I"),
        g(4), a("¬¬E"),
        g(5), a("¬I"),
        g(7), r(1), a("¬E")])),
    ("reductio", _s(["p -> q", "p -> ~q"], "~p", [
        g(3), a("¬I"),
        g(5), r(2), a("→E"),
        g(5), r(6), a("¬E"),
        g(7), r(1), a("→E")])),
    ("and-assoc", _s(["p & (q & r)"], "(p & q) & r", [
        g(2), a("∧I"),
        g(3), a("∧I"),
        g(5), r(1), a("∧E", side="left"),
        g(6), r(1), a("∧E", side="right"),
        g(6), r(7), a("∧E", side="left"),
        g(4), r(7), a("∧E", side="right")])),
    ("disjunctive-syllogism", _s(["p | q", "~p"], "q", [
        g(3), r(1), a("∨E"),
        g(5), a("¬¬E"),
        g(8), a("¬I"),
        g(10), r(2), a("¬E"),
        g(7), r(6), a("Re")])),
    ("conj-dup", _s(["q"], "p -> (q & q)", [
        g(2), a("→I"),
        g(4), a("∧I"),
        g(5), r(1), a("Re"),
        g(6), r(1), a("Re")])),
    ("strengthen-antecedent", _s(["p -> q"], "(r & p) -> q", [
        g(2), a("→I"),
        g(4), r(1), a("→E"),
        g(5), r(3), a("∧E", side="right")])),
]
