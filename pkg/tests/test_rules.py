import pytest

import ndplan as nd
from ndplan import proof, rules
from ndplan.errors import (
    MissingArgument,
    NoSuchAxiom,
    RuleDisabled,
    ShapeMismatch,
)
from ndplan.proof import RuleApplication

from corpus import DEMORGAN_SCRIPT, a, g, r


def play(script, upto=None):
    steps = script["steps"] if upto is None else script["steps"][:upto]
    return nd.run_script(script | {"steps": steps})


# -- the worked construction, step by step ------------------------------------


def test_neg_intro_creates_box():
    s = play(DEMORGAN_SCRIPT, 2)
    lines = s.lines()
    assert lines[2].justification.text() == "3-4,¬I"
    assert lines[3].role == "assumption"
    assert nd.print_unicode(lines[3].formula) == "p ∧ q"
    assert lines[4].is_goal and nd.print_unicode(lines[4].formula) == "⊥"


def test_or_elim_creates_two_boxes():
    s = play(DEMORGAN_SCRIPT, 5)
    lines = s.lines()
    assert lines[4].justification.text() == "1,5-6,7-8,∨E"
    assert [nd.print_unicode(lines[i].formula) for i in (5, 6, 7, 8)] == [
        "¬p", "⊥", "¬q", "⊥",
    ]
    assert lines[5].role == "assumption" and lines[7].role == "assumption"
    assert lines[6].is_goal and lines[8].is_goal


def test_neg_elim_creates_subgoal():
    s = play(DEMORGAN_SCRIPT, 8)
    lines = s.lines()
    assert lines[6].justification.text() == "5,9,¬E"
    assert lines[9].is_goal and nd.print_unicode(lines[9].formula) == "p"


def test_and_elim_closes_goal():
    s = play(DEMORGAN_SCRIPT, 11)
    assert s.lines()[9].justification.text() == "3,∧E"


def test_full_demorgan_proof(demorgan_state):
    assert demorgan_state.complete
    assert demorgan_state.lines()[8].justification.text() == "7,10,¬E"
    assert demorgan_state.lines()[10].justification.text() == "3,∧E"


# -- applicability ------------------------------------------------------------


def keys(state):
    return {(x.rule, x.side) for x in rules.list_applicable(state)}


def test_applicable_on_disjunction_nj():
    s = nd.new_proof([], nd.parse_formula("p | ~p"))
    s = nd.select_goal(s, 1)
    assert keys(s) == {("∨I", "left"), ("∨I", "right")}


def test_atomic_subgoal_has_no_rules_nj():
    s = nd.run_script(
        {"premises": [], "conclusion": "p | ~p", "steps": [g(1), a("∨I", side="left")]}
    )
    s = nd.select_goal(s, 2)
    assert keys(s) == set()


def test_nk_offers_dneg_on_any_goal():
    s = nd.new_proof([], nd.parse_formula("p | ~p"), rules.SystemProfile.nk())
    s = nd.select_goal(s, 1)
    assert ("¬¬E", None) in keys(s)


def test_applicable_forward_rules_follow_resource():
    s = nd.run_script({"premises": ["p & q", "#f"], "conclusion": "r"})
    s = nd.select_goal(s, 3)
    assert keys(s) == set()
    s = nd.select_resource(s, 1)
    assert keys(s) == {("∧E", "left"), ("∧E", "right")}
    s = nd.select_resource(s, 2)
    assert keys(s) == {("⊥E", None)}


def test_re_offered_only_with_matching_line():
    s = nd.run_script({"premises": ["p"], "conclusion": "p"})
    s = nd.select_goal(s, 2)
    assert ("Re", None) in keys(s)
    s2 = nd.run_script({"premises": ["q"], "conclusion": "p"})
    s2 = nd.select_goal(s2, 2)
    assert ("Re", None) not in keys(s2)


# -- palette ------------------------------------------------------------------


def test_palette_disable_blocks_and_hides():
    s = nd.new_proof([], nd.parse_formula("~p"))
    s = rules.toggle_palette(s, "¬I", False)
    s = nd.select_goal(s, 1)
    assert ("¬I", None) not in keys(s)
    with pytest.raises(RuleDisabled):
        rules.apply_rule(s, RuleApplication(rule="¬I", goal=1))
    s = rules.toggle_palette(s, "¬I", True)
    s = nd.select_goal(s, 1)
    assert ("¬I", None) in keys(s)


def test_system_bound_rules_stay_out_of_nj():
    s = nd.new_proof([], nd.parse_formula("p"))
    with pytest.raises(RuleDisabled):
        rules.apply_rule(s, RuleApplication(rule="¬¬E", goal=1))


# -- argument/shape errors ----------------------------------------------------


def test_shape_mismatch():
    s = nd.new_proof([], nd.parse_formula("p | q"))
    s = nd.select_goal(s, 1)
    with pytest.raises(ShapeMismatch):
        rules.apply_rule(s, RuleApplication(rule="∧I", goal=1))


def test_missing_side():
    s = nd.new_proof([], nd.parse_formula("p | q"))
    s = nd.select_goal(s, 1)
    with pytest.raises(MissingArgument):
        rules.apply_rule(s, RuleApplication(rule="∨I", goal=1))


def test_missing_witness():
    s = nd.new_proof([], nd.parse_formula("ex x P(x)"))
    s = nd.select_goal(s, 1)
    with pytest.raises(MissingArgument):
        rules.apply_rule(s, RuleApplication(rule="∃I", goal=1))


# -- quantifiers --------------------------------------------------------------


def test_forall_intro_uses_fresh_constant():
    s = nd.run_script({"premises": ["P(a1)"], "conclusion": "fa x P(x)",
                       "steps": [g(2), a("∀I")]})
    # a1 is taken by the premise, so the eigenvariable must be a2
    assert nd.print_unicode(s.lines()[3].formula) == "P(a2)"


def test_exists_elim_eigenvariable_box():
    s = nd.run_script({"premises": ["ex x P(x)"], "conclusion": "q",
                       "steps": [g(2), r(1), a("∃E")]})
    lines = s.lines()
    assert lines[2].justification.text() == "1,3-4,∃E"
    assert nd.print_unicode(lines[3].formula) == "P(a1)"
    assert nd.print_unicode(lines[4].formula) == "q"


def test_exists_elim_rejects_constant_leaking_into_goal():
    # goal mentions every candidate constant the engine would have to avoid;
    # here the conclusion itself contains a1 so the box must use a2 instead
    s = nd.run_script({"premises": ["ex x P(x)"], "conclusion": "Q(a1)",
                       "steps": [g(2), r(1), a("∃E")]})
    assert nd.print_unicode(s.lines()[3].formula) == "P(a2)"


def test_forall_elim_witness():
    s = nd.run_script({"premises": ["fa x P(x)"], "conclusion": "P(c)",
                       "steps": [g(2), r(1), a("∀E", witness="c")]})
    assert s.complete
    assert s.lines()[2].justification.text() == "1,∀E"


def test_forall_elim_inserts_when_not_goal():
    s = nd.run_script({"premises": ["fa x P(x)"], "conclusion": "q",
                       "steps": [g(2), r(1), a("∀E", witness="c")]})
    assert nd.print_unicode(s.lines()[3].formula) == "P(c)"
    assert not s.lines()[3].is_goal


# -- axioms and arithmetic ----------------------------------------------------


def test_axiom_universal_closure_only():
    s = nd.new_proof([], nd.parse_formula(r"\all{x}{\neg{\eq{\suc{x}}{\zero}}}"),
                     rules.SystemProfile.pa())
    s = nd.select_goal(s, 1)
    s = rules.instantiate_axiom(s, "S1")
    assert s.complete
    assert s.lines()[1].justification.text() == "Ax(S1)"


def test_axiom_instance_rejected():
    s = nd.new_proof([], nd.parse_formula(r"\neg{\eq{\suc{\zero}}{\zero}}"),
                     rules.SystemProfile.pa())
    s = nd.select_goal(s, 1)
    with pytest.raises(ShapeMismatch):
        rules.instantiate_axiom(s, "S1", {"x": nd.parse_term(r"\zero")})


def test_unknown_axiom():
    s = nd.new_proof([], nd.parse_formula("p"), rules.SystemProfile.pa())
    s = nd.select_goal(s, 1)
    with pytest.raises(NoSuchAxiom):
        rules.instantiate_axiom(s, "Zz")


def test_induction_splits_goal():
    s = nd.run_script({"system": "PA",
                       "premises": [r"P(\zero)", r"\all{x}{\imp{P(x)}{P(\suc{x})}}"],
                       "conclusion": r"\all{x}{P(x)}",
                       "steps": [g(3), a("Ind")]})
    lines = s.lines()
    assert lines[3].justification.text() == "4,5,Ind"
    assert lines[4].formula == nd.parse_formula(r"P(\zero)")
    assert lines[5].formula == nd.parse_formula(r"\all{x}{\imp{P(x)}{P(\suc{x})}}")


def test_equality_rules():
    s = nd.run_script({"system": "PA", "premises": [], "conclusion": r"\eq{c}{c}",
                       "steps": [g(1), a("=I")]})
    assert s.complete
    s = nd.run_script({"system": "PA", "premises": [r"\eq{c}{d}", "P(c)"],
                       "conclusion": "P(d)",
                       "steps": [g(3), r(1), a("=E", refLine=2),
                                 g(3), r(4), a("Re")]})
    assert s.complete
    assert s.lines()[4].justification.text() == "1,2,=E"


# -- magic mode ---------------------------------------------------------------


def test_magic_completes_weakening():
    s = nd.new_proof([], nd.parse_formula("p -> (q -> p)"))
    out, rounds = rules.magic_verbose(s)
    assert out.complete
    assert rounds <= 10


def test_magic_noop_on_choice_goal():
    s = nd.new_proof([], nd.parse_formula("p | q"))
    out, rounds = rules.magic_verbose(s)
    assert out == s
    assert out.goals() == [1]


def test_magic_bounded():
    # a goal magic cannot finish: it must stop within the round budget
    s = nd.new_proof([], nd.parse_formula("((p -> q) -> p) -> p"))
    out, rounds = rules.magic_verbose(s)
    assert rounds <= 10
    assert not out.complete


def test_magic_uses_only_automatic_goal_rules():
    assert set(rules.MAGIC_RULES) == {"Re", "∧I", "→I", "¬I", "∀I", "=I"}


# -- history ------------------------------------------------------------------


def test_events_are_self_contained(demorgan_state):
    assert [e.rule for e in demorgan_state.events] == ["¬I", "∨E", "¬E", "∧E", "¬E", "∧E"]
    assert all(e.goal is not None for e in demorgan_state.events)


def test_apply_clears_selection():
    s = nd.run_script({"premises": ["p"], "conclusion": "p",
                       "steps": [g(2), r(1), a("Re")]})
    assert s.goal is None and s.resource is None
