"""Narrative walkthrough: build ¬(p∧q) from ¬p∨¬q step by step.

Run with:  python3 demos/worked_deduction.py
"""

import ndplan as nd
from ndplan import rules
from ndplan.proof import RuleApplication


def show(state, caption):
    print(f"--- {caption}")
    print(nd.export_unicode(state))


s = nd.new_proof([nd.parse_infix("~p | ~q")], nd.parse_infix("~(p & q)"))
show(s, "the sequent: premise on line 1, conclusion as the goal on line 2")

# Backward rules split the selected goal into subgoals.
s = nd.select_goal(s, 2)
s = rules.apply_rule(s, RuleApplication(rule="¬I", goal=2))
show(s, "¬I opens a box: assume p∧q (line 3), aim for ⊥ (line 4)")

# Forward rules consume a selected resource.
s = nd.select_goal(s, 4)
s = nd.select_resource(s, 1)
s = rules.apply_rule(s, RuleApplication(rule="∨E", goal=4, resource=1))
show(s, "∨E splits on the premise: one box per disjunct, lines 5-8")

for goal, neg, side in ((6, 5, "left"), (8, 7, "right")):
    s = nd.select_goal(s, goal)
    s = nd.select_resource(s, neg)
    s = rules.apply_rule(s, RuleApplication(rule="¬E", goal=goal, resource=neg))
    sub = s.goals()[0]
    s = nd.select_goal(s, sub)
    s = nd.select_resource(s, 3)
    s = rules.apply_rule(s, RuleApplication(rule="∧E", goal=sub, resource=3, side=side))

show(s, "each box closes by ¬E plus ∧E on the assumption")
print("complete:", s.complete)
print()
print("LaTeX export:")
print(nd.export_latex(s))
