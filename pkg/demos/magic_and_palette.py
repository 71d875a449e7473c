"""Narrative walkthrough: rule palette pedagogy and magic mode.

Run with:  python3 demos/magic_and_palette.py
"""

import ndplan as nd
from ndplan import rules

# In NJ, the excluded middle gets stuck: the only offers on p∨¬p are the
# two ∨I sides, and either leaves an unprovable atomic goal.
s = nd.new_proof([], nd.parse_infix("p | ~p"))
s = nd.select_goal(s, 1)
print("NJ offers on p∨¬p:", [(x.rule, x.side) for x in rules.list_applicable(s)])

# Switching to NK enables ¬¬E, and the classical proof goes through.
nk = nd.run_script({
    "system": "NK", "premises": [], "conclusion": "p | ~p",
    "steps": [
        {"selectGoal": 1}, {"apply": {"rule": "¬¬E"}},
        {"selectGoal": 2}, {"apply": {"rule": "¬I"}},
        {"selectGoal": 4}, {"selectResource": 3}, {"apply": {"rule": "¬E"}},
        {"selectGoal": 5}, {"apply": {"rule": "∨I", "side": "right"}},
        {"selectGoal": 6}, {"apply": {"rule": "¬I"}},
        {"selectGoal": 8}, {"selectResource": 3}, {"apply": {"rule": "¬E"}},
        {"selectGoal": 9}, {"apply": {"rule": "∨I", "side": "left"}},
        {"selectGoal": 10}, {"selectResource": 7}, {"apply": {"rule": "Re"}},
    ],
})
print()
print("NK proof of the excluded middle:")
print(nd.export_unicode(nk))

# Magic mode applies only automatic goal-driven rules, up to 10 rounds.
m, rounds = rules.magic_verbose(nd.new_proof([], nd.parse_infix("p -> (q -> p)")))
print(f"magic finished p → (q → p) in {rounds} rounds:")
print(nd.export_unicode(m))
