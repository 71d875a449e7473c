"""Headless proof scripts.

A script is a JSON object with the initial sequent and a list of
commands; it drives the engine exactly as an interactive session would.
See docs/scripts.md for the schema.
"""

from __future__ import annotations

from . import formula as fm
from . import proof, rules
from .errors import EngineError, NoSuchLine
from .proof import ProofState, RuleApplication
from .rules import SystemProfile


def _parse(text: str) -> fm.Formula:
    return fm.parse_formula(text)


def initial_state(script: dict) -> ProofState:
    system = SystemProfile.by_name(script.get("system", "NJ"))
    state = proof.new_proof(
        [_parse(p) for p in script.get("premises", [])],
        _parse(script["conclusion"]),
        system,
    )
    if "palette" in script:
        state.palette = set(script["palette"])
    return state


def _resolve_goal(state: ProofState, spec) -> int:
    if spec == "first":
        goals = state.goals()
        if not goals:
            raise NoSuchLine("no goal lines remain")
        return goals[0]
    return int(spec)


def _resolve_line(state: ProofState, spec) -> int:
    if isinstance(spec, str):
        wanted = _parse(spec)
        for ln, _, _, _ in state.walk():
            if ln.formula == wanted:
                return ln.creation
        raise NoSuchLine(f"no line with formula {spec!r}")
    return int(spec)


def run_step(state: ProofState, step: dict) -> ProofState:
    if "selectGoal" in step:
        return proof.select_goal(state, _resolve_goal(state, step["selectGoal"]))
    if "selectResource" in step:
        return proof.select_resource(state, _resolve_line(state, step["selectResource"]))
    if "apply" in step:
        spec = step["apply"]
        if state.goal is None:
            from .errors import NoGoalSelected

            raise NoGoalSelected("select a goal before applying a rule")
        witness = spec.get("witness")
        bindings = spec.get("bindings")
        app = RuleApplication(
            rule=spec["rule"],
            goal=state.goal,
            resource=state.resource,
            side=spec.get("side"),
            witness=fm.parse_term(witness) if witness else None,
            axiom_name=spec.get("axiomName"),
            ref_line=spec.get("refLine"),
            bindings={k: fm.parse_term(v) for k, v in bindings.items()}
            if bindings
            else None,
        )
        return rules.apply_rule(state, app)
    if "magic" in step:
        return rules.magic(state)
    if "undo" in step:
        return proof.undo(state)
    if "redo" in step:
        return proof.redo(state)
    if "palette" in step:
        return rules.toggle_palette(state, step["palette"]["rule"], step["palette"]["on"])
    raise EngineError(f"unknown script step {step!r}")


def run_script(script: dict) -> ProofState:
    """Run all steps; engine errors propagate to the caller."""
    state = initial_state(script)
    for step in script.get("steps", []):
        state = run_step(state, step)
    return state
