"""Rule definitions and the application engine.

Backward (introduction) rules act on the current goal, splitting it into
subgoals; forward (elimination) rules act on a selected resource.  New
lines are placed immediately above the goal they serve, so the creation
numbers record construction order while the vertical layout stays in
reading order.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import formula as fm
from .errors import (
    EigenvariableViolation,
    MissingArgument,
    NoSuchAxiom,
    NoSuchLine,
    NotAGoal,
    NotJustified,
    OutOfScope,
    RuleDisabled,
    ShapeMismatch,
)
from .proof import (
    Box,
    Justification,
    ProofLine,
    ProofState,
    RuleApplication,
    line_ref,
    range_ref,
)

AND_I, AND_E = "∧I", "∧E"
OR_I, OR_E = "∨I", "∨E"
IMP_I, IMP_E = "→I", "→E"
NOT_I, NOT_E = "¬I", "¬E"
FALSUM_E = "⊥E"
DNEG_E = "¬¬E"
ALL_I, ALL_E = "∀I", "∀E"
SOME_I, SOME_E = "∃I", "∃E"
EQ_I, EQ_E = "=I", "=E"
REITERATE = "Re"
INDUCTION = "Ind"
AXIOM = "Ax"
PREM, ASS = "Prem", "Ass"


@dataclass(frozen=True)
class RuleInfo:
    kind: str  # "backward" | "forward" | "structural"
    klass: str  # "automatic" | "choice"


RULES: dict[str, RuleInfo] = {
    AND_I: RuleInfo("backward", "automatic"),
    OR_I: RuleInfo("backward", "choice"),
    IMP_I: RuleInfo("backward", "automatic"),
    NOT_I: RuleInfo("backward", "automatic"),
    DNEG_E: RuleInfo("backward", "choice"),
    ALL_I: RuleInfo("backward", "automatic"),
    SOME_I: RuleInfo("backward", "choice"),
    EQ_I: RuleInfo("backward", "automatic"),
    INDUCTION: RuleInfo("backward", "choice"),
    REITERATE: RuleInfo("backward", "automatic"),
    AXIOM: RuleInfo("backward", "choice"),
    AND_E: RuleInfo("forward", "choice"),
    IMP_E: RuleInfo("forward", "automatic"),
    NOT_E: RuleInfo("forward", "automatic"),
    OR_E: RuleInfo("forward", "automatic"),
    FALSUM_E: RuleInfo("forward", "automatic"),
    ALL_E: RuleInfo("forward", "choice"),
    SOME_E: RuleInfo("forward", "automatic"),
    EQ_E: RuleInfo("forward", "choice"),
    PREM: RuleInfo("structural", "automatic"),
    ASS: RuleInfo("structural", "automatic"),
}

# goal-driven rules needing no extra input; the only ones magic may use
MAGIC_RULES = (REITERATE, AND_I, IMP_I, NOT_I, ALL_I, EQ_I)

_NJ_RULES = frozenset(
    {AND_I, AND_E, OR_I, OR_E, IMP_I, IMP_E, NOT_I, NOT_E, FALSUM_E,
     ALL_I, ALL_E, SOME_I, SOME_E, REITERATE, PREM, ASS}
)

_PA_AXIOMS = (
    ("S1", "\\all{x}{\\neg{\\eq{\\suc{x}}{\\zero}}}"),
    ("S2", "\\all{x}{\\all{y}{\\imp{\\eq{\\suc{x}}{\\suc{y}}}{\\eq{x}{y}}}}"),
    ("A1", "\\all{x}{\\eq{\\plus{x}{\\zero}}{x}}"),
    ("A2", "\\all{x}{\\all{y}{\\eq{\\plus{x}{\\suc{y}}}{\\suc{\\plus{x}{y}}}}}"),
    ("M1", "\\all{x}{\\eq{\\times{x}{\\zero}}{\\zero}}"),
    ("M2", "\\all{x}{\\all{y}{\\eq{\\times{x}{\\suc{y}}}{\\plus{\\times{x}{y}}{x}}}}"),
)


@dataclass(frozen=True)
class SystemProfile:
    name: str
    enabled_rules: frozenset[str]
    axioms: tuple[tuple[str, fm.Formula], ...] = ()

    @classmethod
    def nj(cls) -> "SystemProfile":
        return cls("NJ", _NJ_RULES)

    @classmethod
    def nk(cls) -> "SystemProfile":
        return cls("NK", _NJ_RULES | {DNEG_E})

    @classmethod
    def pa(cls) -> "SystemProfile":
        axioms = tuple((n, fm.parse_prefix(s)) for n, s in _PA_AXIOMS)
        return cls("PA", _NJ_RULES | {DNEG_E, EQ_I, EQ_E, INDUCTION, AXIOM}, axioms)

    @classmethod
    def custom(cls, enabled_rules, axioms=()) -> "SystemProfile":
        return cls("Custom", frozenset(enabled_rules), tuple(axioms))

    @classmethod
    def by_name(cls, name: str) -> "SystemProfile":
        table = {"NJ": cls.nj, "NK": cls.nk, "PA": cls.pa}
        if name not in table:
            raise ValueError(f"unknown system {name!r}")
        return table[name]()

    def axiom(self, name: str) -> fm.Formula:
        for n, f in self.axioms:
            if n == name:
                return f
        raise NoSuchAxiom(f"no axiom named {name!r}")

    def allows(self, rule: str) -> bool:
        if rule.startswith("Ax(") and rule.endswith(")"):
            return AXIOM in self.enabled_rules and any(
                n == rule[3:-1] for n, _ in self.axioms
            )
        return rule in self.enabled_rules


@dataclass
class Applicable:
    rule: str
    side: str | None = None
    axiom_name: str | None = None
    needs: tuple[str, ...] = ()

    def key(self):
        return (self.rule, self.side, self.axiom_name)


# ---------------------------------------------------------------------------
# application


def apply_rule(state: ProofState, app: RuleApplication) -> ProofState:
    """Validate against palette and system, then perform the move."""
    base = AXIOM if app.rule.startswith("Ax(") else app.rule
    if base not in RULES:
        raise ShapeMismatch(f"unknown rule {app.rule!r}")
    if base == AXIOM and AXIOM in state.system.enabled_rules:
        state.system.axiom(app.axiom_name or app.rule[3:-1])  # NoSuchAxiom
    if not state.system.allows(app.rule) or (
        base not in state.palette and app.rule not in state.palette
    ):
        raise RuleDisabled(f"rule {app.rule} is not available")
    ns = state.copy()
    applied = ns.cursor
    perform(ns, app)
    ns.events = ns.events[:applied] + [app]  # a new move drops the redo tail
    ns.cursor = applied + 1
    ns.goal = None
    ns.resource = None
    return ns


def perform(state: ProofState, app: RuleApplication) -> None:
    """Engine core: mutate ``state`` per the rule semantics.  Bypasses the
    palette (used by replay) but still enforces every precondition."""
    rule = AXIOM if app.rule.startswith("Ax(") else app.rule
    goal = state.line(app.goal)
    if not goal.is_goal:
        raise NotAGoal(f"line {app.goal} is already justified", at=app.goal)
    info = RULES.get(rule)
    if info is None or info.kind == "structural":
        raise ShapeMismatch(f"rule {app.rule!r} cannot be applied")
    resource = None
    if info.kind == "forward":
        if app.resource is None:
            raise MissingArgument("resource", at=app.goal)
        resource = state.line(app.resource)
        if resource.is_goal:
            raise NotJustified(f"line {app.resource} is not justified", at=app.resource)
        if app.resource not in state.lines_in_scope(app.goal):
            raise OutOfScope(
                f"line {app.resource} is out of scope of the goal", at=app.resource
            )
    _DISPATCH[rule](state, app, goal, resource)
    state.cursor += 1


def _require_side(app) -> str:
    if app.side not in ("left", "right"):
        raise MissingArgument("side", at=app.goal)
    return app.side


def _require_witness(app) -> fm.Term:
    if app.witness is None:
        raise MissingArgument("witness", at=app.goal)
    return app.witness


def _goal_line(state, formula) -> ProofLine:
    return state.new_line(formula, "derived", None)


def _find_antecedent(state, goal_creation: int, wanted: fm.Formula) -> int | None:
    """An in-scope line (justified or still a goal) with the wanted formula."""
    in_scope = state.lines_in_scope(goal_creation)
    hits = [c for c in sorted(in_scope) if state.line(c).formula == wanted]
    return hits[0] if hits else None


# -- backward rules ----------------------------------------------------------


def _and_i(state, app, goal, _):
    f = goal.formula
    if not isinstance(f, fm.And):
        raise ShapeMismatch("∧I needs a conjunction goal", at=goal.creation)
    a = _goal_line(state, f.left)
    b = _goal_line(state, f.right)
    state.insert_above(goal.creation, [a, b])
    goal.justification = Justification(AND_I, (line_ref(a.creation), line_ref(b.creation)))


def _or_i(state, app, goal, _):
    f = goal.formula
    if not isinstance(f, fm.Or):
        raise ShapeMismatch("∨I needs a disjunction goal", at=goal.creation)
    side = _require_side(app)
    sub = _goal_line(state, f.left if side == "left" else f.right)
    state.insert_above(goal.creation, [sub])
    goal.justification = Justification(OR_I, (line_ref(sub.creation),))


def _imp_i(state, app, goal, _):
    f = goal.formula
    if not isinstance(f, fm.Implies):
        raise ShapeMismatch("→I needs an implication goal", at=goal.creation)
    ass = state.new_line(f.left, "assumption", Justification(ASS))
    sub = _goal_line(state, f.right)
    state.insert_above(goal.creation, [Box([ass, sub])])
    goal.justification = Justification(IMP_I, (range_ref(ass.creation, sub.creation),))


def _not_i(state, app, goal, _):
    f = goal.formula
    if not isinstance(f, fm.Not):
        raise ShapeMismatch("¬I needs a negated goal", at=goal.creation)
    ass = state.new_line(f.body, "assumption", Justification(ASS))
    sub = _goal_line(state, fm.FALSUM)
    state.insert_above(goal.creation, [Box([ass, sub])])
    goal.justification = Justification(NOT_I, (range_ref(ass.creation, sub.creation),))


def _dneg_e(state, app, goal, _):
    sub = _goal_line(state, fm.Not(fm.Not(goal.formula)))
    state.insert_above(goal.creation, [sub])
    goal.justification = Justification(DNEG_E, (line_ref(sub.creation),))


def _all_i(state, app, goal, _):
    f = goal.formula
    if not isinstance(f, fm.ForAll):
        raise ShapeMismatch("∀I needs a universal goal", at=goal.creation)
    c = fm.fresh_constant(state.used_names())
    sub = _goal_line(state, fm.substitute(f.body, f.var, c))
    state.insert_above(goal.creation, [sub])
    goal.justification = Justification(ALL_I, (line_ref(sub.creation),))


def _some_i(state, app, goal, _):
    f = goal.formula
    if not isinstance(f, fm.Exists):
        raise ShapeMismatch("∃I needs an existential goal", at=goal.creation)
    t = _require_witness(app)
    sub = _goal_line(state, fm.substitute(f.body, f.var, t))
    state.insert_above(goal.creation, [sub])
    goal.justification = Justification(SOME_I, (line_ref(sub.creation),))


def _eq_i(state, app, goal, _):
    f = goal.formula
    if not (isinstance(f, fm.Equals) and f.left == f.right):
        raise ShapeMismatch("=I needs a goal of the form t = t", at=goal.creation)
    goal.justification = Justification(EQ_I)


def _induction(state, app, goal, _):
    f = goal.formula
    if not isinstance(f, fm.ForAll):
        raise ShapeMismatch("Ind needs a universal goal", at=goal.creation)
    base = _goal_line(state, fm.substitute(f.body, f.var, fm.ZERO))
    step_body = fm.Implies(
        f.body, fm.substitute(f.body, f.var, fm.suc(fm.Variable(f.var)))
    )
    step = _goal_line(state, fm.ForAll(f.var, step_body))
    state.insert_above(goal.creation, [base, step])
    goal.justification = Justification(
        INDUCTION, (line_ref(base.creation), line_ref(step.creation))
    )


def _reiterate(state, app, goal, _):
    ref = app.ref_line
    if ref is None:
        # deterministic pick: lowest-numbered matching justified line
        for c in sorted(state.lines_in_scope(goal.creation)):
            ln = state.line(c)
            if not ln.is_goal and ln.formula == goal.formula:
                ref = c
                break
    if ref is None:
        raise ShapeMismatch("no in-scope justified line matches the goal", at=goal.creation)
    ln = state.line(ref)
    if ln.is_goal or ln.formula != goal.formula:
        raise ShapeMismatch("Re needs an identical justified line", at=goal.creation)
    if ref not in state.lines_in_scope(goal.creation):
        raise OutOfScope(f"line {ref} is out of scope", at=ref)
    goal.justification = Justification(REITERATE, (line_ref(ref),))


def _axiom(state, app, goal, _):
    name = app.axiom_name
    if name is None and app.rule.startswith("Ax("):
        name = app.rule[3:-1]
    if name is None:
        raise MissingArgument("axiomName", at=goal.creation)
    schema = state.system.axiom(name)
    inst = schema
    for var, term in (app.bindings or {}).items():
        inst = fm.substitute(inst, var, term)
    if inst != goal.formula:
        raise ShapeMismatch(
            f"axiom {name} does not match the goal", at=goal.creation
        )
    goal.justification = Justification(f"Ax({name})")


# -- forward rules -----------------------------------------------------------


def _and_e(state, app, goal, resource):
    f = resource.formula
    if not isinstance(f, fm.And):
        raise ShapeMismatch("∧E needs a conjunction resource", at=resource.creation)
    side = _require_side(app)
    picked = f.left if side == "left" else f.right
    just = Justification(AND_E, (line_ref(resource.creation),))
    if picked == goal.formula:
        goal.justification = just
    else:
        state.insert_above(goal.creation, [state.new_line(picked, "derived", just)])


def _imp_e(state, app, goal, resource):
    f = resource.formula
    if not isinstance(f, fm.Implies):
        raise ShapeMismatch("→E needs an implication resource", at=resource.creation)
    n_a = _find_antecedent(state, goal.creation, f.left)
    new = []
    if n_a is None:
        sub = _goal_line(state, f.left)
        new.append(sub)
        n_a = sub.creation
    just = Justification(IMP_E, (line_ref(resource.creation), line_ref(n_a)))
    if f.right == goal.formula:
        state.insert_above(goal.creation, new)
        goal.justification = just
    else:
        new.append(state.new_line(f.right, "derived", just))
        state.insert_above(goal.creation, new)


def _not_e(state, app, goal, resource):
    f = resource.formula
    if not isinstance(f, fm.Not):
        raise ShapeMismatch("¬E needs a negated resource", at=resource.creation)
    if not isinstance(goal.formula, fm.Falsum):
        raise ShapeMismatch("¬E requires the goal ⊥", at=goal.creation)
    n_a = _find_antecedent(state, goal.creation, f.body)
    new = []
    if n_a is None:
        sub = _goal_line(state, f.body)
        new.append(sub)
        n_a = sub.creation
    state.insert_above(goal.creation, new)
    goal.justification = Justification(
        NOT_E, (line_ref(resource.creation), line_ref(n_a))
    )


def _or_e(state, app, goal, resource):
    f = resource.formula
    if not isinstance(f, fm.Or):
        raise ShapeMismatch("∨E needs a disjunction resource", at=resource.creation)
    ass1 = state.new_line(f.left, "assumption", Justification(ASS))
    sub1 = _goal_line(state, goal.formula)
    ass2 = state.new_line(f.right, "assumption", Justification(ASS))
    sub2 = _goal_line(state, goal.formula)
    state.insert_above(goal.creation, [Box([ass1, sub1]), Box([ass2, sub2])])
    goal.justification = Justification(
        OR_E,
        (
            line_ref(resource.creation),
            range_ref(ass1.creation, sub1.creation),
            range_ref(ass2.creation, sub2.creation),
        ),
    )


def _falsum_e(state, app, goal, resource):
    if not isinstance(resource.formula, fm.Falsum):
        raise ShapeMismatch("⊥E needs the resource ⊥", at=resource.creation)
    goal.justification = Justification(FALSUM_E, (line_ref(resource.creation),))


def _all_e(state, app, goal, resource):
    f = resource.formula
    if not isinstance(f, fm.ForAll):
        raise ShapeMismatch("∀E needs a universal resource", at=resource.creation)
    t = _require_witness(app)
    inst = fm.substitute(f.body, f.var, t)
    just = Justification(ALL_E, (line_ref(resource.creation),))
    if inst == goal.formula:
        goal.justification = just
    else:
        state.insert_above(goal.creation, [state.new_line(inst, "derived", just)])


def _some_e(state, app, goal, resource):
    f = resource.formula
    if not isinstance(f, fm.Exists):
        raise ShapeMismatch("∃E needs an existential resource", at=resource.creation)
    c = fm.fresh_constant(state.used_names())
    if c.name in fm.constants(goal.formula):
        raise EigenvariableViolation(
            f"{c.name} occurs in the goal", at=goal.creation
        )
    ass = state.new_line(
        fm.substitute(f.body, f.var, c), "assumption", Justification(ASS)
    )
    sub = _goal_line(state, goal.formula)
    state.insert_above(goal.creation, [Box([ass, sub])])
    goal.justification = Justification(
        SOME_E, (line_ref(resource.creation), range_ref(ass.creation, sub.creation))
    )


def _replace_term(obj, old: fm.Term, new: fm.Term):
    if isinstance(obj, fm.Term):
        if obj == old:
            return new
        if isinstance(obj, fm.Function):
            return fm.Function(obj.symbol, tuple(_replace_term(a, old, new) for a in obj.args))
        return obj
    f = obj
    if isinstance(f, fm.Atom):
        return fm.Atom(f.predicate, tuple(_replace_term(a, old, new) for a in f.args))
    if isinstance(f, fm.Equals):
        return fm.Equals(_replace_term(f.left, old, new), _replace_term(f.right, old, new))
    if isinstance(f, fm.Not):
        return fm.Not(_replace_term(f.body, old, new))
    if isinstance(f, (fm.And, fm.Or, fm.Implies)):
        return type(f)(_replace_term(f.left, old, new), _replace_term(f.right, old, new))
    if isinstance(f, (fm.ForAll, fm.Exists)):
        return type(f)(f.var, _replace_term(f.body, old, new))
    return f


def _eq_e(state, app, goal, resource):
    f = resource.formula
    if not isinstance(f, fm.Equals):
        raise ShapeMismatch("=E needs an equality resource", at=resource.creation)
    if app.ref_line is None:
        raise MissingArgument("refLine", at=goal.creation)
    other = state.line(app.ref_line)
    if other.is_goal:
        raise NotJustified(f"line {app.ref_line} is not justified", at=app.ref_line)
    if app.ref_line not in state.lines_in_scope(goal.creation):
        raise OutOfScope(f"line {app.ref_line} is out of scope", at=app.ref_line)
    rewritten = _replace_term(other.formula, f.left, f.right)
    just = Justification(
        EQ_E, (line_ref(resource.creation), line_ref(app.ref_line))
    )
    state.insert_above(goal.creation, [state.new_line(rewritten, "derived", just)])


_DISPATCH = {
    AND_I: _and_i,
    OR_I: _or_i,
    IMP_I: _imp_i,
    NOT_I: _not_i,
    DNEG_E: _dneg_e,
    ALL_I: _all_i,
    SOME_I: _some_i,
    EQ_I: _eq_i,
    INDUCTION: _induction,
    REITERATE: _reiterate,
    AXIOM: _axiom,
    AND_E: _and_e,
    IMP_E: _imp_e,
    NOT_E: _not_e,
    OR_E: _or_e,
    FALSUM_E: _falsum_e,
    ALL_E: _all_e,
    SOME_E: _some_e,
    EQ_E: _eq_e,
}


# ---------------------------------------------------------------------------
# availability


def _backward_applicable(state: ProofState, goal: ProofLine) -> list[Applicable]:
    f = goal.formula
    out: list[Applicable] = []
    if isinstance(f, fm.And):
        out.append(Applicable(AND_I))
    if isinstance(f, fm.Or):
        out.append(Applicable(OR_I, side="left"))
        out.append(Applicable(OR_I, side="right"))
    if isinstance(f, fm.Implies):
        out.append(Applicable(IMP_I))
    if isinstance(f, fm.Not):
        out.append(Applicable(NOT_I))
    if isinstance(f, fm.ForAll):
        out.append(Applicable(ALL_I))
        out.append(Applicable(INDUCTION))
    if isinstance(f, fm.Exists):
        out.append(Applicable(SOME_I, needs=("witness",)))
    if isinstance(f, fm.Equals) and f.left == f.right:
        out.append(Applicable(EQ_I))
    for c in sorted(state.lines_in_scope(goal.creation)):
        ln = state.line(c)
        if not ln.is_goal and ln.formula == f:
            out.append(Applicable(REITERATE))
            break
    for name, schema in state.system.axioms:
        if schema == f:
            out.append(Applicable(AXIOM, axiom_name=name))
    out.append(Applicable(DNEG_E))
    return out


def _forward_applicable(goal: ProofLine, resource: ProofLine) -> list[Applicable]:
    f = resource.formula
    out: list[Applicable] = []
    if isinstance(f, fm.And):
        out.append(Applicable(AND_E, side="left"))
        out.append(Applicable(AND_E, side="right"))
    if isinstance(f, fm.Implies):
        out.append(Applicable(IMP_E))
    if isinstance(f, fm.Not) and isinstance(goal.formula, fm.Falsum):
        out.append(Applicable(NOT_E))
    if isinstance(f, fm.Or):
        out.append(Applicable(OR_E))
    if isinstance(f, fm.Falsum):
        out.append(Applicable(FALSUM_E))
    if isinstance(f, fm.ForAll):
        out.append(Applicable(ALL_E, needs=("witness",)))
    if isinstance(f, fm.Exists):
        out.append(Applicable(SOME_E))
    if isinstance(f, fm.Equals):
        out.append(Applicable(EQ_E, needs=("refLine",)))
    return out


def list_applicable(state: ProofState) -> list[Applicable]:
    """Rules whose preconditions hold for the current goal (and resource),
    filtered by the palette and the system profile."""
    if state.goal is None:
        return []
    goal = state.line(state.goal)
    items = _backward_applicable(state, goal)
    if state.resource is not None:
        items += _forward_applicable(goal, state.line(state.resource))
    allowed = []
    for it in items:
        if it.rule == AXIOM:
            if state.system.allows(f"Ax({it.axiom_name})") and AXIOM in state.palette:
                allowed.append(it)
        elif state.system.allows(it.rule) and it.rule in state.palette:
            allowed.append(it)
    return allowed


def toggle_palette(state: ProofState, rule: str, on: bool) -> ProofState:
    ns = state.copy()
    if on:
        ns.palette.add(rule)
    else:
        ns.palette.discard(rule)
    return ns


# ---------------------------------------------------------------------------
# magic mode

MAGIC_MAX_ROUNDS = 10


def magic_verbose(state: ProofState) -> tuple[ProofState, int]:
    """Apply no-input goal-driven rules for up to ``MAGIC_MAX_ROUNDS``
    rounds; returns the new state and the number of rounds run."""
    ns = state
    rounds = 0
    for _ in range(MAGIC_MAX_ROUNDS):
        rounds += 1
        changed = False
        for creation in ns.goals():
            ln = ns.line(creation)
            if not ln.is_goal:
                continue  # closed earlier this round
            for rule in MAGIC_RULES:
                if not (ns.system.allows(rule) and rule in ns.palette):
                    continue
                if not _magic_matches(ns, ln, rule):
                    continue
                ns = apply_rule(ns, RuleApplication(rule=rule, goal=creation))
                changed = True
                break
        if not changed:
            break
    return ns, rounds


def _magic_matches(state: ProofState, goal: ProofLine, rule: str) -> bool:
    f = goal.formula
    if rule == AND_I:
        return isinstance(f, fm.And)
    if rule == IMP_I:
        return isinstance(f, fm.Implies)
    if rule == NOT_I:
        return isinstance(f, fm.Not)
    if rule == ALL_I:
        return isinstance(f, fm.ForAll)
    if rule == EQ_I:
        return isinstance(f, fm.Equals) and f.left == f.right
    if rule == REITERATE:
        return any(
            not state.line(c).is_goal and state.line(c).formula == f
            for c in state.lines_in_scope(goal.creation)
        )
    return False


def magic(state: ProofState) -> ProofState:
    return magic_verbose(state)[0]


def instantiate_axiom(state: ProofState, name: str, bindings=None) -> ProofState:
    from .errors import NoGoalSelected

    if state.goal is None:
        raise NoGoalSelected("select a goal first")
    state.system.axiom(name)  # raises NoSuchAxiom early
    app = RuleApplication(
        rule=f"Ax({name})", goal=state.goal, axiom_name=name, bindings=bindings
    )
    return apply_rule(state, app)
