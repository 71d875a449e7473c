"""Independent proof verification.

The checker re-derives everything from the layout tree: scopes, box
well-formedness, numbering, justification shapes and eigenvariable
conditions.  It never consults the construction history or the palette,
so hand-edited save files get the same scrutiny as live proofs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import formula as fm
from .proof import ProofLine, ProofState


@dataclass
class Diagnostic:
    creation: int
    code: str
    message: str

    def text(self) -> str:
        return f"{self.creation}:{self.code}:{self.message}"


@dataclass
class CheckReport:
    status: str  # "Complete" | "IncompleteButSound" | "Invalid"
    diagnostics: list[Diagnostic] = field(default_factory=list)

    def to_text(self) -> str:
        return "\n".join(d.text() for d in self.diagnostics)


# -- instance matching --------------------------------------------------------


def _match_term(pattern: fm.Term, var: str, target: fm.Term, out: dict) -> bool:
    if isinstance(pattern, fm.Variable) and pattern.name == var:
        if var in out:
            return out[var] == target
        out[var] = target
        return True
    if type(pattern) is not type(target):
        return False
    if isinstance(pattern, (fm.Variable, fm.Constant)):
        return pattern == target
    assert isinstance(pattern, fm.Function) and isinstance(target, fm.Function)
    if pattern.symbol != target.symbol or len(pattern.args) != len(target.args):
        return False
    return all(
        _match_term(p, var, t, out) for p, t in zip(pattern.args, target.args)
    )


def match_instance(pattern: fm.Formula, var: str, target: fm.Formula):
    """Find t with pattern[var := t] == target, treating free occurrences
    of ``var`` as the single hole.  Returns the term, ``True`` when the
    match holds with no free occurrence, or ``None`` on failure."""
    out: dict = {}

    def rec(p, t, shadowed: bool) -> bool:
        if type(p) is not type(t):
            return False
        if isinstance(p, fm.Atom):
            if p.predicate != t.predicate or len(p.args) != len(t.args):
                return False
            if shadowed:
                return p == t
            return all(_match_term(pa, var, ta, out) for pa, ta in zip(p.args, t.args))
        if isinstance(p, fm.Equals):
            if shadowed:
                return p == t
            return _match_term(p.left, var, t.left, out) and _match_term(
                p.right, var, t.right, out
            )
        if isinstance(p, fm.Falsum):
            return True
        if isinstance(p, fm.Not):
            return rec(p.body, t.body, shadowed)
        if isinstance(p, (fm.And, fm.Or, fm.Implies)):
            return rec(p.left, t.left, shadowed) and rec(p.right, t.right, shadowed)
        if isinstance(p, (fm.ForAll, fm.Exists)):
            if p.var != t.var:
                return False
            return rec(p.body, t.body, shadowed or p.var == var)
        return False

    if not rec(pattern, target, False):
        return None
    if var not in out:
        return True  # no free occurrence; any witness works
    # confirm through the real substitution (capture handling must agree)
    if fm.substitute(pattern, var, out[var]) != target:
        return None
    return out[var]


# -- the checker --------------------------------------------------------------


class _Checker:
    def __init__(self, state: ProofState, system):
        self.state = state
        self.system = system
        self.diags: list[Diagnostic] = []
        self.info = {ln.creation: (ln, pos, chain) for ln, pos, chain, _ in state.walk()}
        self.box_index = list(state.boxes())
        self.premise_formulas = [
            ln.formula for ln, _, _, _ in state.walk()
            if not ln.is_goal and ln.justification.rule == "Prem"
        ]

    def fail(self, creation: int, code: str, message: str):
        self.diags.append(Diagnostic(creation, code, message))

    def run(self) -> list[Diagnostic]:
        self.check_numbering()
        self.check_boxes()
        for ln, _, _, _ in self.state.walk():
            self.check_one(ln)
        return self.diags

    def check_numbering(self):
        creations = sorted(self.info)
        if creations != list(range(1, len(creations) + 1)):
            self.fail(0, "BadNumbering", f"creations {creations} are not 1..n")

    def check_boxes(self):
        for box, _, _, _ in self.box_index:
            if not box.body:
                self.fail(0, "BadRange", "empty box")
                continue
            first = box.body[0]
            if not isinstance(first, ProofLine) or first.role != "assumption":
                c = first.creation if isinstance(first, ProofLine) else 0
                self.fail(c, "BadRange", "box does not open with an assumption")
            if not isinstance(box.body[-1], ProofLine):
                self.fail(0, "BadRange", "box does not end on a line")

    # scope helpers -----------------------------------------------------------

    def line_ok(self, ref: int, at: int) -> bool:
        if ref not in self.info:
            self.fail(at, "BadRange", f"cited line {ref} does not exist")
            return False
        _, rpos, rchain = self.info[ref]
        _, pos, chain = self.info[at]
        if rpos >= pos or rchain != chain[: len(rchain)]:
            self.fail(at, "ScopeViolation", f"line {ref} is not in scope at line {at}")
            return False
        return True

    def range_ok(self, a: int, b: int, at: int):
        for box, ch, start, end in self.box_index:
            if box.assumption.creation == a and box.terminal.creation == b:
                _, pos, chain = self.info[at]
                if end >= pos or ch != chain[: len(ch)]:
                    self.fail(at, "ScopeViolation", f"box {a}-{b} is not in scope at line {at}")
                    return None
                return box
        self.fail(at, "BadRange", f"no box {a}-{b}")
        return None

    def formula_of(self, ref: int):
        return self.info[ref][0].formula

    def open_assumptions(self, creation: int) -> list[fm.Formula]:
        """Assumption formulas of every box enclosing the given line."""
        _, _, chain = self.info[creation]
        out = []
        for box, ch, _, _ in self.box_index:
            if id(box) in chain:
                out.append(box.assumption.formula)
        return out

    def eigen_ok(self, c: str, at_line: int, extra: list[fm.Formula], exclude=None):
        """The eigenvariable must stay out of the premises, the open
        assumptions around the subderivation, and the given formulas."""
        for f in self.premise_formulas:
            if c in fm.constants(f):
                return f"{c} occurs in a premise"
        for f in self.open_assumptions(at_line):
            if exclude is not None and f == exclude:
                continue
            if c in fm.constants(f):
                return f"{c} occurs in an open assumption"
        for f in extra:
            if c in fm.constants(f):
                return f"{c} occurs in {fm.print_unicode(f)}"
        return None

    # per-line ----------------------------------------------------------------

    def check_one(self, ln: ProofLine):
        if ln.is_goal:
            return  # goals are obligations, not errors
        just = ln.justification
        rule = just.rule
        base = "Ax" if rule.startswith("Ax(") else rule
        if not self.system.allows(rule):
            self.fail(ln.creation, "RuleNotInSystem", f"rule {rule} not in {self.system.name}")
        if base in ("Prem", "Ass"):
            if just.refs:
                self.fail(ln.creation, "ShapeMismatch", f"{base} takes no references")
            if base == "Prem" and ln.role != "premise":
                self.fail(ln.creation, "ShapeMismatch", "Prem on a non-premise line")
            if base == "Ass" and ln.role != "assumption":
                self.fail(ln.creation, "ShapeMismatch", "Ass outside a box opening")
            return
        handler = getattr(self, "rule_" + _METHOD[base], None) if base in _METHOD else None
        if handler is None:
            self.fail(ln.creation, "ShapeMismatch", f"unknown rule {rule}")
            return
        handler(ln, just)

    def refs_shape(self, ln, just, shapes) -> bool:
        got = tuple(r[0] for r in just.refs)
        if got != shapes:
            self.fail(
                ln.creation,
                "ShapeMismatch",
                f"{just.rule} expects refs {shapes}, got {got}",
            )
            return False
        for r in just.refs:
            if r[0] == "line":
                if not self.line_ok(r[1], ln.creation):
                    return False
        return True

    # backward rules

    def rule_and_i(self, ln, just):
        if not self.refs_shape(ln, just, ("line", "line")):
            return
        f = ln.formula
        if not isinstance(f, fm.And):
            self.fail(ln.creation, "ShapeMismatch", "∧I on a non-conjunction")
            return
        a, b = self.formula_of(just.refs[0][1]), self.formula_of(just.refs[1][1])
        if a != f.left or b != f.right:
            self.fail(ln.creation, "ShapeMismatch", "∧I conjuncts do not match")

    def rule_or_i(self, ln, just):
        if not self.refs_shape(ln, just, ("line",)):
            return
        f = ln.formula
        if not isinstance(f, fm.Or):
            self.fail(ln.creation, "ShapeMismatch", "∨I on a non-disjunction")
            return
        sub = self.formula_of(just.refs[0][1])
        if sub not in (f.left, f.right):
            self.fail(ln.creation, "ShapeMismatch", "∨I disjunct does not match")

    def rule_imp_i(self, ln, just):
        box = self._single_range(ln, just)
        if box is None:
            return
        f = ln.formula
        if not isinstance(f, fm.Implies):
            self.fail(ln.creation, "ShapeMismatch", "→I on a non-implication")
            return
        if box.assumption.formula != f.left or box.terminal.formula != f.right:
            self.fail(ln.creation, "ShapeMismatch", "→I box does not match")

    def rule_not_i(self, ln, just):
        box = self._single_range(ln, just)
        if box is None:
            return
        f = ln.formula
        if not isinstance(f, fm.Not):
            self.fail(ln.creation, "ShapeMismatch", "¬I on a non-negation")
            return
        if box.assumption.formula != f.body or not isinstance(box.terminal.formula, fm.Falsum):
            self.fail(ln.creation, "ShapeMismatch", "¬I box does not match")

    def _single_range(self, ln, just):
        got = tuple(r[0] for r in just.refs)
        if got != ("range",):
            self.fail(ln.creation, "ShapeMismatch", f"{just.rule} expects one range, got {got}")
            return None
        _, a, b = just.refs[0]
        return self.range_ok(a, b, ln.creation)

    def rule_dneg_e(self, ln, just):
        if not self.refs_shape(ln, just, ("line",)):
            return
        if self.formula_of(just.refs[0][1]) != fm.Not(fm.Not(ln.formula)):
            self.fail(ln.creation, "ShapeMismatch", "¬¬E premise is not the double negation")

    def rule_all_i(self, ln, just):
        if not self.refs_shape(ln, just, ("line",)):
            return
        f = ln.formula
        if not isinstance(f, fm.ForAll):
            self.fail(ln.creation, "ShapeMismatch", "∀I on a non-universal")
            return
        sub = just.refs[0][1]
        inst = self.formula_of(sub)
        m = match_instance(f.body, f.var, inst)
        if m is None:
            self.fail(ln.creation, "ShapeMismatch", "∀I instance does not match")
            return
        if m is True:
            return  # vacuous quantifier, no eigenvariable needed
        if not isinstance(m, fm.Constant):
            self.fail(ln.creation, "EigenvariableViolation", "∀I instance term is not a constant")
            return
        problem = self.eigen_ok(m.name, sub, [f])
        if problem:
            self.fail(ln.creation, "EigenvariableViolation", problem)

    def rule_some_i(self, ln, just):
        if not self.refs_shape(ln, just, ("line",)):
            return
        f = ln.formula
        if not isinstance(f, fm.Exists):
            self.fail(ln.creation, "ShapeMismatch", "∃I on a non-existential")
            return
        inst = self.formula_of(just.refs[0][1])
        if match_instance(f.body, f.var, inst) is None:
            self.fail(ln.creation, "ShapeMismatch", "∃I witness instance does not match")

    def rule_eq_i(self, ln, just):
        if just.refs:
            self.fail(ln.creation, "ShapeMismatch", "=I takes no references")
            return
        f = ln.formula
        if not (isinstance(f, fm.Equals) and f.left == f.right):
            self.fail(ln.creation, "ShapeMismatch", "=I needs t = t")

    def rule_induction(self, ln, just):
        if not self.refs_shape(ln, just, ("line", "line")):
            return
        f = ln.formula
        if not isinstance(f, fm.ForAll):
            self.fail(ln.creation, "ShapeMismatch", "Ind on a non-universal")
            return
        base = self.formula_of(just.refs[0][1])
        step = self.formula_of(just.refs[1][1])
        want_base = fm.substitute(f.body, f.var, fm.ZERO)
        want_step = fm.ForAll(
            f.var,
            fm.Implies(f.body, fm.substitute(f.body, f.var, fm.suc(fm.Variable(f.var)))),
        )
        if base != want_base or step != want_step:
            self.fail(ln.creation, "ShapeMismatch", "Ind base or step does not match")

    def rule_reiterate(self, ln, just):
        if not self.refs_shape(ln, just, ("line",)):
            return
        if self.formula_of(just.refs[0][1]) != ln.formula:
            self.fail(ln.creation, "ShapeMismatch", "Re cites a different formula")

    def rule_axiom(self, ln, just):
        if just.refs:
            self.fail(ln.creation, "ShapeMismatch", "Ax takes no references")
            return
        name = just.rule[3:-1]
        for n, schema in self.system.axioms:
            if n == name:
                if schema != ln.formula:
                    # allow instantiated custom schemas: every variable of the
                    # schema may be matched, but the PA pack has closed axioms
                    self.fail(ln.creation, "ShapeMismatch", f"axiom {name} does not match")
                return
        self.fail(ln.creation, "RuleNotInSystem", f"no axiom {name}")

    # forward rules

    def rule_and_e(self, ln, just):
        if not self.refs_shape(ln, just, ("line",)):
            return
        r = self.formula_of(just.refs[0][1])
        if not isinstance(r, fm.And) or ln.formula not in (r.left, r.right):
            self.fail(ln.creation, "ShapeMismatch", "∧E conjunct does not match")

    def rule_imp_e(self, ln, just):
        if not self.refs_shape(ln, just, ("line", "line")):
            return
        r = self.formula_of(just.refs[0][1])
        a = self.formula_of(just.refs[1][1])
        if not isinstance(r, fm.Implies) or r.left != a or r.right != ln.formula:
            self.fail(ln.creation, "ShapeMismatch", "→E shapes do not match")

    def rule_not_e(self, ln, just):
        if not self.refs_shape(ln, just, ("line", "line")):
            return
        r = self.formula_of(just.refs[0][1])
        a = self.formula_of(just.refs[1][1])
        if not isinstance(ln.formula, fm.Falsum):
            self.fail(ln.creation, "ShapeMismatch", "¬E must conclude ⊥")
            return
        if not isinstance(r, fm.Not) or r.body != a:
            self.fail(
                ln.creation,
                "ShapeMismatch",
                f"¬E: line {just.refs[1][1]} has formula {fm.print_unicode(a)},"
                f" not the complement of {fm.print_unicode(r)}",
            )

    def rule_or_e(self, ln, just):
        got = tuple(r[0] for r in just.refs)
        if got != ("line", "range", "range"):
            self.fail(ln.creation, "ShapeMismatch", f"∨E expects line,range,range; got {got}")
            return
        if not self.line_ok(just.refs[0][1], ln.creation):
            return
        r = self.formula_of(just.refs[0][1])
        box1 = self.range_ok(just.refs[1][1], just.refs[1][2], ln.creation)
        box2 = self.range_ok(just.refs[2][1], just.refs[2][2], ln.creation)
        if box1 is None or box2 is None:
            return
        if not isinstance(r, fm.Or):
            self.fail(ln.creation, "ShapeMismatch", "∨E resource is not a disjunction")
            return
        ok = (
            box1.assumption.formula == r.left
            and box2.assumption.formula == r.right
            and box1.terminal.formula == ln.formula
            and box2.terminal.formula == ln.formula
        )
        if not ok:
            self.fail(ln.creation, "ShapeMismatch", "∨E cases do not match")

    def rule_falsum_e(self, ln, just):
        if not self.refs_shape(ln, just, ("line",)):
            return
        if not isinstance(self.formula_of(just.refs[0][1]), fm.Falsum):
            self.fail(ln.creation, "ShapeMismatch", "⊥E resource is not ⊥")

    def rule_all_e(self, ln, just):
        if not self.refs_shape(ln, just, ("line",)):
            return
        r = self.formula_of(just.refs[0][1])
        if not isinstance(r, fm.ForAll):
            self.fail(ln.creation, "ShapeMismatch", "∀E resource is not universal")
            return
        if match_instance(r.body, r.var, ln.formula) is None:
            self.fail(ln.creation, "ShapeMismatch", "∀E instance does not match")

    def rule_some_e(self, ln, just):
        got = tuple(r[0] for r in just.refs)
        if got != ("line", "range"):
            self.fail(ln.creation, "ShapeMismatch", f"∃E expects line,range; got {got}")
            return
        if not self.line_ok(just.refs[0][1], ln.creation):
            return
        r = self.formula_of(just.refs[0][1])
        box = self.range_ok(just.refs[1][1], just.refs[1][2], ln.creation)
        if box is None:
            return
        if not isinstance(r, fm.Exists):
            self.fail(ln.creation, "ShapeMismatch", "∃E resource is not existential")
            return
        if box.terminal.formula != ln.formula:
            self.fail(ln.creation, "ShapeMismatch", "∃E conclusion does not match")
            return
        m = match_instance(r.body, r.var, box.assumption.formula)
        if m is None:
            self.fail(ln.creation, "ShapeMismatch", "∃E assumption is not an instance")
            return
        if m is True:
            return
        if not isinstance(m, fm.Constant):
            self.fail(ln.creation, "EigenvariableViolation", "∃E instance term is not a constant")
            return
        problem = self.eigen_ok(
            m.name,
            box.assumption.creation,
            [ln.formula, r],
            exclude=box.assumption.formula,
        )
        if problem:
            self.fail(ln.creation, "EigenvariableViolation", problem)

    def rule_eq_e(self, ln, just):
        if not self.refs_shape(ln, just, ("line", "line")):
            return
        r = self.formula_of(just.refs[0][1])
        src = self.formula_of(just.refs[1][1])
        if not isinstance(r, fm.Equals):
            self.fail(ln.creation, "ShapeMismatch", "=E resource is not an equality")
            return
        from .rules import _replace_term

        if _replace_term(src, r.left, r.right) != ln.formula:
            self.fail(ln.creation, "ShapeMismatch", "=E rewrite does not match")


_METHOD = {
    "∧I": "and_i", "∨I": "or_i", "→I": "imp_i", "¬I": "not_i", "¬¬E": "dneg_e",
    "∀I": "all_i", "∃I": "some_i", "=I": "eq_i", "Ind": "induction",
    "Re": "reiterate", "Ax": "axiom",
    "∧E": "and_e", "→E": "imp_e", "¬E": "not_e", "∨E": "or_e", "⊥E": "falsum_e",
    "∀E": "all_e", "∃E": "some_e", "=E": "eq_e",
}


def check_proof(state: ProofState, system=None) -> CheckReport:
    """Verify a (partial or complete) proof; problems become diagnostics,
    never exceptions."""
    system = system or state.system
    diags = _Checker(state, system).run()
    if diags:
        status = "Invalid"
    elif state.goals():
        status = "IncompleteButSound"
    else:
        status = "Complete"
    return CheckReport(status, diags)


def check_line(state: ProofState, creation: int, system=None) -> list[Diagnostic]:
    state.line(creation)  # NoSuchLine when absent
    report = check_proof(state, system)
    return [d for d in report.diagnostics if d.creation == creation]
