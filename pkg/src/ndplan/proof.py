"""Proof state: lines, boxes, creation-order numbering, selection,
event history with undo/redo, and the shared rendering used by every
display surface.

A proof is a vertical layout of lines and nested boxes.  Lines carry the
number of the step that *created* them, so the numbering records the
construction order rather than the top-to-bottom reading order.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from . import formula as fm
from .errors import (
    NoGoalSelected,
    NoSuchLine,
    NotAGoal,
    NothingToRedo,
    NothingToUndo,
    NotJustified,
    OutOfScope,
)

# justification reference: a single line or an assumption-conclusion range
Ref = tuple  # ("line", n) | ("range", a, b)


def line_ref(n: int) -> Ref:
    return ("line", n)


def range_ref(a: int, b: int) -> Ref:
    return ("range", a, b)


@dataclass
class Justification:
    rule: str
    refs: tuple[Ref, ...] = ()

    def text(self) -> str:
        parts = []
        for r in self.refs:
            if r[0] == "line":
                parts.append(str(r[1]))
            else:
                parts.append(f"{r[1]}-{r[2]}")
        parts.append(self.rule)
        return ",".join(parts)


@dataclass
class ProofLine:
    creation: int
    formula: fm.Formula
    role: str  # "premise" | "assumption" | "derived"
    justification: Optional[Justification] = None

    @property
    def is_goal(self) -> bool:
        return self.justification is None

    @property
    def status(self) -> str:
        return "Goal" if self.is_goal else "Justified"


@dataclass
class Box:
    body: list[Union["ProofLine", "Box"]] = field(default_factory=list)

    @property
    def assumption(self) -> ProofLine:
        first = self.body[0]
        assert isinstance(first, ProofLine)
        return first

    @property
    def terminal(self) -> ProofLine:
        last = self.body[-1]
        assert isinstance(last, ProofLine)
        return last


Element = Union[ProofLine, Box]


@dataclass
class RuleApplication:
    """One recorded move.  Self-contained: carries the goal (and resource)
    it acted on, so histories replay without separate selection events."""

    rule: str
    goal: int
    resource: Optional[int] = None
    side: Optional[str] = None  # "left" | "right"
    witness: Optional[fm.Term] = None
    axiom_name: Optional[str] = None
    ref_line: Optional[int] = None  # second cited line, for =E
    bindings: Optional[dict] = None  # axiom schema bindings, name -> Term


@dataclass
class RenderRow:
    creation: int
    depth: int
    formula_unicode: str
    justification: str  # "" for goals
    is_goal: bool
    current_goal: bool
    current_resource: bool
    out_of_scope: bool
    box_opens: int
    box_closes: int


class ProofState:
    """A single proof under construction.

    All public operations are exposed as module-level functions that
    return new states; internals mutate ``self`` and are only used on
    private copies.
    """

    def __init__(self, premises, conclusion, system):
        self.premises = tuple(premises)
        self.conclusion = conclusion
        self.system = system
        self.palette: set[str] = set(system.enabled_rules)
        self.layout: list[Element] = []
        self.next_creation = 1
        self.goal: Optional[int] = None
        self.resource: Optional[int] = None
        self.events: list[RuleApplication] = []
        self.cursor = 0  # number of events currently applied
        for p in self.premises:
            self.layout.append(
                ProofLine(self.next_creation, p, "premise", Justification("Prem"))
            )
            self.next_creation += 1
        self.layout.append(ProofLine(self.next_creation, conclusion, "derived"))
        self.next_creation += 1

    # -- traversal ---------------------------------------------------------

    def walk(self) -> Iterator[tuple[ProofLine, int, tuple[int, ...], int]]:
        """Yield (line, position, enclosing-box chain, depth) in layout order.

        The box chain is a tuple of ids of the boxes containing the line,
        outermost first.
        """
        pos = 0

        def rec(elems, chain, depth):
            nonlocal pos
            for e in elems:
                if isinstance(e, ProofLine):
                    yield e, pos, chain, depth
                    pos += 1
                else:
                    yield from rec(e.body, (*chain, id(e)), depth + 1)

        yield from rec(self.layout, (), 0)

    def boxes(self) -> Iterator[tuple[Box, tuple[int, ...], int, int]]:
        """Yield (box, enclosing chain, first position, last position)."""
        pos = 0

        def rec(elems, chain):
            nonlocal pos
            for e in elems:
                if isinstance(e, ProofLine):
                    pos += 1
                else:
                    start = pos
                    yield from rec(e.body, (*chain, id(e)))
                    yield e, chain, start, pos - 1

        yield from rec(self.layout, ())

    def lines(self) -> dict[int, ProofLine]:
        return {ln.creation: ln for ln, _, _, _ in self.walk()}

    def line(self, creation: int) -> ProofLine:
        for ln, _, _, _ in self.walk():
            if ln.creation == creation:
                return ln
        raise NoSuchLine(f"no line {creation}", at=creation)

    def line_info(self, creation: int) -> tuple[ProofLine, int, tuple[int, ...], int]:
        for entry in self.walk():
            if entry[0].creation == creation:
                return entry
        raise NoSuchLine(f"no line {creation}", at=creation)

    def goals(self) -> list[int]:
        return sorted(ln.creation for ln, _, _, _ in self.walk() if ln.is_goal)

    @property
    def complete(self) -> bool:
        return not self.goals()

    def used_names(self) -> set[str]:
        names: set[str] = set()
        for ln, _, _, _ in self.walk():
            names |= fm.all_names(ln.formula)
        return names

    # -- scope -------------------------------------------------------------

    def lines_in_scope(self, creation: int) -> set[int]:
        """Creations of lines above the given line whose boxes are all
        still open at its position."""
        _, pos, chain, _ = self.line_info(creation)
        out = set()
        for ln, p, ch, _ in self.walk():
            if p < pos and ch == chain[: len(ch)]:
                out.add(ln.creation)
        return out

    def box_in_scope(self, box_start: int, box_end: int, at: int) -> bool:
        """True when the box whose assumption/terminal lines have the given
        creations sits above line ``at`` with all enclosing boxes open."""
        _, pos, chain, _ = self.line_info(at)
        for box, ch, start, end in self.boxes():
            if (
                box.assumption.creation == box_start
                and box.terminal.creation == box_end
            ):
                return end < pos and ch == chain[: len(ch)]
        return False

    def find_box(self, assumption: int, terminal: int) -> Optional[Box]:
        for box, _, _, _ in self.boxes():
            if box.assumption.creation == assumption and box.terminal.creation == terminal:
                return box
        return None

    # -- mutation helpers (used by the rule engine on private copies) -------

    def containing_body(self, creation: int) -> tuple[list[Element], int]:
        def rec(elems):
            for i, e in enumerate(elems):
                if isinstance(e, ProofLine):
                    if e.creation == creation:
                        return elems, i
                else:
                    found = rec(e.body)
                    if found is not None:
                        return found
            return None

        found = rec(self.layout)
        if found is None:
            raise NoSuchLine(f"no line {creation}", at=creation)
        return found

    def insert_above(self, creation: int, elements: list[Element]):
        body, i = self.containing_body(creation)
        body[i:i] = elements

    def new_line(self, formula, role="derived", justification=None) -> ProofLine:
        ln = ProofLine(self.next_creation, formula, role, justification)
        self.next_creation += 1
        return ln

    # -- equality ----------------------------------------------------------

    def core_snapshot(self):
        """Structural content used for state equality.  Excludes the live
        selection (a transient view concern) and the event log (undo keeps
        a redo tail that the rebuilt layout does not reflect)."""

        def elem(e):
            if isinstance(e, ProofLine):
                just = None
                if e.justification is not None:
                    just = (e.justification.rule, e.justification.refs)
                return ("line", e.creation, e.formula, e.role, just)
            return ("box", tuple(elem(x) for x in e.body))

        return (
            tuple(elem(e) for e in self.layout),
            self.next_creation,
            self.system.name,
            frozenset(self.system.enabled_rules),
            frozenset(self.palette),
        )

    def __eq__(self, other):
        if not isinstance(other, ProofState):
            return NotImplemented
        return self.core_snapshot() == other.core_snapshot()

    def copy(self) -> "ProofState":
        return copy.deepcopy(self)


# ---------------------------------------------------------------------------
# operations


def new_proof(premises, conclusion, system=None) -> ProofState:
    """Premises as lines 1..k justified Prem, conclusion as the initial
    goal line k+1."""
    if system is None:
        from .rules import SystemProfile

        system = SystemProfile.nj()
    return ProofState(premises, conclusion, system)


def select_goal(state: ProofState, creation: int) -> ProofState:
    ns = state.copy()
    ln = ns.line(creation)
    if not ln.is_goal:
        raise NotAGoal(f"line {creation} is already justified", at=creation)
    ns.goal = creation
    if ns.resource is not None and ns.resource not in ns.lines_in_scope(creation):
        ns.resource = None
    return ns


def select_resource(state: ProofState, creation: int) -> ProofState:
    if state.goal is None:
        raise NoGoalSelected("select a goal before a resource")
    ns = state.copy()
    ln = ns.line(creation)
    if ln.is_goal:
        raise NotJustified(f"line {creation} is not justified", at=creation)
    if creation not in ns.lines_in_scope(ns.goal):
        raise OutOfScope(f"line {creation} is out of scope of the goal", at=creation)
    ns.resource = creation
    return ns


def lines_in_scope(state: ProofState, creation: int) -> set[int]:
    return state.lines_in_scope(creation)


def undo(state: ProofState) -> ProofState:
    if state.cursor == 0:
        raise NothingToUndo("nothing to undo")
    return _rebuild(state, state.cursor - 1)


def redo(state: ProofState) -> ProofState:
    if state.cursor >= len(state.events):
        raise NothingToRedo("nothing to redo")
    return _rebuild(state, state.cursor + 1)


def _rebuild(state: ProofState, cursor: int) -> ProofState:
    from .rules import perform

    ns = ProofState(state.premises, state.conclusion, state.system)
    ns.palette = set(state.palette)
    for app in state.events[:cursor]:
        perform(ns, app)
    ns.events = list(state.events)
    ns.cursor = cursor
    ns.goal = None
    ns.resource = None
    return ns


def render(state: ProofState) -> list[RenderRow]:
    """Vertical layout as a list of rows; the single source of truth for
    the UI and both exporters."""
    in_scope: set[int] = set()
    if state.goal is not None:
        in_scope = state.lines_in_scope(state.goal) | {state.goal}

    rows: list[RenderRow] = []

    def rec(elems, depth):
        for i, e in enumerate(elems):
            if isinstance(e, ProofLine):
                rows.append(
                    RenderRow(
                        creation=e.creation,
                        depth=depth,
                        formula_unicode=fm.print_unicode(e.formula),
                        justification="" if e.is_goal else e.justification.text(),
                        is_goal=e.is_goal,
                        current_goal=e.creation == state.goal,
                        current_resource=e.creation == state.resource,
                        out_of_scope=bool(in_scope) and e.creation not in in_scope,
                        box_opens=1 if (depth > 0 and i == 0 and e.role == "assumption") else 0,
                        box_closes=0,
                    )
                )
            else:
                rec(e.body, depth + 1)
                rows[-1].box_closes += 1

    rec(state.layout, 0)
    return rows
