"""Goal-directed natural deduction planning: formulas, a creation-order
proof state machine, rule engine, independent checker, persistence and
exporters."""

from .formula import (
    And,
    Atom,
    Constant,
    Equals,
    Exists,
    FALSUM,
    Falsum,
    ForAll,
    Formula,
    Function,
    Implies,
    Not,
    Or,
    Term,
    Variable,
    free_vars,
    fresh_constant,
    parse_formula,
    parse_infix,
    parse_prefix,
    parse_term,
    print_latex,
    print_prefix,
    print_unicode,
    substitute,
)
from .proof import (
    Box,
    Justification,
    ProofLine,
    ProofState,
    RuleApplication,
    lines_in_scope,
    new_proof,
    redo,
    render,
    select_goal,
    select_resource,
    undo,
)
from .rules import (
    Applicable,
    SystemProfile,
    apply_rule,
    instantiate_axiom,
    list_applicable,
    magic,
    magic_verbose,
    toggle_palette,
)
from .checker import CheckReport, Diagnostic, check_line, check_proof
from .persist import (
    ProofDocument,
    document_from_state,
    load,
    replay,
    save,
    state_from_document,
)
from .export import export_frames, export_latex, export_unicode, unicode_rows
from .scripts import run_script, run_step

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
