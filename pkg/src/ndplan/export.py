"""Exporters: LaTeX, monospaced unicode text, and frame sequences for
step-by-step demonstrations.

All of them consume the shared rendering from :func:`ndplan.proof.render`,
so row order, creation numbers and justification strings are identical
across formats.
"""

from __future__ import annotations

from . import formula as fm
from .persist import ProofDocument, replay
from .proof import ProofState, RenderRow, render

_JUST_GAP = 5  # columns between the widest row and the justification column


def _justification_latex(text: str) -> str:
    if not text:
        return ""
    head, _, rule = text.rpartition(",")
    if head:
        return f"{head},\\rulename{{{rule}}}"
    return f"\\rulename{{{rule}}}"


def export_latex(state: ProofState) -> str:
    """One ``\\ndline`` per row inside an ``ndproof`` environment, using
    the prefix macros for formulas."""
    lines = ["\\begin{ndproof}"]
    for row in render(state):
        if row.box_opens:
            kind = "open"
        elif row.box_closes:
            kind = "close"
        else:
            kind = "none"
        ln = state.line(row.creation)
        lines.append(
            "\\ndline{%d}{%s}{%d}{%s}{%s}"
            % (
                row.depth,
                kind,
                row.creation,
                fm.print_latex(ln.formula),
                _justification_latex(row.justification),
            )
        )
    lines.append("\\end{ndproof}")
    return "\n".join(lines) + "\n"


def unicode_rows(rows: list[RenderRow]) -> str:
    """Monospaced text: '│' per open scope, '┌─' on assumptions, and a
    '├────' rule closing each box."""
    contents: list[tuple[str, str]] = []  # (left part, justification)
    for row in rows:
        if row.box_opens:
            prefix = "│ " * (row.depth - 1) + "┌─"
        else:
            prefix = "│ " * row.depth
        contents.append((f"{prefix}{row.creation}. {row.formula_unicode}", row.justification))
        for k in range(row.box_closes):
            depth = row.depth - 1 - k
            contents.append(("│ " * depth + "├────", ""))
    width = max(len(c) for c, _ in contents) + _JUST_GAP
    out = []
    for content, just in contents:
        out.append(content.ljust(width) + just if just else content)
    return "\n".join(out) + "\n"


def export_unicode(state: ProofState) -> str:
    return unicode_rows(render(state))


def export_frames(doc: ProofDocument) -> list[list[RenderRow]]:
    """One rendered frame per replay prefix, from the empty history to the
    full event log."""
    return [render(replay(doc, i)) for i in range(len(doc.events) + 1)]
