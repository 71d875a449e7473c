"""Save/load of proof documents.

Documents are JSON with a fixed key order, containing the full event log
and the undo cursor, so a loaded proof replays to the exact saved state
and keeps its redo tail.  Editable (.ndp) and demonstration (.ndu) files
have byte-identical contents; only the extension differs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import formula as fm
from .errors import DocumentParseError, EngineError, IoError, ReplayError
from .proof import ProofState, RuleApplication
from .rules import SystemProfile, perform

FORMAT_VERSION = 1

EDITABLE, DEMO = "editable", "demo"

_EXTENSIONS = {EDITABLE: ".ndp", DEMO: ".ndu"}


@dataclass
class ProofDocument:
    format_version: int
    system_name: str
    palette: list[str]
    premises: list[str]  # prefix format
    conclusion: str
    events: list[RuleApplication]
    undo_cursor: int
    axioms: list[tuple[str, str]] = None  # custom axiom schemas, prefix format

    def to_json(self) -> str:
        settings = {"systemName": self.system_name, "paletteList": sorted(self.palette)}
        if self.axioms:
            settings["axioms"] = [{"name": n, "formula": f} for n, f in self.axioms]
        doc = {
            "formatVersion": self.format_version,
            "settings": settings,
            "premises": list(self.premises),
            "conclusion": self.conclusion,
            "events": [_event_to_dict(e) for e in self.events],
            "undoCursor": self.undo_cursor,
        }
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _event_to_dict(e: RuleApplication) -> dict:
    out = {"rule": e.rule, "goal": e.goal}
    if e.resource is not None:
        out["resource"] = e.resource
    if e.side is not None:
        out["side"] = e.side
    if e.witness is not None:
        out["witness"] = fm.print_term_prefix(e.witness)
    if e.axiom_name is not None:
        out["axiomName"] = e.axiom_name
    if e.ref_line is not None:
        out["refLine"] = e.ref_line
    if e.bindings:
        out["bindings"] = {
            k: fm.print_term_prefix(v) for k, v in sorted(e.bindings.items())
        }
    return out


def _parse_saved_term(text: str) -> fm.Term:
    # terms are stored in the prefix format; reuse the formula tokenizer
    from .formula import _ArityTable, _PREFIX_TOKEN, _Tokens, _parse_prefix_term

    tk = _Tokens(text, _PREFIX_TOKEN)
    return _parse_prefix_term(tk, (), _ArityTable())


def _event_from_dict(d: dict) -> RuleApplication:
    witness = d.get("witness")
    bindings = d.get("bindings")
    return RuleApplication(
        rule=d["rule"],
        goal=d["goal"],
        resource=d.get("resource"),
        side=d.get("side"),
        witness=_parse_saved_term(witness) if witness is not None else None,
        axiom_name=d.get("axiomName"),
        ref_line=d.get("refLine"),
        bindings={k: _parse_saved_term(v) for k, v in bindings.items()}
        if bindings
        else None,
    )


def document_from_state(state: ProofState) -> ProofDocument:
    axioms = []
    if state.system.name == "Custom":
        axioms = [(n, fm.print_prefix(f)) for n, f in state.system.axioms]
    return ProofDocument(
        format_version=FORMAT_VERSION,
        system_name=state.system.name,
        palette=sorted(state.palette),
        premises=[fm.print_prefix(p) for p in state.premises],
        conclusion=fm.print_prefix(state.conclusion),
        events=list(state.events),
        undo_cursor=state.cursor,
        axioms=axioms,
    )


def save(state: ProofState, mode: str, path) -> Path:
    """Write the document; mode only picks the default extension.  Returns
    the path actually written."""
    if mode not in _EXTENSIONS:
        raise IoError(f"unknown save mode {mode!r}")
    p = Path(path)
    if p.suffix == "":
        p = p.with_suffix(_EXTENSIONS[mode])
    try:
        p.write_text(document_from_state(state).to_json(), encoding="utf-8")
    except OSError as exc:
        raise IoError(str(exc)) from exc
    return p


def parse_document(text: str) -> ProofDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentParseError(f"not valid JSON: {exc}") from exc
    try:
        if raw["formatVersion"] != FORMAT_VERSION:
            raise DocumentParseError(
                f"unsupported format version {raw['formatVersion']}"
            )
        settings = raw["settings"]
        axioms = [
            (a["name"], a["formula"]) for a in settings.get("axioms", [])
        ]
        return ProofDocument(
            format_version=raw["formatVersion"],
            system_name=settings["systemName"],
            palette=list(settings["paletteList"]),
            premises=list(raw["premises"]),
            conclusion=raw["conclusion"],
            events=[_event_from_dict(e) for e in raw["events"]],
            undo_cursor=raw["undoCursor"],
            axioms=axioms,
        )
    except (KeyError, TypeError) as exc:
        raise DocumentParseError(f"malformed document: {exc}") from exc


def _system_for(doc: ProofDocument) -> SystemProfile:
    if doc.system_name == "Custom":
        return SystemProfile.custom(
            doc.palette, [(n, fm.parse_prefix(f)) for n, f in (doc.axioms or [])]
        )
    return SystemProfile.by_name(doc.system_name)


def replay(doc: ProofDocument, upto_event: int) -> ProofState:
    """State after the first ``upto_event`` events, ignoring the palette."""
    if not 0 <= upto_event <= len(doc.events):
        raise ReplayError(upto_event, "event index out of range")
    system = _system_for(doc)
    state = ProofState(
        [fm.parse_prefix(p) for p in doc.premises],
        fm.parse_prefix(doc.conclusion),
        system,
    )
    state.palette = set(doc.palette)
    for i, app in enumerate(doc.events[:upto_event]):
        try:
            perform(state, app)
        except EngineError as exc:
            raise ReplayError(i, f"{exc.code}: {exc.message}") from exc
    return state


def state_from_document(doc: ProofDocument) -> ProofState:
    """Visible state: replay up to the undo cursor, keep the redo tail."""
    state = replay(doc, doc.undo_cursor)
    state.events = list(doc.events)
    state.cursor = doc.undo_cursor
    return state


def load(path) -> tuple[ProofState, str]:
    """Load a document; the mode comes from the file extension."""
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(str(exc)) from exc
    doc = parse_document(text)
    mode = DEMO if p.suffix == ".ndu" else EDITABLE
    return state_from_document(doc), mode
