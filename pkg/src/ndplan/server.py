"""HTTP+JSON session service.

Sessions are in-memory, keyed by id, evicted after an hour of idleness.
Every command returns the full session view; engine errors map 1:1 to
422 responses carrying the engine error code.
"""

from __future__ import annotations

import threading
import time
import uuid
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse, Response

from . import formula as fm
from . import persist, proof, rules
from .checker import check_proof
from .errors import EngineError
from .export import export_frames, export_latex, export_unicode
from .proof import ProofState, RuleApplication
from .rules import SystemProfile

IDLE_SECONDS = 60 * 60


class Session:
    def __init__(self, state: ProofState):
        self.id = uuid.uuid4().hex[:12]
        self.state = state
        self.lock = threading.Lock()
        self.touched = time.monotonic()


def session_view(session: Session) -> dict:
    state = session.state
    rows = []
    for row in proof.render(state):
        ln = state.line(row.creation)
        rows.append(
            {
                "creation": row.creation,
                "depth": row.depth,
                "formulaUnicode": row.formula_unicode,
                "formulaPrefix": fm.print_prefix(ln.formula),
                "justification": row.justification,
                "status": ln.status,
                "flags": {
                    "currentGoal": row.current_goal,
                    "currentResource": row.current_resource,
                    "outOfScope": row.out_of_scope,
                },
                "boxOpens": row.box_opens,
                "boxCloses": row.box_closes,
            }
        )
    applicable = []
    for item in rules.list_applicable(state):
        entry = {"rule": item.rule, "needs": list(item.needs)}
        if item.side is not None:
            entry["side"] = item.side
        if item.axiom_name is not None:
            entry["axiomName"] = item.axiom_name
        applicable.append(entry)
    return {
        "sessionId": session.id,
        "system": state.system.name,
        "palette": sorted(state.palette),
        "complete": state.complete,
        "rows": rows,
        "applicable": applicable,
    }


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="ndplan session API")
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()

    def evict_idle():
        cutoff = time.monotonic() - IDLE_SECONDS
        with registry_lock:
            for sid in [s for s, sess in sessions.items() if sess.touched < cutoff]:
                del sessions[sid]

    def get_session(sid: str) -> Session | None:
        evict_idle()
        with registry_lock:
            return sessions.get(sid)

    @app.exception_handler(EngineError)
    async def engine_error(_, exc: EngineError):
        body = {"code": exc.code, "message": exc.message}
        if exc.at is not None:
            body["at"] = exc.at
        status = 400 if exc.code in ("SyntaxError", "ArityError") else 422
        return JSONResponse(status_code=status, content=body)

    @app.post("/sessions", status_code=201)
    async def create_session(request: Request):
        payload = await request.json()
        system = SystemProfile.by_name(payload.get("system", "NJ"))
        premises = [fm.parse_formula(p) for p in payload.get("premises", [])]
        conclusion = fm.parse_formula(payload["conclusion"])
        session = Session(proof.new_proof(premises, conclusion, system))
        with registry_lock:
            sessions[session.id] = session
        return session_view(session)

    def with_session(sid: str, fn):
        session = get_session(sid)
        if session is None:
            return JSONResponse(status_code=404, content={"code": "NoSuchSession", "message": sid})
        with session.lock:
            session.touched = time.monotonic()
            result = fn(session)
        return result

    @app.post("/sessions/{sid}/select")
    async def select(sid: str, request: Request):
        payload = await request.json()

        def step(session):
            if "goal" in payload:
                session.state = proof.select_goal(session.state, payload["goal"])
            if "resource" in payload:
                session.state = proof.select_resource(session.state, payload["resource"])
            return session_view(session)

        return with_session(sid, step)

    @app.post("/sessions/{sid}/apply")
    async def apply(sid: str, request: Request):
        payload = await request.json()

        def step(session):
            state = session.state
            from .errors import NoGoalSelected

            if state.goal is None:
                raise NoGoalSelected("select a goal before applying a rule")
            args = payload.get("args", {})
            witness = args.get("witness")
            bindings = args.get("bindings")
            app_record = RuleApplication(
                rule=payload["rule"],
                goal=state.goal,
                resource=state.resource,
                side=args.get("side"),
                witness=fm.parse_term(witness) if witness else None,
                axiom_name=args.get("axiomName"),
                ref_line=args.get("refLine"),
                bindings={k: fm.parse_term(v) for k, v in bindings.items()}
                if bindings
                else None,
            )
            session.state = rules.apply_rule(state, app_record)
            return session_view(session)

        return with_session(sid, step)

    @app.post("/sessions/{sid}/undo")
    async def undo(sid: str):
        def step(session):
            session.state = proof.undo(session.state)
            return session_view(session)

        return with_session(sid, step)

    @app.post("/sessions/{sid}/redo")
    async def redo(sid: str):
        def step(session):
            session.state = proof.redo(session.state)
            return session_view(session)

        return with_session(sid, step)

    @app.post("/sessions/{sid}/magic")
    async def magic(sid: str):
        def step(session):
            session.state = rules.magic(session.state)
            return session_view(session)

        return with_session(sid, step)

    @app.post("/sessions/{sid}/palette")
    async def palette(sid: str, request: Request):
        payload = await request.json()

        def step(session):
            session.state = rules.toggle_palette(
                session.state, payload["rule"], payload["on"]
            )
            return session_view(session)

        return with_session(sid, step)

    @app.get("/sessions/{sid}/check")
    async def check(sid: str):
        def step(session):
            report = check_proof(session.state)
            return {
                "status": report.status,
                "diagnostics": [
                    {"creation": d.creation, "code": d.code, "message": d.message}
                    for d in report.diagnostics
                ],
            }

        return with_session(sid, step)

    @app.get("/sessions/{sid}/export")
    async def export(sid: str, format: str = "text"):
        def step(session):
            state = session.state
            if format == "latex":
                return PlainTextResponse(export_latex(state))
            if format == "text":
                return PlainTextResponse(export_unicode(state))
            if format == "ndp":
                doc = persist.document_from_state(state)
                return Response(doc.to_json(), media_type="application/json")
            if format == "frames":
                doc = persist.document_from_state(state)
                frames = [
                    [
                        {
                            "creation": r.creation,
                            "depth": r.depth,
                            "formulaUnicode": r.formula_unicode,
                            "justification": r.justification,
                            "boxOpens": r.box_opens,
                            "boxCloses": r.box_closes,
                        }
                        for r in frame
                    ]
                    for frame in export_frames(doc)
                ]
                return JSONResponse({"frames": frames})
            return JSONResponse(
                status_code=400,
                content={"code": "BadFormat", "message": f"unknown format {format!r}"},
            )

        return with_session(sid, step)

    if static_dir and Path(static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
