"""Command line entry points: check, export, prove, serve.

Exit codes are a CI contract: 0 ok/Complete, 1 Invalid, 2 incomplete but
sound, 3 usage or IO errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import export as ex
from . import persist
from .checker import check_proof
from .errors import EngineError
from .rules import SystemProfile
from .scripts import run_script

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INCOMPLETE = 2
EXIT_USAGE = 3

_STATUS_CODES = {
    "Complete": EXIT_OK,
    "Invalid": EXIT_INVALID,
    "IncompleteButSound": EXIT_INCOMPLETE,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _default_system() -> str | None:
    return os.environ.get("NDP_SYSTEM")


def cmd_check(args) -> int:
    try:
        state, _ = persist.load(args.path)
    except EngineError as exc:
        print(f"error: {exc.code}: {exc.message}", file=sys.stderr)
        return EXIT_USAGE
    system = SystemProfile.by_name(args.system) if args.system else state.system
    report = check_proof(state, system)
    if report.diagnostics:
        print(report.to_text())
    print(report.status)
    return _STATUS_CODES[report.status]


def cmd_export(args) -> int:
    if args.format not in ("latex", "text", "frames"):
        print(f"error: unknown format {args.format!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        state, _ = persist.load(args.path)
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        stem = Path(args.path).stem
        if args.format == "latex":
            (out / f"{stem}.tex").write_text(ex.export_latex(state), encoding="utf-8")
        elif args.format == "text":
            (out / f"{stem}.txt").write_text(ex.export_unicode(state), encoding="utf-8")
        else:
            doc = persist.document_from_state(state)
            frames = ex.export_frames(doc)
            for i, frame in enumerate(frames):
                (out / f"frame-{i:03d}.txt").write_text(
                    ex.unicode_rows(frame), encoding="utf-8"
                )
    except EngineError as exc:
        print(f"error: {exc.code}: {exc.message}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_prove(args) -> int:
    try:
        script = json.loads(Path(args.script).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if "system" not in script and _default_system():
        script["system"] = _default_system()
    try:
        state = run_script(script)
    except EngineError as exc:
        print(f"error: {exc.code}: {exc.message}", file=sys.stderr)
        return EXIT_INVALID
    print(ex.export_unicode(state), end="")
    return EXIT_OK if state.complete else EXIT_INCOMPLETE


def _ui_dir() -> str | None:
    configured = os.environ.get("NDP_UI_DIR")
    if configured:
        return configured
    candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    return str(candidate) if candidate.is_dir() else None


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    try:
        uvicorn.run(
            create_app(static_dir=_ui_dir()),
            host=args.host,
            port=args.port,
            log_level="warning",
        )
    except (OSError, SystemExit) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="ndplan", description="natural deduction planning tools")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify a saved proof")
    p.add_argument("path")
    p.add_argument("--system", choices=["NJ", "NK", "PA"], default=_default_system())
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("export", help="export a saved proof")
    p.add_argument("path")
    p.add_argument("--format", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("prove", help="run a proof script headlessly")
    p.add_argument("script")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("serve", help="run the session API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
