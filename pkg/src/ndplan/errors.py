"""Engine error hierarchy.

Every error carries a stable machine code (its class name, unless
overridden) so the CLI and the session API can surface it unchanged.
"""


class EngineError(Exception):
    """Base for all errors raised by the proof engine."""

    code = "EngineError"

    def __init__(self, message: str, at: int | None = None):
        super().__init__(message)
        self.message = message
        self.at = at  # creation number the error refers to, when meaningful


class FormulaSyntaxError(EngineError):
    """Malformed formula text."""

    code = "SyntaxError"

    def __init__(self, message: str, position: int, expected: str | None = None):
        super().__init__(message, at=position)
        self.position = position
        self.expected = expected


class ArityError(EngineError):
    code = "ArityError"


class NoSuchLine(EngineError):
    code = "NoSuchLine"


class NotAGoal(EngineError):
    code = "NotAGoal"


class NotJustified(EngineError):
    code = "NotJustified"


class NoGoalSelected(EngineError):
    code = "NoGoalSelected"


class OutOfScope(EngineError):
    code = "OutOfScope"


class NothingToUndo(EngineError):
    code = "NothingToUndo"


class NothingToRedo(EngineError):
    code = "NothingToRedo"


class RuleDisabled(EngineError):
    code = "RuleDisabled"


class ShapeMismatch(EngineError):
    code = "ShapeMismatch"


class MissingArgument(EngineError):
    code = "MissingArgument"

    def __init__(self, what: str, at: int | None = None):
        super().__init__(f"missing argument: {what}", at=at)
        self.what = what


class EigenvariableViolation(EngineError):
    code = "EigenvariableViolation"


class NoSuchAxiom(EngineError):
    code = "NoSuchAxiom"


class IoError(EngineError):
    code = "IoError"


class DocumentParseError(EngineError):
    """Save file does not parse or has an unsupported version."""

    code = "ParseError"


class ReplayError(EngineError):
    """An event in a saved history no longer applies."""

    code = "ReplayError"

    def __init__(self, event_index: int, diagnostic: str):
        super().__init__(f"event {event_index}: {diagnostic}")
        self.event_index = event_index
        self.diagnostic = diagnostic
