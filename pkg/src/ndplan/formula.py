"""First-order formulas and terms.

Two concrete syntaxes are supported:

* a prefix macro format (``\\dis{\\neg{p}}{\\neg{q}}``), the canonical
  on-disk encoding, and
* a human infix format (``~p | ~q``) with precedence ¬ > ∧ > ∨ > →,
  right-associative →, and maximally right-binding quantifiers.

Printers exist for unicode display, the prefix format, and LaTeX (which
reuses the prefix macros).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ArityError, FormulaSyntaxError

# ---------------------------------------------------------------------------
# syntax trees

NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9']*")

# free identifiers starting with one of these letters parse as variables;
# everything else (and the special "0") parses as a constant
VARIABLE_INITIALS = "uvwxyz"


@dataclass(frozen=True)
class Term:
    pass


@dataclass(frozen=True)
class Variable(Term):
    name: str


@dataclass(frozen=True)
class Constant(Term):
    name: str


@dataclass(frozen=True)
class Function(Term):
    symbol: str
    args: tuple[Term, ...]


@dataclass(frozen=True)
class Formula:
    pass


@dataclass(frozen=True)
class Atom(Formula):
    predicate: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Falsum(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class ForAll(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Equals(Formula):
    left: Term
    right: Term


FALSUM = Falsum()

ZERO = Constant("0")


def suc(t: Term) -> Term:
    return Function("s", (t,))


def plus(a: Term, b: Term) -> Term:
    return Function("+", (a, b))


def times(a: Term, b: Term) -> Term:
    return Function("·", (a, b))


# ---------------------------------------------------------------------------
# variable bookkeeping


def term_vars(t: Term) -> set[str]:
    if isinstance(t, Variable):
        return {t.name}
    if isinstance(t, Function):
        out: set[str] = set()
        for a in t.args:
            out |= term_vars(a)
        return out
    return set()


def free_vars(f: Formula) -> set[str]:
    """Free variable names of a formula."""
    if isinstance(f, Atom):
        out: set[str] = set()
        for a in f.args:
            out |= term_vars(a)
        return out
    if isinstance(f, Equals):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, (And, Or, Implies)):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, (ForAll, Exists)):
        return free_vars(f.body) - {f.var}
    return set()


def constants(obj: Formula | Term) -> set[str]:
    """All constant names occurring in a formula or term."""
    if isinstance(obj, Constant):
        return {obj.name}
    if isinstance(obj, Variable):
        return set()
    if isinstance(obj, Function):
        out: set[str] = set()
        for a in obj.args:
            out |= constants(a)
        return out
    if isinstance(obj, Atom):
        out = set()
        for a in obj.args:
            out |= constants(a)
        return out
    if isinstance(obj, Equals):
        return constants(obj.left) | constants(obj.right)
    if isinstance(obj, Not):
        return constants(obj.body)
    if isinstance(obj, (And, Or, Implies)):
        return constants(obj.left) | constants(obj.right)
    if isinstance(obj, (ForAll, Exists)):
        return constants(obj.body)
    return set()


def all_names(obj: Formula | Term) -> set[str]:
    """Every identifier in a formula: variables, constants, functions,
    predicates and binders.  Used for freshness."""
    if isinstance(obj, (Variable, Constant)):
        return {obj.name}
    if isinstance(obj, Function):
        out = {obj.symbol}
        for a in obj.args:
            out |= all_names(a)
        return out
    if isinstance(obj, Atom):
        out = {obj.predicate}
        for a in obj.args:
            out |= all_names(a)
        return out
    if isinstance(obj, Equals):
        return all_names(obj.left) | all_names(obj.right)
    if isinstance(obj, Not):
        return all_names(obj.body)
    if isinstance(obj, (And, Or, Implies)):
        return all_names(obj.left) | all_names(obj.right)
    if isinstance(obj, (ForAll, Exists)):
        return {obj.var} | all_names(obj.body)
    return set()


def _subst_term(t: Term, v: str, repl: Term) -> Term:
    if isinstance(t, Variable):
        return repl if t.name == v else t
    if isinstance(t, Function):
        return Function(t.symbol, tuple(_subst_term(a, v, repl) for a in t.args))
    return t


def _primed_fresh(base: str, avoid: set[str]) -> str:
    # smallest primed variant: y, y', y'', ...
    cand = base + "'"
    while cand in avoid:
        cand += "'"
    return cand


def substitute(f: Formula, v: str, t: Term) -> Formula:
    """Capture-avoiding substitution of ``t`` for free occurrences of ``v``.

    A binder that would capture a variable of ``t`` is renamed to the
    smallest unused primed variant of its name.
    """
    if isinstance(f, Atom):
        return Atom(f.predicate, tuple(_subst_term(a, v, t) for a in f.args))
    if isinstance(f, Equals):
        return Equals(_subst_term(f.left, v, t), _subst_term(f.right, v, t))
    if isinstance(f, Not):
        return Not(substitute(f.body, v, t))
    if isinstance(f, And):
        return And(substitute(f.left, v, t), substitute(f.right, v, t))
    if isinstance(f, Or):
        return Or(substitute(f.left, v, t), substitute(f.right, v, t))
    if isinstance(f, Implies):
        return Implies(substitute(f.left, v, t), substitute(f.right, v, t))
    if isinstance(f, (ForAll, Exists)):
        cls = type(f)
        if f.var == v:
            return f  # v is bound here, nothing free below
        if v in free_vars(f.body) and f.var in term_vars(t):
            # capture: rename the binder first
            avoid = free_vars(f.body) | term_vars(t) | {v}
            fresh = _primed_fresh(f.var, avoid)
            body = substitute(f.body, f.var, Variable(fresh))
            return cls(fresh, substitute(body, v, t))
        return cls(f.var, substitute(f.body, v, t))
    return f


def fresh_constant(used: set[str]) -> Constant:
    """Smallest indexed constant a1, a2, ... not in ``used``."""
    i = 1
    while f"a{i}" in used:
        i += 1
    return Constant(f"a{i}")


# ---------------------------------------------------------------------------
# prefix (macro) parsing

_PREFIX_TOKEN = re.compile(
    r"\s*(\\[a-zA-Z]+|[a-zA-Z][a-zA-Z0-9']*|0|[{}(),])"
)

_FORMULA_MACROS = {
    "\\falsum": 0,
    "\\neg": 1,
    "\\con": 2,
    "\\dis": 2,
    "\\imp": 2,
    "\\all": 2,
    "\\some": 2,
    "\\eq": 2,
}

_TERM_MACROS = {"\\zero": 0, "\\suc": 1, "\\plus": 2, "\\times": 2}


class _Tokens:
    def __init__(self, text: str, pattern: re.Pattern):
        self.text = text
        self.toks: list[tuple[str, int]] = []
        pos = 0
        while pos < len(text):
            m = pattern.match(text, pos)
            if m is None:
                if text[pos:].strip() == "":
                    break
                raise FormulaSyntaxError(
                    f"unexpected character {text[pos]!r}", position=pos
                )
            self.toks.append((m.group(1), m.start(1)))
            pos = m.end()
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self) -> int:
        return self.toks[self.i][1] if self.i < len(self.toks) else len(self.text)

    def next(self) -> str:
        if self.i >= len(self.toks):
            raise FormulaSyntaxError("unexpected end of input", position=len(self.text))
        tok = self.toks[self.i][0]
        self.i += 1
        return tok

    def expect(self, tok: str):
        got = self.peek()
        if got != tok:
            raise FormulaSyntaxError(
                f"expected {tok!r}, got {got!r}", position=self.pos(), expected=tok
            )
        self.next()


class _ArityTable:
    """Per-parse arity consistency for predicates and function symbols."""

    def __init__(self):
        self.seen: dict[str, int] = {"s": 1, "+": 2, "·": 2}

    def note(self, symbol: str, arity: int, position: int):
        prev = self.seen.setdefault(symbol, arity)
        if prev != arity:
            raise ArityError(
                f"symbol {symbol!r} used with {arity} argument(s), expected {prev}"
            )


def _classify(name: str, bound: tuple[str, ...]) -> Term:
    if name in bound or name[0] in VARIABLE_INITIALS:
        return Variable(name)
    return Constant(name)


def _parse_prefix_term(tk: _Tokens, bound: tuple[str, ...], ar: _ArityTable) -> Term:
    tok = tk.peek()
    if tok is None:
        raise FormulaSyntaxError("unexpected end of input", position=tk.pos())
    if tok == "\\zero":
        tk.next()
        return ZERO
    if tok in _TERM_MACROS:
        tk.next()
        args = []
        for _ in range(_TERM_MACROS[tok]):
            tk.expect("{")
            args.append(_parse_prefix_term(tk, bound, ar))
            tk.expect("}")
        sym = {"\\suc": "s", "\\plus": "+", "\\times": "·"}[tok]
        return Function(sym, tuple(args))
    if tok == "0":
        tk.next()
        return ZERO
    if tok.startswith("\\"):
        raise FormulaSyntaxError(
            f"unknown term macro {tok}", position=tk.pos(), expected="term"
        )
    pos = tk.pos()
    name = tk.next()
    if tk.peek() == "(":
        tk.next()
        args = [_parse_prefix_term(tk, bound, ar)]
        while tk.peek() == ",":
            tk.next()
            args.append(_parse_prefix_term(tk, bound, ar))
        tk.expect(")")
        ar.note(name, len(args), pos)
        return Function(name, tuple(args))
    return _classify(name, bound)


def _parse_prefix_formula(tk: _Tokens, bound: tuple[str, ...], ar: _ArityTable) -> Formula:
    tok = tk.peek()
    if tok is None:
        raise FormulaSyntaxError("unexpected end of input", position=tk.pos())
    if tok == "\\falsum":
        tk.next()
        return FALSUM
    if tok == "\\neg":
        tk.next()
        tk.expect("{")
        body = _parse_prefix_formula(tk, bound, ar)
        tk.expect("}")
        return Not(body)
    if tok in ("\\con", "\\dis", "\\imp"):
        tk.next()
        tk.expect("{")
        left = _parse_prefix_formula(tk, bound, ar)
        tk.expect("}")
        tk.expect("{")
        right = _parse_prefix_formula(tk, bound, ar)
        tk.expect("}")
        cls = {"\\con": And, "\\dis": Or, "\\imp": Implies}[tok]
        return cls(left, right)
    if tok in ("\\all", "\\some"):
        tk.next()
        tk.expect("{")
        var = tk.next()
        if not NAME_RE.fullmatch(var):
            raise FormulaSyntaxError(
                f"bad binder name {var!r}", position=tk.pos(), expected="variable"
            )
        tk.expect("}")
        tk.expect("{")
        body = _parse_prefix_formula(tk, (*bound, var), ar)
        tk.expect("}")
        return (ForAll if tok == "\\all" else Exists)(var, body)
    if tok == "\\eq":
        tk.next()
        tk.expect("{")
        left = _parse_prefix_term(tk, bound, ar)
        tk.expect("}")
        tk.expect("{")
        right = _parse_prefix_term(tk, bound, ar)
        tk.expect("}")
        return Equals(left, right)
    if tok.startswith("\\"):
        raise FormulaSyntaxError(f"unknown macro {tok}", position=tk.pos())
    pos = tk.pos()
    name = tk.next()
    if tk.peek() == "(":
        tk.next()
        args = [_parse_prefix_term(tk, bound, ar)]
        while tk.peek() == ",":
            tk.next()
            args.append(_parse_prefix_term(tk, bound, ar))
        tk.expect(")")
        ar.note(name, len(args), pos)
        return Atom(name, tuple(args))
    ar.note(name, 0, pos)
    return Atom(name)


def parse_prefix(text: str) -> Formula:
    """Parse the prefix macro format."""
    tk = _Tokens(text, _PREFIX_TOKEN)
    f = _parse_prefix_formula(tk, (), _ArityTable())
    if tk.peek() is not None:
        raise FormulaSyntaxError(
            f"trailing input {tk.peek()!r}", position=tk.pos(), expected="end of input"
        )
    return f


# ---------------------------------------------------------------------------
# infix parsing

_INFIX_TOKEN = re.compile(
    r"\s*(->|→|#f|⊥|¬|~|∧|&|∨|\||∀|∃|=|\+|·|\*|[().,]|[a-zA-Z][a-zA-Z0-9']*|0)"
)

_QUANT_WORDS = {"fa": ForAll, "ex": Exists, "∀": ForAll, "∃": Exists}


class _InfixParser:
    def __init__(self, text: str):
        self.tk = _Tokens(text, _INFIX_TOKEN)
        self.ar = _ArityTable()

    def parse(self) -> Formula:
        f = self.formula(())
        if self.tk.peek() is not None:
            raise FormulaSyntaxError(
                f"trailing input {self.tk.peek()!r}",
                position=self.tk.pos(),
                expected="end of input",
            )
        return f

    def formula(self, bound) -> Formula:
        return self.implication(bound)

    def implication(self, bound) -> Formula:
        left = self.disjunction(bound)
        if self.tk.peek() in ("->", "→"):
            self.tk.next()
            return Implies(left, self.implication(bound))
        return left

    def disjunction(self, bound) -> Formula:
        left = self.conjunction(bound)
        while self.tk.peek() in ("|", "∨"):
            self.tk.next()
            left = Or(left, self.conjunction(bound))
        return left

    def conjunction(self, bound) -> Formula:
        left = self.unary(bound)
        while self.tk.peek() in ("&", "∧"):
            self.tk.next()
            left = And(left, self.unary(bound))
        return left

    def unary(self, bound) -> Formula:
        tok = self.tk.peek()
        if tok in ("~", "¬"):
            self.tk.next()
            return Not(self.unary(bound))
        if tok in _QUANT_WORDS:
            cls = _QUANT_WORDS[tok]
            self.tk.next()
            var = self.tk.next()
            if not NAME_RE.fullmatch(var or ""):
                raise FormulaSyntaxError(
                    f"bad binder name {var!r}",
                    position=self.tk.pos(),
                    expected="variable",
                )
            if self.tk.peek() == ".":
                self.tk.next()
            # quantifiers bind maximally to the right
            return cls(var, self.implication((*bound, var)))
        return self.primary(bound)

    def primary(self, bound) -> Formula:
        tok = self.tk.peek()
        if tok in ("⊥", "#f"):
            self.tk.next()
            return FALSUM
        if tok == "(":
            # could be a parenthesised formula or a parenthesised term of
            # an equality; try the term reading first, with backtracking
            mark = self.tk.i
            try:
                t = self.term(bound)
                if self.tk.peek() == "=":
                    self.tk.next()
                    return Equals(t, self.term(bound))
            except (FormulaSyntaxError, ArityError):
                pass
            self.tk.i = mark
            self.tk.next()
            f = self.formula(bound)
            self.tk.expect(")")
            return f
        if tok is None:
            raise FormulaSyntaxError(
                "unexpected end of input", position=self.tk.pos(), expected="formula"
            )
        if tok == "0" or NAME_RE.fullmatch(tok):
            pos = self.tk.pos()
            t = self.term(bound)
            if self.tk.peek() == "=":
                self.tk.next()
                return Equals(t, self.term(bound))
            if isinstance(t, (Variable, Constant)) and t.name != "0":
                self.ar.note(t.name, 0, pos)
                return Atom(t.name)
            if isinstance(t, Function) and t.symbol not in ("s", "+", "·"):
                return Atom(t.symbol, t.args)
            raise FormulaSyntaxError(
                "term in formula position", position=self.tk.pos(), expected="="
            )
        raise FormulaSyntaxError(
            f"unexpected {tok!r}", position=self.tk.pos(), expected="formula"
        )

    # term precedence: · over +
    def term(self, bound) -> Term:
        left = self.term_factor(bound)
        while self.tk.peek() == "+":
            self.tk.next()
            left = Function("+", (left, self.term_factor(bound)))
        return left

    def term_factor(self, bound) -> Term:
        left = self.term_atom(bound)
        while self.tk.peek() in ("·", "*"):
            self.tk.next()
            left = Function("·", (left, self.term_atom(bound)))
        return left

    def term_atom(self, bound) -> Term:
        tok = self.tk.peek()
        if tok == "0":
            self.tk.next()
            return ZERO
        if tok == "(":
            self.tk.next()
            t = self.term(bound)
            self.tk.expect(")")
            return t
        if tok is not None and NAME_RE.fullmatch(tok):
            pos = self.tk.pos()
            name = self.tk.next()
            if self.tk.peek() == "(":
                self.tk.next()
                args = [self.term(bound)]
                while self.tk.peek() == ",":
                    self.tk.next()
                    args.append(self.term(bound))
                self.tk.expect(")")
                self.ar.note(name, len(args), pos)
                return Function(name, tuple(args))
            return _classify(name, bound)
        raise FormulaSyntaxError(
            f"unexpected {tok!r}", position=self.tk.pos(), expected="term"
        )


def parse_infix(text: str) -> Formula:
    """Parse the human infix format (unicode symbols or ASCII aliases)."""
    return _InfixParser(text).parse()


def parse_formula(text: str) -> Formula:
    """Parse either syntax: prefix when the text uses any macro."""
    if "\\" in text:
        return parse_prefix(text)
    return parse_infix(text)


def parse_term(text: str) -> Term:
    """Parse a bare term in either syntax."""
    if "\\" in text:
        tk = _Tokens(text, _PREFIX_TOKEN)
        t = _parse_prefix_term(tk, (), _ArityTable())
    else:
        p = _InfixParser(text)
        t = p.term(())
        tk = p.tk
    if tk.peek() is not None:
        raise FormulaSyntaxError(
            f"trailing input {tk.peek()!r}", position=tk.pos(), expected="end of input"
        )
    return t


# ---------------------------------------------------------------------------
# printing

def print_term_prefix(t: Term) -> str:
    if isinstance(t, (Variable, Constant)):
        return "\\zero" if isinstance(t, Constant) and t.name == "0" else t.name
    assert isinstance(t, Function)
    if t.symbol == "s":
        return "\\suc{%s}" % print_term_prefix(t.args[0])
    if t.symbol == "+":
        return "\\plus{%s}{%s}" % tuple(print_term_prefix(a) for a in t.args)
    if t.symbol == "·":
        return "\\times{%s}{%s}" % tuple(print_term_prefix(a) for a in t.args)
    return "%s(%s)" % (t.symbol, ",".join(print_term_prefix(a) for a in t.args))


def print_prefix(f: Formula) -> str:
    """Canonical prefix macro text; left inverse of :func:`parse_prefix`."""
    if isinstance(f, Falsum):
        return "\\falsum"
    if isinstance(f, Atom):
        if not f.args:
            return f.predicate
        return "%s(%s)" % (f.predicate, ",".join(print_term_prefix(a) for a in f.args))
    if isinstance(f, Not):
        return "\\neg{%s}" % print_prefix(f.body)
    if isinstance(f, And):
        return "\\con{%s}{%s}" % (print_prefix(f.left), print_prefix(f.right))
    if isinstance(f, Or):
        return "\\dis{%s}{%s}" % (print_prefix(f.left), print_prefix(f.right))
    if isinstance(f, Implies):
        return "\\imp{%s}{%s}" % (print_prefix(f.left), print_prefix(f.right))
    if isinstance(f, ForAll):
        return "\\all{%s}{%s}" % (f.var, print_prefix(f.body))
    if isinstance(f, Exists):
        return "\\some{%s}{%s}" % (f.var, print_prefix(f.body))
    if isinstance(f, Equals):
        return "\\eq{%s}{%s}" % (print_term_prefix(f.left), print_term_prefix(f.right))
    raise TypeError(f"not a formula: {f!r}")


# LaTeX output uses the same macro set as the storage format
print_latex = print_prefix


_PREC_IMPLIES = 1
_PREC_OR = 2
_PREC_AND = 3
_PREC_NOT = 4
_PREC_ATOM = 5
_PREC_QUANT = 1


def print_term_unicode(t: Term, ctx: int = 0) -> str:
    # term precedence: atoms 3, · 2, + 1
    if isinstance(t, (Variable, Constant)):
        return t.name
    assert isinstance(t, Function)
    if t.symbol == "+":
        s = "%s+%s" % (print_term_unicode(t.args[0], 1), print_term_unicode(t.args[1], 2))
        return f"({s})" if ctx > 1 else s
    if t.symbol == "·":
        s = "%s·%s" % (print_term_unicode(t.args[0], 2), print_term_unicode(t.args[1], 3))
        return f"({s})" if ctx > 2 else s
    return "%s(%s)" % (t.symbol, ",".join(print_term_unicode(a) for a in t.args))


def print_unicode(f: Formula, ctx: int = 0) -> str:
    """Unicode rendering with minimal parentheses; reparses via
    :func:`parse_infix`."""
    if isinstance(f, Falsum):
        return "⊥"
    if isinstance(f, Atom):
        if not f.args:
            return f.predicate
        return "%s(%s)" % (f.predicate, ",".join(print_term_unicode(a) for a in f.args))
    if isinstance(f, Equals):
        s = "%s = %s" % (print_term_unicode(f.left), print_term_unicode(f.right))
        return f"({s})" if ctx > 0 else s
    if isinstance(f, Not):
        return "¬" + print_unicode(f.body, _PREC_NOT)
    if isinstance(f, And):
        s = "%s ∧ %s" % (print_unicode(f.left, _PREC_AND), print_unicode(f.right, _PREC_AND + 1))
        return f"({s})" if ctx > _PREC_AND else s
    if isinstance(f, Or):
        s = "%s ∨ %s" % (print_unicode(f.left, _PREC_OR), print_unicode(f.right, _PREC_OR + 1))
        return f"({s})" if ctx > _PREC_OR else s
    if isinstance(f, Implies):
        s = "%s → %s" % (print_unicode(f.left, _PREC_IMPLIES + 1), print_unicode(f.right, _PREC_IMPLIES))
        return f"({s})" if ctx > _PREC_IMPLIES else s
    if isinstance(f, (ForAll, Exists)):
        sym = "∀" if isinstance(f, ForAll) else "∃"
        s = "%s%s %s" % (sym, f.var, print_unicode(f.body, 0))
        return f"({s})" if ctx > _PREC_QUANT else s
    raise TypeError(f"not a formula: {f!r}")
