import pytest
from hypothesis import given, strategies as st

import ndplan.formula as fm
from ndplan.errors import ArityError, FormulaSyntaxError

import oracle


# -- strategies ---------------------------------------------------------------

names = st.sampled_from(["p", "q", "r"])
variables = st.sampled_from(["x", "y", "z"])
term_leaves = st.one_of(
    st.builds(fm.Variable, variables),
    st.sampled_from([fm.ZERO, fm.Constant("c"), fm.Constant("a1")]),
)
terms = st.recursive(
    term_leaves,
    lambda t: st.one_of(
        st.builds(lambda a: fm.suc(a), t),
        st.builds(lambda a, b: fm.plus(a, b), t, t),
        st.builds(lambda a, b: fm.times(a, b), t, t),
    ),
    max_leaves=6,
)

prop_leaves = st.one_of(st.builds(lambda n: fm.Atom(n, ()), names), st.just(fm.FALSUM))
atomic = st.one_of(
    prop_leaves,
    st.builds(lambda n, t: fm.Atom(n, (t,)), st.sampled_from(["P", "Q"]), terms),
    st.builds(fm.Equals, terms, terms),
)
formulas = st.recursive(
    atomic,
    lambda f: st.one_of(
        st.builds(fm.Not, f),
        st.builds(fm.And, f, f),
        st.builds(fm.Or, f, f),
        st.builds(fm.Implies, f, f),
        st.builds(fm.ForAll, variables, f),
        st.builds(fm.Exists, variables, f),
    ),
    max_leaves=7,
)
prop_formulas = st.recursive(
    prop_leaves,
    lambda f: st.one_of(
        st.builds(fm.Not, f),
        st.builds(fm.And, f, f),
        st.builds(fm.Or, f, f),
        st.builds(fm.Implies, f, f),
    ),
    max_leaves=7,
)


# -- round trips --------------------------------------------------------------


@given(formulas)
def test_prefix_round_trip(f):
    assert fm.parse_prefix(fm.print_prefix(f)) == f


@given(formulas)
def test_unicode_round_trip(f):
    assert fm.parse_infix(fm.print_unicode(f)) == f


@given(formulas)
def test_parse_formula_dispatches_both(f):
    assert fm.parse_formula(fm.print_prefix(f)) == f
    assert fm.parse_formula(fm.print_unicode(f)) == f


def test_latex_is_prefix():
    f = fm.parse_infix("p & q -> r")
    assert fm.print_latex(f) == fm.print_prefix(f)


# -- fixed parses -------------------------------------------------------------


@pytest.mark.parametrize(
    "text,expected",
    [
        ("p -> q -> r", "p → (q → r)"),
        ("~p & q", "¬p ∧ q"),
        ("~(p & q)", "¬(p ∧ q)"),
        ("p & q | r", "(p ∧ q) ∨ r"),
        ("p | q -> r", "(p ∨ q) → r"),
        ("fa x P(x) & Q(x)", "∀x (P(x) ∧ Q(x))"),
        ("ex x P(x) -> q", "∃x (P(x) → q)"),
        ("#f", "⊥"),
    ],
)
def test_infix_precedence(text, expected):
    f = fm.parse_infix(text)
    assert fm.parse_infix(expected.replace("(", " ( ").replace(")", " ) ")) == f
    # the printer emits a minimal-parentheses equivalent
    assert fm.parse_infix(fm.print_unicode(f)) == f


def test_unicode_and_ascii_aliases_agree():
    assert fm.parse_infix("p ∧ q → ¬r ∨ ⊥") == fm.parse_infix("p & q -> ~r | #f")
    assert fm.parse_infix("∀x P(x)") == fm.parse_infix("fa x P(x)")
    assert fm.parse_infix("∃y P(y)") == fm.parse_infix("ex y P(y)")


def test_prefix_macros():
    f = fm.parse_prefix(r"\imp{\con{p}{q}}{\dis{\neg{r}}{\falsum}}")
    assert f == fm.parse_infix("p & q -> ~r | #f")
    t = fm.parse_prefix(r"\eq{\plus{\zero}{\suc{x}}}{\times{x}{y}}")
    assert isinstance(t, fm.Equals)


def test_quantifier_binds_maximally_right():
    f = fm.parse_infix("fa x P(x) -> Q(x)")
    assert isinstance(f, fm.ForAll)
    assert isinstance(f.body, fm.Implies)


@pytest.mark.parametrize("bad", ["p &", "(p", "p))", "", "\\bogus{p}{q}"])
def test_syntax_errors(bad):
    with pytest.raises(FormulaSyntaxError) as e:
        fm.parse_formula(bad)
    assert e.value.code == "SyntaxError"
    assert e.value.position >= 0


def test_arity_consistency():
    with pytest.raises(ArityError):
        fm.parse_infix("P(x) & P(x,y)")
    with pytest.raises(ArityError):
        fm.parse_infix("f(x) = f(x,y)")


# -- variables and substitution -----------------------------------------------


def test_variable_classification_by_initial():
    f = fm.parse_infix("P(x,c)")
    args = f.args
    assert isinstance(args[0], fm.Variable)  # x,y,z… are variables
    assert isinstance(args[1], fm.Constant)  # c is a constant


def test_bound_occurrences_are_variables():
    f = fm.parse_infix("fa a P(a)")  # 'a' bound, despite its initial
    assert isinstance(f, fm.ForAll)
    assert f.body.args[0] == fm.Variable("a")


def test_free_vars():
    f = fm.parse_infix("fa x P(x,y)")
    assert fm.free_vars(f) == {"y"}


def test_substitute_simple():
    f = fm.parse_infix("P(x) & Q(x)")
    g = fm.substitute(f, "x", fm.Constant("c"))
    assert g == fm.parse_infix("P(c) & Q(c)")


def test_substitute_shadowed_is_noop():
    f = fm.parse_infix("fa x P(x)")
    assert fm.substitute(f, "x", fm.Constant("c")) == f


def test_substitute_avoids_capture():
    # replacing y with x under ∀x must rename the binder
    f = fm.parse_infix("fa x P(x,y)")
    g = fm.substitute(f, "y", fm.Variable("x"))
    assert isinstance(g, fm.ForAll)
    assert g.var != "x"
    assert fm.free_vars(g) == {"x"}


def _term_vars(t):
    if isinstance(t, fm.Variable):
        return {t.name}
    if isinstance(t, fm.Function):
        return set().union(set(), *(_term_vars(a) for a in t.args))
    return set()


@given(formulas, variables, terms)
def test_substitute_removes_free_occurrences(f, v, t):
    g = fm.substitute(f, v, t)
    if v not in _term_vars(t):
        assert v not in fm.free_vars(g)


def test_fresh_constant_sequence():
    assert fm.fresh_constant(set()) == fm.Constant("a1")
    assert fm.fresh_constant({"a1", "a2"}) == fm.Constant("a3")


@given(prop_formulas)
def test_oracle_double_negation(f):
    # the test oracle itself behaves classically
    assert oracle.entails([fm.Not(fm.Not(f))], f)
