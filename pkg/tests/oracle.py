"""Independent brute-force oracles used to cross-check the engine.

Deliberately dumb: truth tables over explicit valuations, no sharing of
logic with the checker beyond the formula AST itself.
"""

from itertools import product

from ndplan import formula as fm


def atoms(f) -> set[str]:
    if isinstance(f, fm.Atom):
        return {f.predicate}
    if isinstance(f, fm.Falsum):
        return set()
    if isinstance(f, fm.Not):
        return atoms(f.body)
    if isinstance(f, (fm.And, fm.Or, fm.Implies)):
        return atoms(f.left) | atoms(f.right)
    raise ValueError(f"not propositional: {f!r}")


def evaluate(f, valuation: dict) -> bool:
    if isinstance(f, fm.Atom):
        return valuation[f.predicate]
    if isinstance(f, fm.Falsum):
        return False
    if isinstance(f, fm.Not):
        return not evaluate(f.body, valuation)
    if isinstance(f, fm.And):
        return evaluate(f.left, valuation) and evaluate(f.right, valuation)
    if isinstance(f, fm.Or):
        return evaluate(f.left, valuation) or evaluate(f.right, valuation)
    if isinstance(f, fm.Implies):
        return (not evaluate(f.left, valuation)) or evaluate(f.right, valuation)
    raise ValueError(f"not propositional: {f!r}")


def entails(premises, conclusion) -> bool:
    """premises ⊨ conclusion by exhaustive valuation."""
    names = sorted(set().union(atoms(conclusion), *(atoms(p) for p in premises)))
    assert len(names) <= 4, "oracle is for small sequents"
    for bits in product((False, True), repeat=len(names)):
        v = dict(zip(names, bits))
        if all(evaluate(p, v) for p in premises) and not evaluate(conclusion, v):
            return False
    return True
