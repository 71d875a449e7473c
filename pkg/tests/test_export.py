import ndplan as nd
from ndplan import persist
from ndplan.export import export_frames, export_latex, export_unicode, unicode_rows

from conftest import GOLDEN
from corpus import DEMORGAN_SCRIPT


def test_unicode_golden(demorgan_state):
    assert export_unicode(demorgan_state) == (GOLDEN / "demorgan.txt").read_text()


def test_latex_golden(demorgan_state):
    assert export_latex(demorgan_state) == (GOLDEN / "demorgan.tex").read_text()


def test_pinned_unicode_row(demorgan_state):
    assert "│ │ 9. p        3,∧E" in export_unicode(demorgan_state).splitlines()


def test_pinned_latex_row(demorgan_state):
    lines = export_latex(demorgan_state).splitlines()
    assert len([l for l in lines if l.startswith(r"\ndline")]) == 10
    assert r"\ndline{1}{close}{4}{\falsum}{1,5-6,7-8,\rulename{∨E}}" in lines


def test_unicode_justification_column_gap():
    # justification column = longest row content + 5 spaces
    s = nd.run_script({"premises": ["p"], "conclusion": "p",
                       "steps": [{"selectGoal": 2}, {"selectResource": 1},
                                 {"apply": {"rule": "Re"}}]})
    assert export_unicode(s) == "1. p     Prem\n2. p     1,Re\n"


def test_goal_rows_have_no_justification():
    s = nd.new_proof([nd.parse_formula("p")], nd.parse_formula("q"))
    out = export_unicode(s)
    assert out == "1. p     Prem\n2. q\n"


def test_frames_progression(demorgan_state):
    doc = persist.document_from_state(demorgan_state)
    frames = export_frames(doc)
    assert len(frames) == len(demorgan_state.events) + 1
    # first frame: just the sequent; last frame: the finished deduction
    assert [r.creation for r in frames[0]] == [1, 2]
    assert unicode_rows(frames[-1]) == export_unicode(demorgan_state)
    # frames grow monotonically in line count
    sizes = [len(f) for f in frames]
    assert sizes == sorted(sizes)


def test_exports_deterministic(demorgan_state):
    assert export_latex(demorgan_state) == export_latex(demorgan_state)
    assert export_unicode(demorgan_state) == export_unicode(demorgan_state)
