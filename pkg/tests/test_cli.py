import io
import json
import subprocess
import sys

import pytest

from activepassive.cli import main

TRANSCRIPT_1 = """\
ActiveS: [a,beautiful,woman,has,bought,a,small,apple,on,the,big,beautiful,table]
Tense: perfect_present
ActiveRe: s(np(det(a),adj([beautiful]),n(woman)),aux(has),v(bought),np(det(a),adj([small]),n(apple),pp(pre(on),np(det(the),adj([big,beautiful]),n(table)))))
PassiveS: [a,small,apple,on,the,big,beautiful,table,has,been,bought,by,a,beautiful,woman]
PassiveRe: s(np(det(a),adj([small]),n(apple),pp(pre(on),np(det(the),adj([big,beautiful]),n(table)))),aux(has),auxTense(been),v(bought),agent(by),np(det(a),adj([beautiful]),n(woman)))
"""

TRANSCRIPT_2 = """\
PassiveS: [a,small,apple,should,not,be,bought,by,him]
Tense: simple_present
ActiveS: [he,should,not,buy,a,small,apple]
ActiveRe: s(np(pro(he)),modal(should),pol(not),v(buy),np(det(a),adj([small]),n(apple)))
PassiveRe: s(np(det(a),adj([small]),n(apple)),modal(should),pol(not),aux(be),v(bought),agent(by),np(pro(him)))
"""


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_active_transcript():
    code, out, _ = run("active", "--first",
                       "a beautiful woman has bought a small apple on the big beautiful table.")
    assert code == 0
    assert out == TRANSCRIPT_1 + "true.\n"


def test_active_all_solutions_lists_transcript_first():
    code, out, _ = run("active", "a beautiful woman has bought a small apple on the big beautiful table")
    assert code == 0
    assert out.startswith(TRANSCRIPT_1 + "true ;\n")
    assert out.endswith("true.\n")


def test_passive_transcript():
    code, out, _ = run("passive", "a small apple should not be bought by him.")
    assert (code, out) == (0, TRANSCRIPT_2 + "true.\n")


def test_false_on_no_conversion():
    assert run("active", "the man goes to school")[:2] == (1, "false.\n")
    assert run("passive", "he buys an apple")[:2] == (1, "false.\n")


def test_simple_conversions():
    _, out, _ = run("active", "he buys an apple")
    assert "PassiveS: [an,apple,is,bought,by,him]" in out
    _, out, _ = run("passive", "an apple is bought by him")
    assert "ActiveS: [he,buys,an,apple]" in out


def test_unknown_word():
    code, out, err = run("active", "the dog bites him")
    assert code == 2 and out == ""
    assert "unknown word 'dog'" in err and "lexicon" in err


def test_json_format():
    code, out, _ = run("active", "--format", "json", "he buys an apple")
    assert code == 0
    (line,) = out.splitlines()
    assert json.loads(line) == {
        "activeS": ["he", "buys", "an", "apple"],
        "activeRe": "s(np(pro(he)),v(buys),np(det(an),n(apple)))",
        "passiveS": ["an", "apple", "is", "bought", "by", "him"],
        "passiveRe": "s(np(det(an),n(apple)),aux(is),v(bought),agent(by),np(pro(him)))",
        "tense": "simple_present",
    }


def test_custom_lexicon(tmp_path):
    path = tmp_path / "tiny.lex"
    path.write_text("det the\nnoun dog dogs\npro he him singular\nverb pat pats patted patted patting\n")
    code, out, _ = run("active", "--lexicon", str(path), "he pats the dog")
    assert code == 0 and "PassiveS: [the,dog,is,patted,by,him]" in out


def test_broken_lexicon_file(tmp_path):
    path = tmp_path / "bad.lex"
    path.write_text("det the\nverb pat pats\n")
    code, _, err = run("active", "--lexicon", str(path), "he pats the dog")
    assert code == 2 and "line 2" in err


def test_enumerate(micro_path):
    first = run("enumerate", "--limit", "3", "--lexicon", micro_path)
    assert first == run("enumerate", "--limit", "3", "--lexicon", micro_path)
    assert first[0] == 0
    assert len(first[1].splitlines()) == 9
    assert [l.split(".")[0] for l in first[1].splitlines()] == ["1"] * 3 + ["2"] * 3 + ["3"] * 3
    assert run("enumerate", "--limit", "0") == (0, "", "")


def test_enumerated_pairs_reconvert():
    _, out, _ = run("enumerate", "--format", "json")
    pairs = [json.loads(line) for line in out.splitlines()]
    assert len(pairs) == 100
    for pair in pairs:
        code, back, _ = run("passive", "--format", "json", " ".join(pair["passiveS"]))
        assert any(json.loads(l)["activeS"] == pair["activeS"] for l in back.splitlines())
        code, fwd, _ = run("active", "--format", "json", " ".join(pair["activeS"]))
        assert any(json.loads(l)["passiveS"] == pair["passiveS"] for l in fwd.splitlines())


def test_suite_all_passes():
    code, out, _ = run("test-suite")
    assert code == 0
    assert out.splitlines()[-1].endswith("passed, 0 failed")


def test_suite_active_only():
    _, out, _ = run("test-suite", "active")
    cases = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert cases and all(l.startswith("PASS active:") for l in cases)


def test_suite_catches_corrupted_lexicon(tmp_path):
    from importlib import resources
    text = resources.files("activepassive").joinpath("builtin.lex").read_text()
    path = tmp_path / "corrupt.lex"
    path.write_text(text.replace("verb buy buys bought bought buying",
                                 "verb buy buys bought buyed buying"))
    code, out, _ = run("test-suite", "--lexicon", str(path))
    assert code == 1
    assert "FAIL" in out


def test_repl():
    code, out, err = run("repl", "--first", stdin=(
        "active: he buys an apple\n\npassive: an apple is bought by him.\n"
        "nonsense\nquit\nactive: never read\n"))
    assert code == 0
    assert out.count("true.") == 2
    assert "expected 'active: <sentence>'" in err
    assert "never" not in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "activepassive", "active", "the man buys an apple"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "PassiveS: [an,apple,is,bought,by,the,man]" in proc.stdout


@pytest.fixture
def micro_path(tmp_path):
    from oracle import MICRO_SOURCE
    path = tmp_path / "micro.lex"
    path.write_text(MICRO_SOURCE)
    return str(path)
