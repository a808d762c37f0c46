"""Embedded golden corpus behind the ``test-suite`` command."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .lexicon import Lexicon
from .parser import tokenize
from .pipeline import Bounds, convert_from_active, convert_from_passive, enumerate_pairs


@dataclass(frozen=True)
class Golden:
    direction: str  # "active" or "passive": which side is the input
    source: str
    expected: Optional[str]  # None: must not convert
    tense: Optional[str] = None
    active_term: Optional[str] = None
    passive_term: Optional[str] = None
    first: bool = False  # compare against the first solution only


GOLDENS = (
    Golden(
        "active",
        "a beautiful woman has bought a small apple on the big beautiful table",
        "a small apple on the big beautiful table has been bought by a beautiful woman",
        tense="perfect_present",
        active_term="s(np(det(a),adj([beautiful]),n(woman)),aux(has),v(bought),"
        "np(det(a),adj([small]),n(apple),pp(pre(on),np(det(the),adj([big,beautiful]),n(table)))))",
        passive_term="s(np(det(a),adj([small]),n(apple),pp(pre(on),np(det(the),"
        "adj([big,beautiful]),n(table)))),aux(has),auxTense(been),v(bought),agent(by),"
        "np(det(a),adj([beautiful]),n(woman)))",
        first=True,
    ),
    Golden(
        "passive",
        "a small apple should not be bought by him",
        "he should not buy a small apple",
        tense="simple_present",
        active_term="s(np(pro(he)),modal(should),pol(not),v(buy),np(det(a),adj([small]),n(apple)))",
        passive_term="s(np(det(a),adj([small]),n(apple)),modal(should),pol(not),aux(be),"
        "v(bought),agent(by),np(pro(him)))",
        first=True,
    ),
    Golden("active", "he buys an apple", "an apple is bought by him",
           active_term="s(np(pro(he)),v(buys),np(det(an),n(apple)))",
           passive_term="s(np(det(an),n(apple)),aux(is),v(bought),agent(by),np(pro(him)))",
           first=True),
    Golden("passive", "an apple is bought by him", "he buys an apple", first=True),
    Golden("active", "the man buys an apple", "an apple is bought by the man"),
    Golden("passive", "an apple is bought by the man", "the man buys an apple"),
    Golden("active", "the boy should bring a pen to the class",
           "a pen should be brought by the boy to the class"),
    Golden("passive", "a pen should be brought by the boy to the class",
           "the boy should bring a pen to the class"),
    Golden("active", "the man does not buy an apple", "an apple is not bought by the man"),
    Golden("passive", "an apple is not bought by the man", "the man does not buy an apple"),
    Golden("active", "the man has bought an apple", "an apple has been bought by the man"),
    Golden("passive", "an apple has been bought by the man", "the man has bought an apple"),
    Golden("active", "the man will buy an apple", "an apple will be bought by the man"),
    Golden("active", "a man was buying an apple", "an apple was being bought by a man"),
    Golden("active", "he will be buying an apple", "an apple will be being bought by him"),
    Golden("active", "the man will have bought an apple",
           "an apple will have been bought by the man"),
    Golden("active", "you will have been loving them", "they will have been being loved by you"),
    Golden("active", "a man buys an apple in the supermarket",
           "an apple is bought by a man in the supermarket"),
    Golden("passive", "apples are bought by the man", "the man buys apples"),
    Golden("passive", "i am loved by them", "they love me"),
    Golden("active", "the man goes to school", None),
    Golden("active", "he goes", None),
    Golden("active", "an apple is bought by him", None),
    Golden("passive", "he buys an apple", None),
)


def check_golden(case: Golden, lexicon: Optional[Lexicon] = None) -> Optional[str]:
    """None when the case holds, otherwise a reason."""
    convert = convert_from_active if case.direction == "active" else convert_from_passive
    results = convert(tokenize(case.source), lexicon)
    if case.expected is None:
        return None if not results else f"expected no conversion, got {len(results)}"
    if not results:
        return "no conversion"
    if case.first:
        results = results[:1]
    want = tuple(tokenize(case.expected))
    for r in results:
        got = r.passive_tokens if case.direction == "active" else r.active_tokens
        if got != want:
            continue
        if case.tense is not None and r.tense.value != case.tense:
            return f"tense {r.tense.value}, expected {case.tense}"
        if case.active_term is not None and r.active_term != case.active_term:
            return f"active term {r.active_term}"
        if case.passive_term is not None and r.passive_term != case.passive_term:
            return f"passive term {r.passive_term}"
        return None
    shown = [" ".join(r.passive_tokens if case.direction == "active" else r.active_tokens)
             for r in results]
    return f"expected {case.expected!r}, got {shown}"


def round_trip_failures(lexicon: Optional[Lexicon] = None, limit: int = 200,
                        bounds: Bounds = Bounds()) -> list[str]:
    failures = []
    for pair in enumerate_pairs(lexicon, bounds, limit):
        back = convert_from_passive(pair.passive_tokens, lexicon)
        if not any(r.active_tokens == pair.active_tokens for r in back):
            failures.append(" ".join(pair.active_tokens))
    return failures


def run_suite(which: str = "all", lexicon: Optional[Lexicon] = None,
              emit: Callable[[str], None] = print, round_trip_limit: int = 200) -> int:
    """Run the corpus; returns the number of failures."""
    passed = failed = 0
    for case in GOLDENS:
        if which != "all" and case.direction != which:
            continue
        try:
            reason = check_golden(case, lexicon)
        except Exception as exc:  # a corrupted lexicon may break conversion outright
            reason = f"{type(exc).__name__}: {exc}"
        label = f"{case.direction}: {case.source}"
        if reason is None:
            passed += 1
            emit(f"PASS {label}")
        else:
            failed += 1
            emit(f"FAIL {label} -- {reason}")
    if which == "all":
        bad = round_trip_failures(lexicon, round_trip_limit)
        label = f"round trip over {round_trip_limit} enumerated pairs"
        if bad:
            failed += 1
            emit(f"FAIL {label} -- {len(bad)} broken, first: {bad[0]}")
        else:
            passed += 1
            emit(f"PASS {label}")
    emit(f"{passed} passed, {failed} failed")
    return failed
