"""Backtracking parser for the active and passive surface grammars.

Every rule returns all of its readings at a position, so the caller
decides whether to stop at the first.
Tokens are only ever read through :func:`_tok`.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Optional, Sequence

from .lexicon import (
    Lexicon,
    active_verb_form,
    aux_chain,
    aux_tense_token,
    do_support_aux,
    finite_passive_aux,
)
from .syntax import (
    TENSE_INDEX,
    TENSES,
    ActiveTree,
    Agreement,
    FullNP,
    NounPhrase,
    PassiveTree,
    Polarity,
    PrepPhrase,
    Pro,
    Role,
    Tense,
    tense_group,
)

Tokens = Sequence[str]


@dataclass(frozen=True)
class ActiveParse:
    tree: ActiveTree
    tense: Tense
    subj_agr: Agreement
    obj_agr: Agreement


@dataclass(frozen=True)
class PassiveParse:
    tree: PassiveTree
    tense: Tense
    subj_agr: Agreement
    agent_agr: Agreement


def tokenize(line: str) -> list[str]:
    tokens = line.lower().split()
    if tokens and tokens[-1].endswith("."):
        last = tokens.pop()[:-1]
        if last:
            tokens.append(last)
    return tokens


def _tok(tokens: Tokens, i: int) -> Optional[str]:
    try:
        return tokens[i]
    except IndexError:
        return None


# --- noun phrases -----------------------------------------------------------

def _noun_phrases(
    tokens: Tokens, pos: int, role: Role, lex: Lexicon, memo: dict
) -> list[tuple[NounPhrase, Agreement, int]]:
    """Every (np, agreement, end) at ``pos``, longer PP attachments first.

    ``memo`` lives for one parse call; readings at a position are shared
    by all the phrases that embed them.
    """
    key = (pos, role)
    if key in memo:
        return memo[key]
    out: list = []
    memo[key] = out
    tok = _tok(tokens, pos)
    if tok is None:
        return out
    heads = []
    entry = lex.pronoun_in_role(tok, role)
    if entry is not None:
        heads.append((Pro, (tok,), entry.agreement, pos + 1))
    starts = [(None, pos)]
    if lex.is_determiner(tok):
        starts.insert(0, (tok, pos + 1))
    for det, i in starts:
        adjs: list[str] = []
        while True:
            word = _tok(tokens, i)
            if word is None:
                break
            for agr in lex.noun_agreements(word):
                heads.append((FullNP, (det, tuple(adjs), word), agr, i + 1))
            if not lex.is_adjective(word):
                break
            adjs.append(word)
            i += 1

    for make, args, agr, end in heads:
        for pp, pp_end in _prep_phrases(tokens, end, lex, memo):
            out.append((make(*args, pp), agr, pp_end))
        out.append((make(*args), agr, end))
    return out


def _prep_phrases(tokens: Tokens, pos: int, lex: Lexicon, memo: dict) -> list[tuple[PrepPhrase, int]]:
    key = (pos, "pp")
    if key not in memo:
        tok = _tok(tokens, pos)
        if tok is None or not lex.is_preposition(tok):
            memo[key] = []
        else:
            memo[key] = [
                (PrepPhrase(tok, np), end)
                for np, _, end in _noun_phrases(tokens, pos + 1, Role.OBJECT, lex, memo)
            ]
    return memo[key]


def parse_np(tokens: Tokens, role: Role, lexicon: Lexicon):
    """All noun-phrase readings at the head of ``tokens``.

    Returns (np, agreement, remaining tokens) triples.
    """
    tokens = tuple(tokens)
    return [
        (np, agr, tokens[end:]) for np, agr, end in _noun_phrases(tokens, 0, role, lexicon, {})
    ]


# --- verb groups ------------------------------------------------------------

def _verb_is(tok: Optional[str], form: str, lex: Lexicon) -> bool:
    if tok is None:
        return False
    return any(f == form for _, f in lex.verb_readings(tok))


def _aux_sequence(tokens: Tokens, pos: int, chain: tuple[str, ...]):
    """Match ``chain`` with an optional "not" after its first element.

    Returns (polarity, end) or None.
    """
    if _tok(tokens, pos) != chain[0]:
        return None
    i = pos + 1
    polarity = Polarity.POSITIVE
    if _tok(tokens, i) == "not":
        polarity = Polarity.NEGATIVE
        i += 1
    for word in chain[1:]:
        if _tok(tokens, i) != word:
            return None
        i += 1
    return polarity, i


@functools.lru_cache(maxsize=None)
def _active_rows(agr: Agreement):
    """Tense rows for a subject agreement.

    Returns the group-1 positive (tense, verb form) pairs, which start
    with the verb itself, and every auxiliary-led row keyed by its first
    word as (tense, chain, verb form, "not" required).
    """
    bare = []
    led: dict[str, list] = {}
    for tense in TENSES:
        form = active_verb_form(tense, agr)
        if tense_group(tense) == 1:
            bare.append((tense, form))
            do = do_support_aux(tense, agr)
            led.setdefault(do, []).append((tense, (do,), "base", True))
        else:
            chain = aux_chain(tense, agr)
            led.setdefault(chain[0], []).append((tense, chain, form, False))
    return bare, led


@functools.lru_cache(maxsize=None)
def _passive_rows(agr: Agreement):
    """Passive (tense, chain, tense marker) rows keyed by first auxiliary."""
    led: dict[str, list] = {}
    for tense in TENSES:
        if tense_group(tense) == 1:
            chain = (finite_passive_aux(tense, agr),)
        else:
            chain = aux_chain(tense, agr)
        led.setdefault(chain[0], []).append((tense, chain, aux_tense_token(tense)))
    return led


def _active_predicates(tokens: Tokens, pos: int, agr: Agreement, lex: Lexicon):
    """Yield (modal, aux, polarity, verb, tense, end) after a subject."""
    tok = _tok(tokens, pos)
    if tok is None:
        return
    if lex.is_modal(tok):
        polarity, i = _aux_sequence(tokens, pos, (tok,))
        verb = _tok(tokens, i)
        if _verb_is(verb, "base", lex):
            yield tok, (), polarity, verb, Tense.SIMPLE_PRESENT, i + 1

    bare, led = _active_rows(agr)
    for tense, form in bare:
        if _verb_is(tok, form, lex):
            yield None, (), Polarity.POSITIVE, tok, tense, pos + 1
    for tense, chain, form, needs_not in led.get(tok, ()):
        matched = _aux_sequence(tokens, pos, chain)
        if matched is None:
            continue
        polarity, i = matched
        if needs_not and polarity is Polarity.POSITIVE:
            continue
        verb = _tok(tokens, i)
        if _verb_is(verb, form, lex):
            yield None, chain, polarity, verb, tense, i + 1


def _passive_predicates(tokens: Tokens, pos: int, agr: Agreement, lex: Lexicon):
    """Yield (modal, aux, polarity, aux_tense, participle, tense, end)."""
    tok = _tok(tokens, pos)
    if tok is None:
        return
    if lex.is_modal(tok):
        polarity, i = _aux_sequence(tokens, pos, (tok,))
        if _tok(tokens, i) == "be":
            verb = _tok(tokens, i + 1)
            if _verb_is(verb, "past_participle", lex):
                yield tok, (), polarity, "be", verb, Tense.SIMPLE_PRESENT, i + 2

    for tense, chain, marker in _passive_rows(agr).get(tok, ()):
        matched = _aux_sequence(tokens, pos, chain)
        if matched is None:
            continue
        polarity, i = matched
        if marker is not None:
            if _tok(tokens, i) != marker:
                continue
            i += 1
        verb = _tok(tokens, i)
        if _verb_is(verb, "past_participle", lex):
            yield None, chain, polarity, marker, verb, tense, i + 1


def _sentence_tails(tokens: Tokens, pos: int, lex: Lexicon, memo: dict):
    """(final_pp, end) pairs: no PP first, then every sentence-final PP."""
    return [(None, pos), *_prep_phrases(tokens, pos, lex, memo)]


def _ordering(parse) -> tuple:
    return (tense_group(parse.tense), TENSE_INDEX[parse.tense], parse.tree.final_pp is not None)


def parse_active(tokens: Tokens, lexicon: Lexicon) -> list[ActiveParse]:
    results = []
    n = len(tokens)
    memo: dict = {}
    for subj, subj_agr, i in _noun_phrases(tokens, 0, Role.SUBJECT, lexicon, memo):
        for modal, aux, polarity, verb, tense, j in _active_predicates(
            tokens, i, subj_agr, lexicon
        ):
            for obj, obj_agr, k in _noun_phrases(tokens, j, Role.OBJECT, lexicon, memo):
                for final_pp, end in _sentence_tails(tokens, k, lexicon, memo):
                    if end == n:
                        tree = ActiveTree(subj, modal, aux, polarity, verb, obj, final_pp)
                        results.append(ActiveParse(tree, tense, subj_agr, obj_agr))
    results.sort(key=_ordering)
    return results


def parse_passive(tokens: Tokens, lexicon: Lexicon) -> list[PassiveParse]:
    results = []
    n = len(tokens)
    memo: dict = {}
    for subj, subj_agr, i in _noun_phrases(tokens, 0, Role.SUBJECT, lexicon, memo):
        for modal, aux, polarity, marker, verb, tense, j in _passive_predicates(
            tokens, i, subj_agr, lexicon
        ):
            if _tok(tokens, j) != "by":
                continue
            for agent, agent_agr, k in _noun_phrases(tokens, j + 1, Role.OBJECT, lexicon, memo):
                for final_pp, end in _sentence_tails(tokens, k, lexicon, memo):
                    if end == n:
                        tree = PassiveTree(
                            subj, modal, aux, polarity, marker, verb, agent, final_pp
                        )
                        results.append(PassiveParse(tree, tense, subj_agr, agent_agr))
    results.sort(key=_ordering)
    return results
