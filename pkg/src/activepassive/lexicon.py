"""Word inventory, verb morphology and the auxiliary tables.

Lexicon files are plain text, one entry per line::

    det the
    noun man men
    pro he him singular
    adj small
    verb buy buys bought bought buying
    prep on
    modal should

``#`` starts a comment.  A later line with the same key (the first word
after the category) replaces the earlier one.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

from .errors import LexiconError
from .syntax import Agreement, Role, Tense, tense_group

__all__ = [
    "FORMS",
    "FUNCTION_WORDS",
    "Lexicon",
    "LexiconError",
    "NounEntry",
    "PronounEntry",
    "VerbEntry",
    "active_verb_form",
    "aux_chain",
    "aux_tense_token",
    "builtin_lexicon",
    "do_support_aux",
    "dump_lexicon",
    "finite_passive_aux",
    "inflect",
    "load_lexicon",
    "parse_lexicon_source",
    "pronoun_form",
]

FORMS = ("base", "third_sg", "past", "past_participle", "present_participle")


@dataclass(frozen=True)
class VerbEntry:
    base: str
    third_sg: str
    past: str
    past_participle: str
    present_participle: str

    def forms(self) -> tuple[str, ...]:
        return tuple(getattr(self, f) for f in FORMS)


@dataclass(frozen=True)
class PronounEntry:
    subject_form: str
    object_form: str
    agreement: Agreement


@dataclass(frozen=True)
class NounEntry:
    surface: str
    agreement: Agreement


def inflect(entry: VerbEntry, form: str) -> str:
    if form not in FORMS:
        raise ValueError(f"unknown verb form {form!r}")
    return getattr(entry, form)


def pronoun_form(entry: PronounEntry, role: Role) -> str:
    return entry.subject_form if role is Role.SUBJECT else entry.object_form


# --- auxiliary tables -------------------------------------------------------

_S, _P, _I = Agreement.SINGULAR, Agreement.PLURAL, Agreement.FIRST_SINGULAR

_BE_PRESENT = {_S: "is", _P: "are", _I: "am"}
_BE_PAST = {_S: "was", _P: "were", _I: "was"}
_HAVE_PRESENT = {_S: "has", _P: "have", _I: "have"}
_DO_PRESENT = {_S: "does", _P: "do", _I: "do"}


def aux_chain(tense: Tense, agr: Agreement) -> tuple[str, ...]:
    """Active-voice auxiliaries for ``tense``; the first one agrees with ``agr``."""
    if tense is Tense.SIMPLE_PAST or tense is Tense.SIMPLE_PRESENT:
        return ()
    if tense is Tense.SIMPLE_FUTURE:
        return ("will",)
    if tense is Tense.CONTINUOUS_PAST:
        return (_BE_PAST[agr],)
    if tense is Tense.CONTINUOUS_PRESENT:
        return (_BE_PRESENT[agr],)
    if tense is Tense.CONTINUOUS_FUTURE:
        return ("will", "be")
    if tense is Tense.PERFECT_PAST:
        return ("had",)
    if tense is Tense.PERFECT_PRESENT:
        return (_HAVE_PRESENT[agr],)
    if tense is Tense.PERFECT_FUTURE:
        return ("will", "have")
    if tense is Tense.PERFECT_CONTINUOUS_PAST:
        return ("had", "been")
    if tense is Tense.PERFECT_CONTINUOUS_PRESENT:
        return (_HAVE_PRESENT[agr], "been")
    return ("will", "have", "been")


_AUX_TENSE = {
    Tense.SIMPLE_FUTURE: "be",
    Tense.PERFECT_PAST: "been",
    Tense.PERFECT_PRESENT: "been",
    Tense.PERFECT_FUTURE: "been",
}


def aux_tense_token(tense: Tense) -> Optional[str]:
    """The passive-only ``be``/``being``/``been`` slot, or None for group 1."""
    if tense_group(tense) == 1:
        return None
    return _AUX_TENSE.get(tense, "being")


def _require_group_one(tense: Tense) -> None:
    if tense_group(tense) != 1:
        raise ValueError(f"{tense.value} is not a simple present/past tense")


def finite_passive_aux(tense: Tense, agr: Agreement) -> str:
    _require_group_one(tense)
    table = _BE_PRESENT if tense is Tense.SIMPLE_PRESENT else _BE_PAST
    return table[agr]


def do_support_aux(tense: Tense, agr: Agreement) -> str:
    _require_group_one(tense)
    if tense is Tense.SIMPLE_PAST:
        return "did"
    return _DO_PRESENT[agr]


def active_verb_form(tense: Tense, agr: Agreement) -> str:
    """Which of the five verb forms follows the auxiliaries of ``tense``."""
    if tense is Tense.SIMPLE_PRESENT:
        return "third_sg" if agr is Agreement.SINGULAR else "base"
    if tense is Tense.SIMPLE_PAST:
        return "past"
    if tense is Tense.SIMPLE_FUTURE:
        return "base"
    if tense in (Tense.PERFECT_PAST, Tense.PERFECT_PRESENT, Tense.PERFECT_FUTURE):
        return "past_participle"
    return "present_participle"


FUNCTION_WORDS = frozenset(
    "will have has had be been being is are am was were do does did not by".split()
)


# --- the lexicon ------------------------------------------------------------

@dataclass(frozen=True)
class Lexicon:
    determiners: tuple[str, ...] = ()
    nouns: tuple[tuple[str, str], ...] = ()  # (singular, plural)
    pronouns: tuple[PronounEntry, ...] = ()
    adjectives: tuple[str, ...] = ()
    verbs: tuple[VerbEntry, ...] = ()
    prepositions: tuple[str, ...] = ()
    modals: tuple[str, ...] = ()

    _noun_index: dict = field(init=False, repr=False, compare=False)
    _pro_subject: dict = field(init=False, repr=False, compare=False)
    _pro_object: dict = field(init=False, repr=False, compare=False)
    _verb_index: dict = field(init=False, repr=False, compare=False)
    _verb_bases: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nouns: dict[str, list[Agreement]] = {}
        for sg, pl in self.nouns:
            for tok, agr in ((sg, Agreement.SINGULAR), (pl, Agreement.PLURAL)):
                readings = nouns.setdefault(tok, [])
                if agr not in readings:
                    readings.append(agr)
        verbs: dict[str, list[tuple[VerbEntry, str]]] = {}
        for entry in self.verbs:
            for form in FORMS:
                verbs.setdefault(inflect(entry, form), []).append((entry, form))
        set_ = functools.partial(object.__setattr__, self)
        set_("_noun_index", nouns)
        set_("_pro_subject", {p.subject_form: p for p in self.pronouns})
        set_("_pro_object", {p.object_form: p for p in self.pronouns})
        set_("_verb_index", verbs)
        set_("_verb_bases", {v.base: v for v in self.verbs})

    def noun_entries(self) -> list[NounEntry]:
        out = []
        for sg, pl in self.nouns:
            out.append(NounEntry(sg, Agreement.SINGULAR))
            out.append(NounEntry(pl, Agreement.PLURAL))
        return out

    def is_determiner(self, tok: str) -> bool:
        return tok in self.determiners

    def is_adjective(self, tok: str) -> bool:
        return tok in self.adjectives

    def is_preposition(self, tok: str) -> bool:
        return tok in self.prepositions

    def is_modal(self, tok: str) -> bool:
        return tok in self.modals

    def noun_agreements(self, tok: str) -> list[Agreement]:
        return self._noun_index.get(tok, [])

    def pronoun_in_role(self, tok: str, role: Role) -> Optional[PronounEntry]:
        index = self._pro_subject if role is Role.SUBJECT else self._pro_object
        return index.get(tok)

    def pronoun(self, tok: str) -> Optional[PronounEntry]:
        return self._pro_subject.get(tok) or self._pro_object.get(tok)

    def verb_readings(self, tok: str) -> list[tuple[VerbEntry, str]]:
        """Every (entry, form) whose surface is ``tok``.

        A token ``X+ed`` unknown to the lexicon still reads as past and
        past participle of a known verb ``X``.
        """
        readings = self._verb_index.get(tok)
        if readings:
            return readings
        if tok.endswith("ed") and tok[:-2] in self._verb_bases:
            entry = self._verb_bases[tok[:-2]]
            return [(entry, "past"), (entry, "past_participle")]
        return []

    def knows(self, tok: str) -> bool:
        return (
            tok in FUNCTION_WORDS
            or self.is_determiner(tok)
            or self.is_adjective(tok)
            or self.is_preposition(tok)
            or self.is_modal(tok)
            or bool(self.noun_agreements(tok))
            or self.pronoun(tok) is not None
            or bool(self.verb_readings(tok))
        )

    def vocabulary(self) -> list[str]:
        """All tokens the grammar can consume, in a stable order."""
        words: dict[str, None] = {}
        for group in (
            self.determiners,
            [t for pair in self.nouns for t in pair],
            [t for p in self.pronouns for t in (p.subject_form, p.object_form)],
            self.adjectives,
            [t for v in self.verbs for t in v.forms()],
            self.prepositions,
            self.modals,
            sorted(FUNCTION_WORDS),
        ):
            words.update(dict.fromkeys(group))
        return list(words)


_FIELD_COUNTS = {"det": 2, "noun": 3, "pro": 4, "adj": 2, "verb": 6, "prep": 2, "modal": 2}


def parse_lexicon_source(text: str) -> Lexicon:
    sections: dict[str, dict] = {cat: {} for cat in _FIELD_COUNTS}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip().lower()
        if not line:
            continue
        fields = line.split()
        category = fields[0]
        if category not in _FIELD_COUNTS:
            raise LexiconError(f"unknown category {category!r}", lineno)
        if len(fields) != _FIELD_COUNTS[category]:
            raise LexiconError(
                f"{category!r} takes {_FIELD_COUNTS[category] - 1} fields, got {len(fields) - 1}",
                lineno,
            )
        args = fields[1:]
        if category == "pro":
            try:
                agr = Agreement(args[2])
            except ValueError:
                raise LexiconError(f"bad agreement {args[2]!r}", lineno) from None
            value = PronounEntry(args[0], args[1], agr)
        elif category == "verb":
            value = VerbEntry(*args)
        elif category == "noun":
            value = (args[0], args[1])
        else:
            value = args[0]
        sections[category][args[0]] = (value, lineno)

    seen_objects: dict[str, str] = {}
    for subject, (entry, lineno) in sections["pro"].items():
        owner = seen_objects.setdefault(entry.object_form, subject)
        if owner != subject:
            raise LexiconError(
                f"object form {entry.object_form!r} already belongs to {owner!r}", lineno
            )

    def values(cat):
        return tuple(v for v, _ in sections[cat].values())

    return Lexicon(
        determiners=values("det"),
        nouns=values("noun"),
        pronouns=values("pro"),
        adjectives=values("adj"),
        verbs=values("verb"),
        prepositions=values("prep"),
        modals=values("modal"),
    )


def dump_lexicon(lexicon: Lexicon) -> str:
    lines = [f"det {d}" for d in lexicon.determiners]
    lines += [f"noun {sg} {pl}" for sg, pl in lexicon.nouns]
    lines += [
        f"pro {p.subject_form} {p.object_form} {p.agreement.value}" for p in lexicon.pronouns
    ]
    lines += [f"adj {a}" for a in lexicon.adjectives]
    lines += ["verb " + " ".join(v.forms()) for v in lexicon.verbs]
    lines += [f"prep {p}" for p in lexicon.prepositions]
    lines += [f"modal {m}" for m in lexicon.modals]
    return "\n".join(lines) + "\n"


def load_lexicon(path: str | Path) -> Lexicon:
    return parse_lexicon_source(Path(path).read_text(encoding="utf-8"))


@functools.lru_cache(maxsize=None)
def builtin_lexicon() -> Lexicon:
    text = resources.files(__package__).joinpath("builtin.lex").read_text(encoding="utf-8")
    return parse_lexicon_source(text)
