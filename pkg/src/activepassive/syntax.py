"""Sentence trees, the tense inventory and the term notation.

Trees are immutable values.  Pronoun noun phrases keep the token in the
case form of the position they occupy (``he`` as subject, ``him`` as
object); role changes go through :func:`activepassive.transform.swap_role`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .errors import LexiconError


class Tense(Enum):
    SIMPLE_PAST = "simple_past"
    SIMPLE_PRESENT = "simple_present"
    SIMPLE_FUTURE = "simple_future"
    CONTINUOUS_PAST = "continuous_past"
    CONTINUOUS_PRESENT = "continuous_present"
    CONTINUOUS_FUTURE = "continuous_future"
    PERFECT_PAST = "perfect_past"
    PERFECT_PRESENT = "perfect_present"
    PERFECT_FUTURE = "perfect_future"
    PERFECT_CONTINUOUS_PAST = "perfect_continuous_past"
    PERFECT_CONTINUOUS_PRESENT = "perfect_continuous_present"
    PERFECT_CONTINUOUS_FUTURE = "perfect_continuous_future"

    def __str__(self) -> str:
        return self.value


class Agreement(Enum):
    SINGULAR = "singular"
    PLURAL = "plural"
    FIRST_SINGULAR = "first_singular"

    def __str__(self) -> str:
        return self.value


class Polarity(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


class Role(Enum):
    SUBJECT = "subject"
    OBJECT = "object"


TENSES = tuple(Tense)
TENSE_INDEX = {t: i for i, t in enumerate(TENSES)}

# number of active-voice auxiliaries + 1
_GROUPS = {
    Tense.SIMPLE_PAST: 1,
    Tense.SIMPLE_PRESENT: 1,
    Tense.SIMPLE_FUTURE: 2,
    Tense.CONTINUOUS_PAST: 2,
    Tense.CONTINUOUS_PRESENT: 2,
    Tense.PERFECT_PAST: 2,
    Tense.PERFECT_PRESENT: 2,
    Tense.CONTINUOUS_FUTURE: 3,
    Tense.PERFECT_FUTURE: 3,
    Tense.PERFECT_CONTINUOUS_PAST: 3,
    Tense.PERFECT_CONTINUOUS_PRESENT: 3,
    Tense.PERFECT_CONTINUOUS_FUTURE: 4,
}


def tense_group(tense: Tense) -> int:
    return _GROUPS[tense]


def parse_tense(name: str) -> Tense:
    try:
        return Tense(name)
    except ValueError:
        raise ValueError(f"unknown tense {name!r}") from None


@dataclass(frozen=True)
class PrepPhrase:
    prep: str
    np: "NounPhrase"


@dataclass(frozen=True)
class Pro:
    pronoun: str
    pp: Optional[PrepPhrase] = None


@dataclass(frozen=True)
class FullNP:
    det: Optional[str]
    adjectives: tuple[str, ...]
    noun: str
    pp: Optional[PrepPhrase] = None


NounPhrase = Union[Pro, FullNP]


@dataclass(frozen=True)
class ActiveTree:
    subject: NounPhrase
    modal: Optional[str]
    aux: tuple[str, ...]
    polarity: Polarity
    verb: str
    object: NounPhrase
    final_pp: Optional[PrepPhrase] = None

    def __post_init__(self):
        if len(self.aux) > 3:
            raise ValueError("at most three auxiliaries")
        if self.modal is not None and self.aux:
            raise ValueError("a modal sentence carries no auxiliary chain")
        if self.polarity is Polarity.NEGATIVE and self.modal is None and not self.aux:
            raise ValueError("a negative needs a modal or an auxiliary to carry 'not'")


@dataclass(frozen=True)
class PassiveTree:
    subject: NounPhrase
    modal: Optional[str]
    aux: tuple[str, ...]
    polarity: Polarity
    aux_tense: Optional[str]
    verb: str
    agent: NounPhrase
    final_pp: Optional[PrepPhrase] = None
    agent_marker: str = "by"

    def __post_init__(self):
        if self.agent_marker != "by":
            raise ValueError("agent marker must be 'by'")
        if len(self.aux) > 3:
            raise ValueError("at most three auxiliaries")
        if self.modal is not None and (self.aux or self.aux_tense != "be"):
            raise ValueError("a modal passive is modal + be + participle")
        if self.modal is None and not self.aux:
            raise ValueError("a passive without a modal needs a finite auxiliary")
        if self.aux_tense not in (None, "be", "being", "been"):
            raise ValueError(f"bad tense auxiliary {self.aux_tense!r}")


Tree = Union[ActiveTree, PassiveTree]


@dataclass(frozen=True)
class ConversionResult:
    active_tokens: tuple[str, ...]
    active_term: str
    passive_tokens: tuple[str, ...]
    passive_term: str
    tense: Tense

    def as_json(self) -> dict:
        return {
            "activeS": list(self.active_tokens),
            "activeRe": self.active_term,
            "passiveS": list(self.passive_tokens),
            "passiveRe": self.passive_term,
            "tense": self.tense.value,
        }


def agreement_of(np: NounPhrase, lexicon) -> Agreement:
    """Number/person of a noun phrase, read off its head only."""
    if isinstance(np, Pro):
        entry = lexicon.pronoun(np.pronoun)
        if entry is None:
            raise LexiconError(f"unknown pronoun {np.pronoun!r}")
        return entry.agreement
    readings = lexicon.noun_agreements(np.noun)
    if not readings:
        raise LexiconError(f"unknown noun {np.noun!r}")
    return readings[0]


_AUX_FUNCTORS = ("aux", "aux1", "aux2")


def _pp_term(pp: PrepPhrase) -> str:
    return f"pp(pre({pp.prep}),{np_term(pp.np)})"


def np_term(np: NounPhrase) -> str:
    if isinstance(np, Pro):
        parts = [f"pro({np.pronoun})"]
    else:
        parts = []
        if np.det is not None:
            parts.append(f"det({np.det})")
        if np.adjectives:
            parts.append(f"adj([{','.join(np.adjectives)}])")
        parts.append(f"n({np.noun})")
    if np.pp is not None:
        parts.append(_pp_term(np.pp))
    return f"np({','.join(parts)})"


def to_term_string(tree: Tree) -> str:
    """Serialize a tree in the compact ``s(...)`` term notation."""
    parts = [np_term(tree.subject)]
    if tree.modal is not None:
        parts.append(f"modal({tree.modal})")
    parts.extend(f"{functor}({tok})" for functor, tok in zip(_AUX_FUNCTORS, tree.aux))
    if tree.polarity is Polarity.NEGATIVE:
        parts.append("pol(not)")
    if isinstance(tree, PassiveTree):
        if tree.aux_tense is not None:
            # after a modal the bare "be" is printed as a plain auxiliary
            functor = "aux" if tree.modal is not None else "auxTense"
            parts.append(f"{functor}({tree.aux_tense})")
        parts.append(f"v({tree.verb})")
        parts.append(f"agent({tree.agent_marker})")
        parts.append(np_term(tree.agent))
    else:
        parts.append(f"v({tree.verb})")
        parts.append(np_term(tree.object))
    if tree.final_pp is not None:
        parts.append(_pp_term(tree.final_pp))
    return f"s({','.join(parts)})"
