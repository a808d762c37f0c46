"""The representation-level relation between active and passive trees."""

from __future__ import annotations

import dataclasses

from .errors import LexiconError
from .lexicon import (
    Lexicon,
    VerbEntry,
    active_verb_form,
    aux_chain,
    aux_tense_token,
    do_support_aux,
    finite_passive_aux,
    inflect,
    pronoun_form,
)
from .syntax import (
    ActiveTree,
    NounPhrase,
    PassiveTree,
    Polarity,
    Pro,
    Role,
    Tense,
    agreement_of,
    tense_group,
)


def swap_role(np: NounPhrase, target_role: Role, lexicon: Lexicon) -> NounPhrase:
    """Re-case a pronoun for ``target_role``; full noun phrases pass through."""
    if not isinstance(np, Pro):
        return np
    entry = lexicon.pronoun(np.pronoun)
    if entry is None:
        raise LexiconError(f"unknown pronoun {np.pronoun!r}")
    return dataclasses.replace(np, pronoun=pronoun_form(entry, target_role))


def _verb_entry(surface: str, lexicon: Lexicon) -> VerbEntry:
    readings = lexicon.verb_readings(surface)
    if not readings:
        raise LexiconError(f"unknown verb form {surface!r}")
    return readings[0][0]


def passivize(tree: ActiveTree, tense: Tense, lexicon: Lexicon) -> PassiveTree:
    subject = swap_role(tree.object, Role.SUBJECT, lexicon)
    agent = swap_role(tree.subject, Role.OBJECT, lexicon)
    agr = agreement_of(subject, lexicon)
    participle = _verb_entry(tree.verb, lexicon).past_participle

    if tree.modal is not None:
        aux, marker = (), "be"
    elif tense_group(tense) == 1:
        # do-support of a negative active disappears here
        aux, marker = (finite_passive_aux(tense, agr),), None
    else:
        aux, marker = aux_chain(tense, agr), aux_tense_token(tense)
    return PassiveTree(
        subject=subject,
        modal=tree.modal,
        aux=aux,
        polarity=tree.polarity,
        aux_tense=marker,
        verb=participle,
        agent=agent,
        final_pp=tree.final_pp,
    )


def activize(tree: PassiveTree, tense: Tense, lexicon: Lexicon) -> list[ActiveTree]:
    """Active trees for a passive one; several if the participle is shared."""
    subject = swap_role(tree.agent, Role.SUBJECT, lexicon)
    obj = swap_role(tree.subject, Role.OBJECT, lexicon)
    agr = agreement_of(subject, lexicon)
    entries = [e for e, form in lexicon.verb_readings(tree.verb) if form == "past_participle"]
    if not entries:
        raise LexiconError(f"unknown past participle {tree.verb!r}")

    negative = tree.polarity is Polarity.NEGATIVE
    if tree.modal is not None:
        aux, form = (), "base"
    elif tense_group(tense) == 1 and negative:
        aux, form = (do_support_aux(tense, agr),), "base"
    else:
        aux, form = aux_chain(tense, agr), active_verb_form(tense, agr)

    out = []
    for entry in dict.fromkeys(entries):
        out.append(
            ActiveTree(
                subject=subject,
                modal=tree.modal,
                aux=aux,
                polarity=tree.polarity,
                verb=inflect(entry, form),
                object=obj,
                final_pp=tree.final_pp,
            )
        )
    return out
