"""Linearize trees back into token lists."""

from __future__ import annotations

from .syntax import ActiveTree, NounPhrase, PassiveTree, Polarity, PrepPhrase, Pro


def np_tokens(np: NounPhrase) -> list[str]:
    if isinstance(np, Pro):
        out = [np.pronoun]
    else:
        out = [np.det] if np.det is not None else []
        out.extend(np.adjectives)
        out.append(np.noun)
    if np.pp is not None:
        out.extend(pp_tokens(np.pp))
    return out


def pp_tokens(pp: PrepPhrase) -> list[str]:
    return [pp.prep, *np_tokens(pp.np)]


def _auxiliaries(modal, aux, polarity) -> list[str]:
    words = ([modal] if modal is not None else []) + list(aux)
    if polarity is Polarity.NEGATIVE:
        words.insert(1, "not")
    return words


def realize_active(tree: ActiveTree) -> list[str]:
    out = np_tokens(tree.subject)
    out += _auxiliaries(tree.modal, tree.aux, tree.polarity)
    out.append(tree.verb)
    out += np_tokens(tree.object)
    if tree.final_pp is not None:
        out += pp_tokens(tree.final_pp)
    return out


def realize_passive(tree: PassiveTree) -> list[str]:
    out = np_tokens(tree.subject)
    out += _auxiliaries(tree.modal, tree.aux, tree.polarity)
    if tree.aux_tense is not None:
        out.append(tree.aux_tense)
    out += [tree.verb, tree.agent_marker]
    out += np_tokens(tree.agent)
    if tree.final_pp is not None:
        out += pp_tokens(tree.final_pp)
    return out
