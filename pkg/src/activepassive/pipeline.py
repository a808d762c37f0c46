"""Parse, transform, realize: the whole conversion in both directions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .lexicon import (
    Lexicon,
    active_verb_form,
    aux_chain,
    builtin_lexicon,
    do_support_aux,
    inflect,
    pronoun_form,
)
from .parser import parse_active, parse_passive
from .realizer import realize_active, realize_passive
from .syntax import (
    TENSES,
    ActiveTree,
    ConversionResult,
    FullNP,
    NounPhrase,
    Polarity,
    PrepPhrase,
    Pro,
    Role,
    Tense,
    agreement_of,
    tense_group,
    to_term_string,
)
from .transform import activize, passivize


def _result(active: ActiveTree, passive, tense: Tense) -> ConversionResult:
    return ConversionResult(
        active_tokens=tuple(realize_active(active)),
        active_term=to_term_string(active),
        passive_tokens=tuple(realize_passive(passive)),
        passive_term=to_term_string(passive),
        tense=tense,
    )


def convert_from_active(
    tokens: Sequence[str], lexicon: Optional[Lexicon] = None, first_only: bool = False
) -> list[ConversionResult]:
    lexicon = lexicon or builtin_lexicon()
    results = []
    for parse in parse_active(tuple(tokens), lexicon):
        passive = passivize(parse.tree, parse.tense, lexicon)
        results.append(_result(parse.tree, passive, parse.tense))
        if first_only:
            break
    return results


def convert_from_passive(
    tokens: Sequence[str], lexicon: Optional[Lexicon] = None, first_only: bool = False
) -> list[ConversionResult]:
    lexicon = lexicon or builtin_lexicon()
    results = []
    for parse in parse_passive(tuple(tokens), lexicon):
        for active in activize(parse.tree, parse.tense, lexicon):
            results.append(_result(active, parse.tree, parse.tense))
            if first_only:
                return results
    return results


def unknown_tokens(tokens: Iterable[str], lexicon: Lexicon) -> list[str]:
    return [t for t in tokens if not lexicon.knows(t)]


# --- generate-all -----------------------------------------------------------

@dataclass(frozen=True)
class Bounds:
    max_adjectives: int = 1
    max_pp_depth: int = 0
    tenses: Optional[tuple[Tense, ...]] = None
    polarities: Optional[tuple[Polarity, ...]] = None
    modals: bool = True


class _Cached:
    """Random access into a lazily consumed iterator."""

    def __init__(self, iterable):
        self._it = iter(iterable)
        self.items: list = []
        self.exhausted = False

    def has(self, i: int) -> bool:
        while len(self.items) <= i and not self.exhausted:
            try:
                self.items.append(next(self._it))
            except StopIteration:
                self.exhausted = True
        return i < len(self.items)


def _diagonal(dims: list[_Cached]) -> Iterator[tuple]:
    """Index tuples of the product of ``dims`` by increasing index sum.

    Every dimension keeps its own order; early output touches many
    values of each dimension instead of exhausting the last one first.
    """
    if not all(d.has(0) for d in dims):
        return

    def split(total: int, k: int):
        if k == len(dims) - 1:
            if dims[k].has(total):
                yield (total,)
            return
        for i in range(total + 1):
            if not dims[k].has(i):
                break
            for rest in split(total - i, k + 1):
                yield (i, *rest)

    for total in itertools.count():
        yield from (tuple(d.items[i] for d, i in zip(dims, idx)) for idx in split(total, 0))
        if all(d.exhausted for d in dims) and total >= sum(len(d.items) - 1 for d in dims):
            return


def _noun_phrases(lexicon: Lexicon, role: Role, bounds: Bounds, depth: int) -> Iterator[NounPhrase]:
    pps: list = [None]
    if depth > 0:
        pps += list(_prep_phrases(lexicon, bounds, depth - 1))
    for pp in pps:
        for entry in lexicon.pronouns:
            yield Pro(pronoun_form(entry, role), pp)
    adjective_runs = [
        run
        for k in range(bounds.max_adjectives + 1)
        for run in itertools.permutations(lexicon.adjectives, k)
    ]
    for det in (*lexicon.determiners, None):
        for noun in (t for pair in lexicon.nouns for t in pair):
            for adjs in adjective_runs:
                for pp in pps:
                    yield FullNP(det, adjs, noun, pp)


def _prep_phrases(lexicon: Lexicon, bounds: Bounds, depth: int) -> Iterator[PrepPhrase]:
    for prep in lexicon.prepositions:
        for np in _noun_phrases(lexicon, Role.OBJECT, bounds, depth):
            yield PrepPhrase(prep, np)


def _predicate_shapes(lexicon: Lexicon, bounds: Bounds) -> list[tuple]:
    """(tense, polarity, modal) triples admitted by ``bounds``."""
    polarities = bounds.polarities or (Polarity.POSITIVE, Polarity.NEGATIVE)
    tenses = bounds.tenses or TENSES
    shapes = [(t, p, None) for t in TENSES if t in tenses for p in polarities]
    if bounds.modals and Tense.SIMPLE_PRESENT in tenses:
        shapes += [(Tense.SIMPLE_PRESENT, p, m) for m in lexicon.modals for p in polarities]
    return shapes


def _build_active(subject, entry, obj, shape, final_pp, lexicon) -> ActiveTree:
    tense, polarity, modal = shape
    agr = agreement_of(subject, lexicon)
    if modal is not None:
        aux, form = (), "base"
    elif tense_group(tense) == 1 and polarity is Polarity.NEGATIVE:
        aux, form = (do_support_aux(tense, agr),), "base"
    else:
        aux, form = aux_chain(tense, agr), active_verb_form(tense, agr)
    return ActiveTree(subject, modal, aux, polarity, inflect(entry, form), obj, final_pp)


def enumerate_trees(
    lexicon: Optional[Lexicon] = None, bounds: Bounds = Bounds()
) -> Iterator[tuple[ActiveTree, Tense]]:
    lexicon = lexicon or builtin_lexicon()
    final_pps = [None]
    if bounds.max_pp_depth > 0:
        final_pps = itertools.chain([None], _prep_phrases(lexicon, bounds, bounds.max_pp_depth - 1))
    dims = [
        _Cached(_noun_phrases(lexicon, Role.SUBJECT, bounds, bounds.max_pp_depth)),
        _Cached(lexicon.verbs),
        _Cached(_noun_phrases(lexicon, Role.OBJECT, bounds, bounds.max_pp_depth)),
        _Cached(final_pps),
    ]
    shapes = _predicate_shapes(lexicon, bounds)
    if not shapes:
        return
    # every argument choice runs through all tenses before the next one
    for subject, entry, obj, final_pp in _diagonal(dims):
        for shape in shapes:
            yield _build_active(subject, entry, obj, shape, final_pp, lexicon), shape[0]


def enumerate_pairs(
    lexicon: Optional[Lexicon] = None, bounds: Bounds = Bounds(), limit: Optional[int] = None
) -> Iterator[ConversionResult]:
    lexicon = lexicon or builtin_lexicon()
    trees = enumerate_trees(lexicon, bounds)
    for active, tense in itertools.islice(trees, limit):
        yield _result(active, passivize(active, tense, lexicon), tense)
