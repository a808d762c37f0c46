"""Hand-built oracles, independent of the package's own tables.

Conjugation rows are written out literally.  ``V0`` base, ``V3`` third
person singular, ``VD`` past, ``VN`` past participle, ``VG`` present
participle.
"""

ACTIVE_ROWS = {
    # tense: (singular, plural, first_singular) positive; negatives below
    "simple_present": ("V3", "V0", "V0"),
    "simple_past": ("VD", "VD", "VD"),
    "simple_future": ("will V0", "will V0", "will V0"),
    "continuous_past": ("was VG", "were VG", "was VG"),
    "continuous_present": ("is VG", "are VG", "am VG"),
    "continuous_future": ("will be VG", "will be VG", "will be VG"),
    "perfect_past": ("had VN", "had VN", "had VN"),
    "perfect_present": ("has VN", "have VN", "have VN"),
    "perfect_future": ("will have VN", "will have VN", "will have VN"),
    "perfect_continuous_past": ("had been VG", "had been VG", "had been VG"),
    "perfect_continuous_present": ("has been VG", "have been VG", "have been VG"),
    "perfect_continuous_future": ("will have been VG",) * 3,
}

ACTIVE_NEGATIVE_ROWS = {
    "simple_present": ("does not V0", "do not V0", "do not V0"),
    "simple_past": ("did not V0",) * 3,
    "simple_future": ("will not V0",) * 3,
    "continuous_past": ("was not VG", "were not VG", "was not VG"),
    "continuous_present": ("is not VG", "are not VG", "am not VG"),
    "continuous_future": ("will not be VG",) * 3,
    "perfect_past": ("had not VN",) * 3,
    "perfect_present": ("has not VN", "have not VN", "have not VN"),
    "perfect_future": ("will not have VN",) * 3,
    "perfect_continuous_past": ("had not been VG",) * 3,
    "perfect_continuous_present": ("has not been VG", "have not been VG", "have not been VG"),
    "perfect_continuous_future": ("will not have been VG",) * 3,
}

PASSIVE_ROWS = {
    "simple_present": ("is VN", "are VN", "am VN"),
    "simple_past": ("was VN", "were VN", "was VN"),
    "simple_future": ("will be VN",) * 3,
    "continuous_past": ("was being VN", "were being VN", "was being VN"),
    "continuous_present": ("is being VN", "are being VN", "am being VN"),
    "continuous_future": ("will be being VN",) * 3,
    "perfect_past": ("had been VN",) * 3,
    "perfect_present": ("has been VN", "have been VN", "have been VN"),
    "perfect_future": ("will have been VN",) * 3,
    "perfect_continuous_past": ("had been being VN",) * 3,
    "perfect_continuous_present": ("has been being VN", "have been being VN", "have been being VN"),
    "perfect_continuous_future": ("will have been being VN",) * 3,
}

AGREEMENT_COLUMN = {"singular": 0, "plural": 1, "first_singular": 2}


def conjugate(row: str, verb: dict) -> list[str]:
    return [verb.get(w, w) for w in row.split()]


def verb_slots(base, third, past, participle, ing) -> dict:
    return {"V0": base, "V3": third, "VD": past, "VN": participle, "VG": ing}


def noun_phrases(role, maxlen, dets, nouns, pronouns, adjectives, preps):
    """(tokens, agreement) for every NP of at most ``maxlen`` tokens.

    nouns: [(singular, plural)], pronouns: [(subject, object, agreement)].
    Determiner optional, any run of distinct adjectives, optional PP.
    """
    if maxlen <= 0:
        return []
    heads = []
    for subj, obj, agr in pronouns:
        heads.append(([subj if role == "subject" else obj], agr))
    runs = [[]]
    frontier = [[]]
    while frontier:
        nxt = [r + [a] for r in frontier for a in adjectives if a not in r]
        nxt = [r for r in nxt if len(r) + 1 <= maxlen]
        runs += nxt
        frontier = nxt
    for det in [None, *dets]:
        for sg, pl in nouns:
            for noun, agr in ((sg, "singular"), (pl, "plural")):
                for run in runs:
                    toks = ([det] if det else []) + run + [noun]
                    if len(toks) <= maxlen:
                        heads.append((toks, agr))
    out = []
    for toks, agr in heads:
        out.append((toks, agr))
        room = maxlen - len(toks) - 1
        for prep in preps:
            for inner, _ in noun_phrases("object", room, dets, nouns, pronouns, adjectives, preps):
                out.append((toks + [prep] + inner, agr))
    return out


def active_sentences(maxlen, dets, nouns, pronouns, adjectives, verbs, preps, modals=()):
    """Every active sentence of at most ``maxlen`` tokens, as a set of tuples."""
    args = (dets, nouns, pronouns, adjectives, preps)
    found = set()
    for subj, agr in noun_phrases("subject", maxlen - 2, *args):
        column = AGREEMENT_COLUMN[agr]
        for verb in verbs:
            slots = verb_slots(*verb)
            predicates = [conjugate(rows[t][column], slots)
                          for rows in (ACTIVE_ROWS, ACTIVE_NEGATIVE_ROWS) for t in rows]
            predicates += [[m, verb[0]] for m in modals] + [[m, "not", verb[0]] for m in modals]
            for pred in predicates:
                room = maxlen - len(subj) - len(pred)
                for obj, _ in noun_phrases("object", room, *args):
                    base = subj + pred + obj
                    found.add(tuple(base))
                    for prep in preps:
                        for tail, _ in noun_phrases("object", maxlen - len(base) - 1, *args):
                            found.add(tuple(base + [prep] + tail))
    return found


class _Probe(tuple):
    """Token tuple that notes whether anything read past its end."""

    overrun = False

    def __getitem__(self, i):
        if isinstance(i, int) and i >= len(self):
            self.overrun = True
        return tuple.__getitem__(self, i)


def accepted_by_search(accepts, alphabet, maxlen):
    """Exhaustive search for every accepted token sequence up to ``maxlen``.

    A prefix is only extended when the recognizer tried to read the token
    after it; a pure recognizer that never looks there cannot accept any
    extension, so the pruning loses nothing.
    """
    found = set()
    stack = [()]
    while stack:
        prefix = stack.pop()
        probe = _Probe(prefix)
        if accepts(probe):
            found.add(prefix)
        if probe.overrun and len(prefix) < maxlen:
            stack.extend(prefix + (tok,) for tok in alphabet)
    return found


MICRO_SOURCE = """\
det the
noun cat cats
pro he him singular
verb see sees saw seen seeing
prep on
"""

MICRO_ARGS = dict(
    dets=["the"],
    nouns=[("cat", "cats")],
    pronouns=[("he", "him", "singular")],
    adjectives=[],
    verbs=[("see", "sees", "saw", "seen", "seeing")],
    preps=["on"],
)
