import itertools

from activepassive.pipeline import Bounds, enumerate_trees
from activepassive.realizer import realize_active, realize_passive
from activepassive.syntax import ActiveTree, FullNP, PassiveTree, Polarity, PrepPhrase, Pro
from activepassive.transform import passivize

POS, NEG = Polarity.POSITIVE, Polarity.NEGATIVE
APPLE = FullNP("an", (), "apple")


def test_realize_active():
    tree = ActiveTree(Pro("he"), None, (), POS, "buys", APPLE)
    assert realize_active(tree) == ["he", "buys", "an", "apple"]
    tree = ActiveTree(Pro("he"), "should", (), NEG, "buy", FullNP("a", ("small",), "apple"))
    assert realize_active(tree) == ["he", "should", "not", "buy", "a", "small", "apple"]


def test_not_follows_first_auxiliary():
    tree = ActiveTree(Pro("you"), None, ("will", "have", "been"), NEG, "loving", Pro("them"))
    assert realize_active(tree) == "you will not have been loving them".split()


def test_realize_passive():
    tree = PassiveTree(APPLE, None, ("is",), POS, None, "bought", Pro("him"))
    assert realize_passive(tree) == ["an", "apple", "is", "bought", "by", "him"]

    table = FullNP("the", ("big", "beautiful"), "table")
    subject = FullNP("a", ("small",), "apple", PrepPhrase("on", table))
    tree = PassiveTree(subject, None, ("has",), POS, "been", "bought",
                       FullNP("a", ("beautiful",), "woman"))
    assert realize_passive(tree) == (
        "a small apple on the big beautiful table has been bought by a beautiful woman".split()
    )

    tree = PassiveTree(APPLE, None, ("will", "be"), POS, "being", "bought", Pro("him"))
    assert realize_passive(tree) == "an apple will be being bought by him".split()


def test_final_pp_comes_last():
    pp = PrepPhrase("to", FullNP("the", (), "class"))
    tree = PassiveTree(FullNP("a", (), "pen"), "should", (), POS, "be", "brought",
                       FullNP("the", (), "boy"), final_pp=pp)
    assert realize_passive(tree) == "a pen should be brought by the boy to the class".split()


def _count_by(np):
    if np is None:
        return 0
    if isinstance(np, PrepPhrase):
        return (np.prep == "by") + _count_by(np.np)
    return _count_by(np.pp)


def test_output_shape_over_enumeration(lex):
    bounds = Bounds(max_adjectives=2, max_pp_depth=1)
    for active, tense in itertools.islice(enumerate_trees(lex, bounds), 800):
        passive = passivize(active, tense, lex)
        for tokens in (realize_active(active), realize_passive(passive)):
            assert all(t and t == t.lower() and t.isalpha() for t in tokens)
        inner = _count_by(passive.subject) + _count_by(passive.agent) + _count_by(passive.final_pp)
        assert realize_passive(passive).count("by") == inner + 1
