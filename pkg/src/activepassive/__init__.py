"""Active/passive voice conversion for a small English grammar fragment."""

from .errors import LexiconError
from .lexicon import Lexicon, builtin_lexicon, load_lexicon, parse_lexicon_source
from .parser import parse_active, parse_passive, tokenize
from .pipeline import Bounds, convert_from_active, convert_from_passive, enumerate_pairs
from .syntax import ActiveTree, Agreement, ConversionResult, PassiveTree, Polarity, Tense

__all__ = [
    "ActiveTree",
    "Agreement",
    "Bounds",
    "ConversionResult",
    "Lexicon",
    "LexiconError",
    "PassiveTree",
    "Polarity",
    "Tense",
    "builtin_lexicon",
    "convert_from_active",
    "convert_from_passive",
    "enumerate_pairs",
    "load_lexicon",
    "parse_active",
    "parse_lexicon_source",
    "parse_passive",
    "tokenize",
]
