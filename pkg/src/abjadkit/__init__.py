"""Finite-state normalization, romanization and transliteration for Perso-Arabic scripts."""

from .fst import Fst, apply
from .grammars import (
    LANGUAGES,
    GrammarSet,
    UnknownLanguage,
    build_grammar_set,
    reading_pipeline,
    romanize,
    transliterate,
)

__all__ = [
    "Fst",
    "GrammarSet",
    "LANGUAGES",
    "UnknownLanguage",
    "apply",
    "build_grammar_set",
    "reading_pipeline",
    "romanize",
    "transliterate",
]
__version__ = "0.1.0"
