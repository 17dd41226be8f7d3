"""Compiled normalization, romanization and transliteration grammars.

Every rewrite comes from the TSV rule files in ``abjadkit/data``; this module
only parses them and assembles the transducers.
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass, field
from importlib import resources
from types import MappingProxyType
from typing import Mapping

from . import fst as F
from . import nfc as _nfc
from . import rewrite as R

log = logging.getLogger(__name__)

LANGUAGES = ("azb", "bal", "ckb", "fa", "ks", "ms", "pa", "ps", "sd", "ug", "ur")
IDENTITY_READING = frozenset({"azb", "ms"})
UNCONDITIONAL_TAG = "[unconditional]"


class UnknownLanguage(ValueError):
    pass


class RuleFileError(ValueError):
    pass


def canonical_language(lang: str) -> str:
    """Lower-case language code, accepting any letter case."""
    code = lang.strip().lower()
    if code not in LANGUAGES:
        raise UnknownLanguage(f"unsupported language {lang!r}")
    return code


def _data_text(filename: str) -> str:
    return resources.files("abjadkit").joinpath("data").joinpath(filename).read_text(encoding="utf-8")


def _hex_list(field_text: str, where: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok, 16) for tok in field_text.split())
    except ValueError as exc:
        raise RuleFileError(f"{where}: bad code point list {field_text!r}") from exc


def parse_rules(text: str, name: str = "<rules>") -> list[R.RewriteRule]:
    rules = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        where = f"{name}:{lineno}"
        cols = line.split("\t")
        if len(cols) < 3:
            raise RuleFileError(f"{where}: expected position, source, target and comment")
        try:
            position = R.Position[cols[0].strip()]
        except KeyError:
            raise RuleFileError(f"{where}: unknown position {cols[0]!r}") from None
        comment = cols[3].strip() if len(cols) > 3 else ""
        source = _hex_list(cols[1], where)
        if not source:
            raise R.EmptySource(f"{where}: empty source")
        rules.append(R.RewriteRule(
            source, _hex_list(cols[2], where), position,
            comment=comment, unconditional=UNCONDITIONAL_TAG in comment,
        ))
    return rules


def parse_romanization(text: str, name: str = "romanize.tsv") -> list[tuple[int, str]]:
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) < 2 or not cols[1]:
            raise RuleFileError(f"{name}:{lineno}: expected code point and Latin string")
        (cp,) = _hex_list(cols[0], f"{name}:{lineno}") or (None,)
        pairs.append((cp, cols[1]))
    return pairs


def load_rules(op: str, lang: str | None = None) -> list[R.RewriteRule]:
    filename = f"{op}_common.tsv" if lang is None else f"{op}_{canonical_language(lang)}.tsv"
    return parse_rules(_data_text(filename), filename)


def load_romanization() -> list[tuple[int, str]]:
    return parse_romanization(_data_text("romanize.tsv"))


def _table(rules) -> F.Fst:
    return R.table_to_fst(rules) if rules else R.identity_fst()


def _chain(*fsts: F.Fst) -> F.Fst:
    out = fsts[0]
    for f in fsts[1:]:
        out = F.optimize(F.compose(out, f))
    return out


@functools.lru_cache(maxsize=None)
def build_nfc() -> F.Fst:
    return _nfc.build_nfc_fst()


@functools.lru_cache(maxsize=None)
def build_visual_common() -> F.Fst:
    return _table(load_rules("visual"))


def build_visual_language(lang: str) -> F.Fst:
    """The language-specific visual rules on their own."""
    return _table(load_rules("visual", lang))


def build_visual(lang: str) -> F.Fst:
    return _chain(build_nfc(), build_visual_common(), build_visual_language(lang))


def build_reading(lang: str) -> F.Fst:
    code = canonical_language(lang)
    if code in IDENTITY_READING:
        return R.identity_fst()
    return _table(load_rules("reading", code))


@functools.lru_cache(maxsize=None)
def build_romanization_map() -> F.Fst:
    pairs = [((cp,), [ord(ch) for ch in latin]) for cp, latin in load_romanization()]
    return R.mapping_to_fst(pairs)


def build_romanizer() -> F.Fst:
    return _chain(build_nfc(), build_visual_common(), build_romanization_map())


def build_transliterator() -> F.Fst:
    return F.invert(build_romanization_map())


@dataclass(frozen=True)
class GrammarSet:
    nfc: F.Fst
    visual_common: F.Fst
    visual: Mapping[str, F.Fst]
    reading: Mapping[str, F.Fst]
    romanizer: F.Fst
    romap: F.Fst
    transliterator: F.Fst
    languages: tuple[str, ...] = field(default=LANGUAGES)

    def visual_for(self, lang: str) -> F.Fst:
        return self.visual[canonical_language(lang)]

    def reading_for(self, lang: str) -> F.Fst:
        return self.reading[canonical_language(lang)]


def build_grammar_set(languages=LANGUAGES) -> GrammarSet:
    codes = tuple(canonical_language(l) for l in languages)
    visual, reading = {}, {}
    for code in codes:
        log.info("building grammars for %s", code)
        visual[code] = build_visual(code)
        reading[code] = build_reading(code)
    return GrammarSet(
        nfc=build_nfc(),
        visual_common=build_visual_common(),
        visual=MappingProxyType(visual),
        reading=MappingProxyType(reading),
        romanizer=build_romanizer(),
        romap=build_romanization_map(),
        transliterator=build_transliterator(),
        languages=codes,
    )


@functools.lru_cache(maxsize=1)
def default_grammars() -> GrammarSet:
    """All grammars for every supported language, built once per process."""
    return build_grammar_set()


def reading_pipeline(lang: str, text: str, grammars: GrammarSet | None = None) -> str:
    g = grammars or default_grammars()
    return F.apply(text, [g.visual_for(lang), g.reading_for(lang)])


def visual_normalize(lang: str, text: str, grammars: GrammarSet | None = None) -> str:
    g = grammars or default_grammars()
    return F.apply(text, [g.visual_for(lang)])


def romanize(text: str, grammars: GrammarSet | None = None) -> str:
    g = grammars or default_grammars()
    return F.apply(text, [g.romanizer])


def transliterate(text: str, grammars: GrammarSet | None = None) -> str:
    g = grammars or default_grammars()
    return F.apply(text, [g.transliterator])
