"""Which languages and regions use which Perso-Arabic code points."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from importlib import resources
from types import MappingProxyType

# Grammar language codes and the names used in the index.
LANGUAGE_NAMES = MappingProxyType({
    "azb": "South Azerbaijani",
    "bal": "Balochi",
    "ckb": "Central Kurdish",
    "fa": "Persian",
    "ks": "Kashmiri",
    "ms": "Malay",
    "pa": "Punjabi",
    "ps": "Pashto",
    "sd": "Sindhi",
    "ug": "Uyghur",
    "ur": "Urdu",
})


class IndexFormatError(ValueError):
    pass


@dataclass(frozen=True)
class CharLangEntry:
    codepoint: int
    name: str
    languages: frozenset[str]
    macroareas: frozenset[str]


def _split(field: str) -> frozenset[str]:
    return frozenset(x.strip() for x in field.split(",") if x.strip())


def parse_index(text: str) -> dict[int, CharLangEntry]:
    entries: dict[int, CharLangEntry] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 4:
            raise IndexFormatError(f"line {lineno}: expected 4 tab-separated columns")
        try:
            cp = int(cols[0], 16)
        except ValueError:
            raise IndexFormatError(f"line {lineno}: bad code point {cols[0]!r}") from None
        entry = CharLangEntry(cp, cols[1].strip(), _split(cols[2]), _split(cols[3]))
        if not entry.languages and not entry.macroareas:
            raise IndexFormatError(f"line {lineno}: no languages or macroareas")
        if cp in entries:
            raise IndexFormatError(f"line {lineno}: duplicate code point {cp:04X}")
        entries[cp] = entry
    return entries


class ScriptIndex:
    def __init__(self, entries: dict[int, CharLangEntry]):
        self._entries = dict(entries)
        by_lang: dict[str, set[int]] = {}
        for cp, entry in self._entries.items():
            for lang in entry.languages:
                by_lang.setdefault(lang, set()).add(cp)
        self._by_lang = {k: frozenset(v) for k, v in by_lang.items()}

    @classmethod
    def from_text(cls, text: str) -> "ScriptIndex":
        return cls(parse_index(text))

    def entry(self, cp: int) -> CharLangEntry | None:
        return self._entries.get(cp)

    def entries(self) -> list[CharLangEntry]:
        return [self._entries[cp] for cp in sorted(self._entries)]

    def languages(self) -> list[str]:
        return sorted(self._by_lang)

    def languages_of(self, cp: int) -> frozenset[str]:
        entry = self._entries.get(cp)
        return entry.languages if entry else frozenset()

    def macroareas_of(self, cp: int) -> frozenset[str]:
        entry = self._entries.get(cp)
        return entry.macroareas if entry else frozenset()

    def inventory_of(self, lang: str) -> frozenset[int]:
        """Code points listed for a language, given by name or grammar code."""
        name = LANGUAGE_NAMES.get(lang.lower(), lang)
        return self._by_lang.get(name, frozenset())


@functools.lru_cache(maxsize=1)
def default_index() -> ScriptIndex:
    text = resources.files("abjadkit").joinpath("data").joinpath("char_lang_index.tsv").read_text(encoding="utf-8")
    return ScriptIndex.from_text(text)


def languages_of(cp: int) -> frozenset[str]:
    return default_index().languages_of(cp)


def inventory_of(lang: str) -> frozenset[int]:
    return default_index().inventory_of(lang)
