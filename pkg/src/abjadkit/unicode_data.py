"""Unicode 14.0 character data for the Arabic-script blocks.

The tables live in the generated module :mod:`abjadkit._ucd`; rebuild it
with ``tools/extract_unicode.py`` rather than editing it by hand.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _ucd

UNICODE_VERSION = _ucd.UNICODE_VERSION

ARABIC_BLOCKS = (
    (0x0600, 0x06FF),
    (0x0750, 0x077F),
    (0x08A0, 0x08FF),
    (0xFB50, 0xFDFF),
    (0xFE70, 0xFEFF),
)
# Arabic Extended-B is embedded too, but it is not part of the word model.
_EMBEDDED_BLOCKS = ARABIC_BLOCKS + ((0x0870, 0x089F),)

_DECOMPOSE = {cp: rec[3] for cp, rec in _ucd.RECORDS.items() if rec[3] is not None}


@dataclass(frozen=True)
class CharRecord:
    codepoint: int
    name: str
    category: str
    ccc: int
    composition: tuple[int, int] | None
    is_arabic_letter: bool


def in_arabic_blocks(cp: int) -> bool:
    return any(lo <= cp <= hi for lo, hi in ARABIC_BLOCKS)


def record(cp: int) -> CharRecord | None:
    rec = _ucd.RECORDS.get(cp)
    if rec is None:
        return None
    name, gc, ccc, decomp = rec
    comp = decomp if decomp is not None and _ucd.COMPOSITIONS.get(decomp) == cp else None
    return CharRecord(cp, name, gc, ccc, comp, is_arabic_letter(cp))


def records() -> list[CharRecord]:
    return [record(cp) for cp in sorted(_ucd.RECORDS)]


def name(cp: int) -> str | None:
    rec = _ucd.RECORDS.get(cp)
    return rec[0] if rec else None


def ccc(cp: int) -> int:
    """Canonical combining class; 0 for code points outside the tables."""
    rec = _ucd.RECORDS.get(cp)
    return rec[2] if rec else 0


def category(cp: int) -> str | None:
    rec = _ucd.RECORDS.get(cp)
    return rec[1] if rec else None


def compose_pair(starter: int, mark: int) -> int | None:
    return _ucd.COMPOSITIONS.get((starter, mark))


def composition_pairs() -> dict[tuple[int, int], int]:
    return dict(_ucd.COMPOSITIONS)


def decomposition(cp: int) -> tuple[int, ...] | None:
    """Single-level canonical decomposition, if any."""
    return _DECOMPOSE.get(cp)


def full_decomposition(cp: int) -> tuple[int, ...]:
    d = _DECOMPOSE.get(cp)
    if d is None:
        return (cp,)
    out: tuple[int, ...] = ()
    for x in d:
        out += full_decomposition(x)
    return out


def is_arabic_letter(cp: int) -> bool:
    """True for letters (general category L*) inside the Arabic blocks."""
    if not in_arabic_blocks(cp):
        return False
    gc = category(cp)
    return gc is not None and gc.startswith("L")


def is_arabic_mark(cp: int) -> bool:
    if not in_arabic_blocks(cp):
        return False
    gc = category(cp)
    return gc is not None and gc.startswith("M")


def combining_marks() -> list[int]:
    """Arabic-block code points with a non-zero combining class."""
    return sorted(cp for cp, rec in _ucd.RECORDS.items() if rec[2] and in_arabic_blocks(cp))
