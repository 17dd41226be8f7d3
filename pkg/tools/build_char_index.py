"""Regenerate src/abjadkit/data/char_lang_index.tsv from the seed inventories below."""

from __future__ import annotations

import pathlib

from abjadkit import unicode_data as U

AREAS = {
    "South Azerbaijani": "Middle East",
    "Balochi": "South Asia,Middle East",
    "Central Kurdish": "Middle East",
    "Persian": "Middle East,Central Asia",
    "Kashmiri": "South Asia",
    "Malay": "Southeast Asia",
    "Punjabi": "South Asia",
    "Pashto": "South Asia,Central Asia",
    "Sindhi": "South Asia",
    "Uyghur": "Central Asia",
    "Urdu": "South Asia",
    "Wolof": "West Africa",
    "Saraiki": "South Asia",
}


def span(lo: int, hi: int) -> set[int]:
    return set(range(lo, hi + 1))


HARAKAT = span(0x064B, 0x0652)
ARABIC_CORE = {0x0621, 0x0627} | span(0x0628, 0x063A) - {0x0629} | span(0x0641, 0x064A)
PERSIAN_EXTRA = {0x0622, 0x0623, 0x0624, 0x0626, 0x067E, 0x0686, 0x0698, 0x06A9, 0x06AF, 0x06CC}
URDU_EXTRA = PERSIAN_EXTRA | {0x0679, 0x0688, 0x0691, 0x06BA, 0x06BE, 0x06C1, 0x06C2, 0x06C3, 0x06D2, 0x06D3}

INVENTORIES = {
    "South Azerbaijani": ARABIC_CORE | PERSIAN_EXTRA | HARAKAT | {0x06C6, 0x06C7, 0x06C8, 0x06CB},
    "Balochi": ARABIC_CORE | PERSIAN_EXTRA | {0x0629, 0x0679, 0x0688, 0x0691, 0x06D2, 0x06D4},
    "Central Kurdish": ARABIC_CORE | PERSIAN_EXTRA | {0x0695, 0x06A4, 0x06AA, 0x06B5, 0x06BE, 0x06C6, 0x06CE, 0x06D5},
    "Persian": ARABIC_CORE | PERSIAN_EXTRA | HARAKAT | {0x0629, 0x0670},
    "Kashmiri": ARABIC_CORE | URDU_EXTRA | {0x0620, 0x06CD, 0x06C4, 0x06C5, 0x06C6, 0x065F, 0x0654},
    "Malay": ARABIC_CORE | {0x0622, 0x0623, 0x0624, 0x0625, 0x0626, 0x0629, 0x0686, 0x06A0, 0x06A4, 0x06A9, 0x06AC, 0x06AF, 0x06BD, 0x06CC, 0x06CF},
    "Punjabi": ARABIC_CORE | URDU_EXTRA | HARAKAT | {0x0670, 0x06BB, 0x0768},
    "Pashto": ARABIC_CORE | PERSIAN_EXTRA | {0x067C, 0x0681, 0x0685, 0x0689, 0x0693, 0x0696, 0x069A, 0x06AB, 0x06BC, 0x06CD, 0x06D0},
    "Sindhi": ARABIC_CORE | {0x0622, 0x0624, 0x0626, 0x067A, 0x067B, 0x067D, 0x067E, 0x067F, 0x0680, 0x0683, 0x0684,
                             0x0686, 0x0687, 0x068A, 0x068C, 0x068D, 0x068E, 0x068F, 0x0699, 0x06A6, 0x06AA, 0x06AF,
                             0x06B1, 0x06B3, 0x06BB, 0x06BE, 0x06C1, 0x06CC},
    "Uyghur": {0x0626, 0x0627, 0x0628, 0x067E, 0x062A, 0x062C, 0x0686, 0x062E, 0x062F, 0x0631, 0x0632, 0x0698, 0x0633,
               0x0634, 0x063A, 0x0641, 0x0642, 0x0643, 0x06AF, 0x06AD, 0x0644, 0x0645, 0x0646, 0x06BE, 0x0648, 0x06C7,
               0x06C6, 0x06C8, 0x06CB, 0x06D0, 0x0649, 0x064A, 0x06D5, 0x06CC},
    "Urdu": ARABIC_CORE | URDU_EXTRA | HARAKAT | {0x0629, 0x0615, 0x0670},
    "Wolof": {0x08A0},
    "Saraiki": {0x06B0},
}
# The shared visual rules touch these everywhere.
COMMON_RULE_CHARS = {0x0647, 0x0648, 0x064F, 0x0619, 0x0654, 0x06C0, 0x06C7}
for lang in INVENTORIES:
    if lang not in ("Wolof", "Saraiki"):
        INVENTORIES[lang] |= COMMON_RULE_CHARS


def main() -> None:
    rows: dict[int, set[str]] = {}
    for lang, cps in INVENTORIES.items():
        for cp in cps:
            rows.setdefault(cp, set()).add(lang)
    out = ["# code point\tname\tlanguages\tmacroareas"]
    for cp in sorted(rows):
        langs = sorted(rows[cp])
        areas = sorted({a for l in langs for a in AREAS[l].split(",")})
        out.append(f"{cp:04X}\t{U.name(cp)}\t{','.join(langs)}\t{','.join(areas)}")
    path = pathlib.Path(__file__).resolve().parents[1] / "src/abjadkit/data/char_lang_index.tsv"
    path.write_text("\n".join(out) + "\n", encoding="utf-8")
    print(f"wrote {len(rows)} rows to {path}")


if __name__ == "__main__":
    main()
