"""Rule-file parsing and properties of the shipped grammars."""

from __future__ import annotations

import itertools

import pytest

from abjadkit import fst as F
from abjadkit import grammars as G
from abjadkit import rewrite as R

from fixtures import READING_CASES, VISUAL_COMMON_CASES
from support import h, random_strings, u

# Letters and marks touched by the shipped rules, plus neutral fillers.
PROBE_ALPHABET = (0x20, 0x61, 0x0627, 0x0622, 0x0628, 0x0631, 0x0615, 0x0643, 0x0647, 0x0648,
                  0x0649, 0x064A, 0x064F, 0x0650, 0x0651, 0x0653, 0x0654, 0x0619, 0x0670, 0x06CC)


def all_grammars(g: G.GrammarSet) -> dict[str, F.Fst]:
    named = {"N": g.nfc, "V_c": g.visual_common, "M": g.romanizer, "M_c": g.romap, "T": g.transliterator}
    for lang in g.languages:
        named[f"V[{lang}]"] = g.visual[lang]
        named[f"R[{lang}]"] = g.reading[lang]
    return named


# -- language codes and rule files ---------------------------------------------

def test_language_codes():
    assert G.LANGUAGES == ("azb", "bal", "ckb", "fa", "ks", "ms", "pa", "ps", "sd", "ug", "ur")
    assert G.canonical_language("UR") == "ur"
    assert G.canonical_language(" Ckb ") == "ckb"
    with pytest.raises(G.UnknownLanguage):
        G.canonical_language("zz")
    with pytest.raises(G.UnknownLanguage):
        G.build_reading("ar")


def test_parse_rules_fields():
    text = "# header\n\nFINAL\t0649\t06CC\tmaksura\nANY\t064A\t06CC\tyeh [unconditional]\nANY\t0647 0654\t\tdrop\n"
    rules = G.parse_rules(text)
    assert [r.position for r in rules] == [R.Position.FINAL, R.Position.ANY, R.Position.ANY]
    assert rules[0].source == (0x0649,) and rules[0].target == (0x06CC,)
    assert [r.unconditional for r in rules] == [False, True, False]
    assert rules[2].source == (0x0647, 0x0654) and rules[2].target == ()


@pytest.mark.parametrize("line,error", [
    ("SOMEWHERE\t0649\t06CC\tx", G.RuleFileError),
    ("ANY\t06ZZ\t06CC\tx", G.RuleFileError),
    ("ANY\t0649", G.RuleFileError),
    ("ANY\t\t06CC\tx", R.EmptySource),
])
def test_parse_rules_errors(line, error):
    with pytest.raises(error):
        G.parse_rules(line + "\n", "bad.tsv")


def test_parse_romanization():
    assert G.parse_romanization("# c\n06C8\tü\talalc\n0628\tb\n") == [(0x06C8, "ü"), (0x0628, "b")]
    with pytest.raises(G.RuleFileError):
        G.parse_romanization("06C8\n")
    with pytest.raises(G.RuleFileError):
        G.parse_romanization("XYZ\tq\n")


def test_shipped_rule_files_load():
    assert G.load_rules("visual")
    for lang in G.LANGUAGES:
        G.load_rules("visual", lang)
        G.load_rules("reading", lang)
    table = G.load_romanization()
    assert len(table) >= 40
    assert len({cp for cp, _ in table}) == len(table)
    assert len({latin for _, latin in table}) == len(table)


def test_identity_reading_languages_have_no_rules():
    for lang in G.IDENTITY_READING:
        assert G.load_rules("reading", lang) == []


# -- structure ---------------------------------------------------------------

def test_grammar_set_structure(grammars):
    assert set(grammars.visual) == set(G.LANGUAGES) == set(grammars.reading)
    for lang in ("azb", "ms"):
        assert grammars.reading[lang] == R.identity_fst()
    assert grammars.transliterator == F.invert(grammars.romap)
    assert grammars.visual_for("UR") is grammars.visual["ur"]


def test_visual_is_composition_of_parts(grammars):
    parts = F.compose(F.compose(grammars.nfc, grammars.visual_common), G.build_visual_language("ur"))
    assert F.optimize(parts) == grammars.visual["ur"]


def test_romanizer_is_composition_of_parts(grammars):
    parts = F.compose(F.compose(grammars.nfc, grammars.visual_common), grammars.romap)
    for s in random_strings(PROBE_ALPHABET, 300, seed=31, max_len=8):
        try:
            want = F.apply(s, [parts])
        except F.RewriteFailed:
            with pytest.raises(F.RewriteFailed):
                F.apply(s, [grammars.romanizer])
            continue
        assert F.apply(s, [grammars.romanizer]) == want, h(s)


def test_grammars_use_byte_labels_only(grammars):
    for name, fst in all_grammars(grammars).items():
        fst.validate(max_label=F.MAX_BYTE_LABEL)
        assert not fst.is_empty(), name


@pytest.mark.parametrize("name", ["N", "V_c", "M", "M_c", "T"] + [f"{k}[{lang}]" for lang in G.LANGUAGES for k in "VR"])
def test_functional_on_short_inputs(grammars, name):
    fst = all_grammars(grammars)[name]
    for n in range(4):
        for combo in itertools.product(PROBE_ALPHABET, repeat=n):
            s = "".join(map(chr, combo))
            outs = F.transduce(fst, s)
            assert len(outs) <= 1, (name, h(s), outs)
            if not name.startswith(("M", "T")):
                assert len(outs) == 1, (name, h(s))


# -- behaviour -----------------------------------------------------------------

@pytest.mark.parametrize("source,expected", VISUAL_COMMON_CASES)
def test_visual_common(grammars, source, expected):
    assert F.apply(u(source), [grammars.visual_common]) == u(expected)


@pytest.mark.parametrize("lang,source,expected", [
    ("ur", "0631 0615", "0691"),
    ("ur", "0628 0631 0615", "0628 0691"),
    ("ur", "0647", "06C1"),
    ("fa", "0061 0062 0063", "0061 0062 0063"),
    ("fa", "0627 0653", "0622"),
    ("ur", "0648 064F", "06C7"),
])
def test_visual_examples(grammars, lang, source, expected):
    assert F.apply(u(source), [grammars.visual[lang]]) == u(expected)


@pytest.mark.parametrize("lang,source,expected", [
    ("ur", "064A", "06CC"),
    ("sd", "06CC", "064A"),
    ("ckb", "06AA", "06A9"),
    ("fa", "0645 0624 0633 0633 0647", "0645 0648 0633 0633 0647"),
])
def test_reading_examples(grammars, lang, source, expected):
    assert F.apply(u(source), [grammars.reading[lang]]) == u(expected)


@pytest.mark.parametrize("case", READING_CASES, ids=lambda c: f"{c.lang}-{c.note}")
def test_reading_pipeline_fixtures(grammars, case):
    assert G.reading_pipeline(case.lang, u(case.source), grammars) == u(case.expected)


def test_reading_identity_languages(grammars):
    for s in random_strings(PROBE_ALPHABET, 200, seed=32, max_len=8):
        for lang in ("azb", "ms"):
            assert F.apply(s, [grammars.reading[lang]]) == s


def test_pipeline_on_ascii(grammars):
    assert G.reading_pipeline("ur", "abc", grammars) == "abc"


def test_unconditional_rules_leave_no_source(grammars):
    checked = 0
    for lang in G.LANGUAGES:
        sources = {r.source for r in G.load_rules("reading", lang) if r.unconditional}
        if not sources:
            continue
        alphabet = list(PROBE_ALPHABET) + [cp for src in sources for cp in src]
        for s in random_strings(alphabet, 500, seed=33, max_len=10):
            out = G.reading_pipeline(lang, s, grammars)
            for src in sources:
                assert "".join(map(chr, src)) not in out, (lang, h(s), h(out))
        checked += 1
    assert checked >= 6


def test_non_arabic_text_untouched(grammars):
    alphabet = [chr(c) for c in (0x41, 0x7A, 0xE9, 0x3B1, 0x416, 0x4E2D, 0x5D0, 0x20, 0x2014, 0x1F600)]
    named = {k: v for k, v in all_grammars(grammars).items() if k not in ("M", "M_c", "T")}
    for s in random_strings(alphabet, 200, seed=34, max_len=12):
        for name, fst in named.items():
            assert F.apply(s, [fst]) == s, name


def test_romanization(grammars):
    assert G.romanize("ۈ", grammars) == "ü"
    assert G.transliterate("ü", grammars) == "ۈ"
    assert G.romanize("", grammars) == ""
    assert G.transliterate("", grammars) == ""
    # Digits and punctuation pass through both directions.
    assert G.romanize("12, 3", grammars) == "12, 3"
