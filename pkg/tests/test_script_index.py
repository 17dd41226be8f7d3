"""Character-to-language index."""

from __future__ import annotations

import pytest

from abjadkit import grammars as G
from abjadkit import script_index as SI
from abjadkit import unicode_data as UD


@pytest.fixture(scope="module")
def index():
    return SI.default_index()


def test_documented_examples():
    assert SI.languages_of(0x08A0) == {"Wolof"}
    assert SI.languages_of(0x06B0) == {"Saraiki"}
    assert SI.languages_of(0xFFFF) == frozenset()
    assert 0x08A0 in SI.inventory_of("Wolof")
    assert SI.inventory_of("Klingon") == frozenset()


def test_grammar_codes_resolve_to_names(index):
    for code, name in SI.LANGUAGE_NAMES.items():
        assert index.inventory_of(code) == index.inventory_of(name)
        assert index.inventory_of(code.upper()) == index.inventory_of(name)
        assert index.inventory_of(code), code


def test_inverse_consistency(index):
    for lang in index.languages():
        inventory = index.inventory_of(lang)
        assert inventory
        for cp in inventory:
            assert lang in index.languages_of(cp)
    for entry in index.entries():
        for lang in entry.languages:
            assert entry.codepoint in index.inventory_of(lang)


def test_entries_are_named_and_tagged(index):
    for entry in index.entries():
        assert entry.languages or entry.macroareas
        assert entry.name == UD.name(entry.codepoint).lower()


def test_macroareas(index):
    assert index.macroareas_of(0x08A0) == {"West Africa"}
    assert "South Asia" in index.macroareas_of(0x06B0)


@pytest.mark.parametrize("lang", G.LANGUAGES)
def test_rule_code_points_in_inventory(index, lang):
    inventory = index.inventory_of(lang)
    for op in ("visual", "reading"):
        for rule in G.load_rules(op, lang):
            for cp in rule.source + rule.target:
                assert cp in inventory, (op, lang, hex(cp))


@pytest.mark.parametrize("text,message", [
    ("0627\talef\tUrdu\n", "4 tab-separated"),
    ("XYZ\tx\tUrdu\tSouth Asia\n", "bad code point"),
    ("0627\talef\t\t\n", "no languages"),
    ("0627\talef\tUrdu\t\n0627\talef\tFarsi\t\n", "duplicate"),
])
def test_format_errors(text, message):
    with pytest.raises(SI.IndexFormatError, match=message):
        SI.parse_index(text)


def test_custom_index():
    idx = SI.ScriptIndex.from_text("# c\n0628\tbeh\tA,B\tX\n067E\tpeh\tB\t\n")
    assert idx.languages() == ["A", "B"]
    assert idx.inventory_of("B") == {0x0628, 0x067E}
    assert idx.macroareas_of(0x067E) == frozenset()
