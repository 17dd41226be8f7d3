"""Command-line interface: build archives, normalize, romanize, transliterate, corpus stats."""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import far
from . import fst as F
from . import grammars as G
from .corpus import WordlistError, corpus_stats, read_wordlist

EXIT_ERROR = 1
EXIT_UNKNOWN_LANGUAGE = 2
EXIT_REWRITE_FAILED = 3
EXIT_BAD_WORDLIST = 4

VISUAL_FAR = "visual.far"
READING_FAR = "reading.far"
NFC_FAR = "nfc.far"
ROMAN_FAR = "roman.far"
TRANSLIT_FAR = "translit.far"


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_ERROR):
        super().__init__(message)
        self.code = code


def to_hex(text: str) -> str:
    return " ".join(f"{ord(c):04X}" for c in text)


def _inputs(args) -> list[str]:
    if args.input is not None:
        return [args.input]
    return [line.rstrip("\r\n") for line in sys.stdin]


def _show(text: str, as_hex: bool) -> str:
    return to_hex(text) if as_hex else text


def _lang_key(lang: str) -> str:
    try:
        return G.canonical_language(lang).upper()
    except G.UnknownLanguage as exc:
        raise CliError(str(exc), EXIT_UNKNOWN_LANGUAGE) from exc


def _lookup(path: str, key: str) -> F.Fst:
    try:
        return far.far_lookup(path, key)
    except far.KeyNotFound:
        raise CliError(f"{path} has no entry {key}") from None
    except (OSError, far.FarError) as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _language_grammars(args) -> tuple[F.Fst, F.Fst]:
    key = _lang_key(args.lang)
    visual = _lookup(args.visual_grm, key) if args.visual_grm else G.build_visual(key)
    reading = _lookup(args.reading_grm, key) if args.reading_grm else G.build_reading(key)
    return visual, reading


def _run(text: str, fsts) -> str:
    try:
        return F.apply(text, fsts)
    except F.RewriteFailed as exc:
        raise CliError(str(exc), EXIT_REWRITE_FAILED) from exc


# -- subcommands -------------------------------------------------------------

def cmd_build(args) -> int:
    out = args.out
    try:
        os.makedirs(out, exist_ok=True)
    except OSError as exc:
        raise CliError(f"cannot create {out}: {exc}") from exc
    g = G.default_grammars()
    archives = {
        VISUAL_FAR: {code.upper(): g.visual[code] for code in g.languages},
        READING_FAR: {code.upper(): g.reading[code] for code in g.languages},
        NFC_FAR: {"NFC": g.nfc, "VISUAL_COMMON": g.visual_common},
        ROMAN_FAR: {"ROMANIZER": g.romanizer, "ROMAP": g.romap},
        TRANSLIT_FAR: {"TRANSLIT": g.transliterator},
    }
    rows = []
    print("archive\tkey\tstates\tarcs")
    for name, entries in archives.items():
        try:
            far.far_write(os.path.join(out, name), entries)
        except OSError as exc:
            raise CliError(f"cannot write {name}: {exc}") from exc
        for key in sorted(entries):
            fst = entries[key]
            print(f"{name}\t{key}\t{fst.num_states}\t{fst.num_arcs}")
            rows.append((f"{name.split('.')[0]}:{key}", fst.num_states, fst.num_arcs))
    if args.figure:
        from .plotting import plot_grammar_sizes
        plot_grammar_sizes(rows, args.figure)
    return 0


def cmd_normalize(args) -> int:
    visual, reading = _language_grammars(args)
    for text in _inputs(args):
        print(f"> {_show(_run(text, [visual, reading]), args.hex)}")
    return 0


def cmd_romanize(args) -> int:
    fst = _lookup(args.grm, "ROMANIZER") if args.grm else G.build_romanizer()
    for text in _inputs(args):
        print(_show(_run(text, [fst]), args.hex))
    return 0


def cmd_translit(args) -> int:
    fst = _lookup(args.grm, "TRANSLIT") if args.grm else G.build_transliterator()
    for text in _inputs(args):
        print(_show(_run(text, [fst]), args.hex))
    return 0


def cmd_stats(args) -> int:
    visual, reading = _language_grammars(args)
    try:
        words = read_wordlist(args.wordlist)
    except WordlistError as exc:
        raise CliError(f"{args.wordlist}: {exc}", EXIT_BAD_WORDLIST) from exc
    except OSError as exc:
        raise CliError(f"cannot read {args.wordlist}: {exc}") from exc
    stages = {
        "V": lambda w: _run(w, [visual]),
        "V+R": lambda w: _run(w, [visual, reading]),
    }
    lang = G.canonical_language(args.lang)
    print("lang\tstage\ttokens_total\ttokens_changed\ttypes_total\ttypes_changed\tpct_tokens\tpct_types")
    rates = {}
    for stage, fn in stages.items():
        s = corpus_stats(words, fn)
        rates[stage] = (s.pct_tokens, s.pct_types)
        print(f"{lang}\t{stage}\t{s.tokens_total}\t{s.tokens_changed}\t{s.types_total}\t"
              f"{s.types_changed}\t{s.pct_tokens:.2f}\t{s.pct_types:.2f}")
    if args.figure:
        from .plotting import plot_change_rates
        plot_change_rates(rates, args.figure, title=lang)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abjadkit", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="compile all grammars into archives")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--figure", help="also plot grammar sizes to this image file")
    p.set_defaults(func=cmd_build)

    def lang_opts(p):
        p.add_argument("--lang", required=True, help="language code, any case (e.g. UR)")
        p.add_argument("--visual_grm", help="visual archive; built on the fly when omitted")
        p.add_argument("--reading_grm", help="reading archive; built on the fly when omitted")

    p = sub.add_parser("normalize", help="visual plus reading normalization")
    p.add_argument("--input", help="string to normalize; stdin lines when omitted")
    lang_opts(p)
    p.add_argument("--hex", action="store_true", help="print code points instead of text")
    p.set_defaults(func=cmd_normalize)

    for name, func, default in (("romanize", cmd_romanize, ROMAN_FAR), ("translit", cmd_translit, TRANSLIT_FAR)):
        p = sub.add_parser(name, help=f"{name} a string")
        p.add_argument("--input", help="string to convert; stdin lines when omitted")
        p.add_argument("--grm", help=f"archive such as {default}; built on the fly when omitted")
        p.add_argument("--hex", action="store_true", help="print code points instead of text")
        p.set_defaults(func=func)

    p = sub.add_parser("stats", help="token/type change rates over a word-frequency list")
    p.add_argument("--wordlist", required=True, help="file of word<TAB>frequency lines")
    lang_opts(p)
    p.add_argument("--figure", help="also plot the change rates to this image file")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
