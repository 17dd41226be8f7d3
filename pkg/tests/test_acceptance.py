"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line."""

from __future__ import annotations

import itertools
import os
import subprocess
import sys
import time

import pytest

from abjadkit import cli, far
from abjadkit import fst as F
from abjadkit import grammars as G
from abjadkit import rewrite as R

from conftest import ACCEPTANCE_RESULTS
from fixtures import NFC_CASES, READING_CASES, URDU_VISUAL_CASES
from support import (BOS, EOS, TEST_ALPHABET, all_strings, brute_force_rewrite, h,
                     random_strings, reference_nfc, u)


def report(num: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_RESULTS[num] = (ok, detail)
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def mismatches(pairs):
    return [(h(s), h(got), h(want)) for s, got, want in pairs if got != want]


def test_criterion_01_nfc_fixtures(grammars):
    start = time.perf_counter()
    bad = mismatches((u(src), F.apply(u(src), [grammars.nfc]), u(want)) for src, want, _ in NFC_CASES)
    elapsed = time.perf_counter() - start
    report(1, not bad and elapsed < 1.0, f"{len(NFC_CASES) - len(bad)}/{len(NFC_CASES)} exact in {elapsed:.3f}s {bad}")


def test_criterion_02_nfc_oracle(grammars):
    start = time.perf_counter()
    total = 0
    bad = []
    for n in range(4):
        for combo in itertools.product(TEST_ALPHABET, repeat=n):
            s = "".join(map(chr, combo))
            total += 1
            got = F.apply(s, [grammars.nfc])
            if got != reference_nfc(s):
                bad.append(h(s))
    elapsed = time.perf_counter() - start
    report(2, not bad and elapsed < 300, f"{total - len(bad)}/{total} strings agree in {elapsed:.1f}s {bad[:5]}")


def test_criterion_03_urdu_visual_table(grammars):
    v = grammars.visual_for("ur")
    bad = mismatches((u(c.source), F.apply(u(c.source), [v]), u(c.expected)) for c in URDU_VISUAL_CASES)
    report(3, not bad, f"{len(URDU_VISUAL_CASES) - len(bad)}/{len(URDU_VISUAL_CASES)} position cases exact {bad}")


def test_criterion_04_reading_fixtures(grammars):
    bad = [(c.lang, *m) for c in READING_CASES
           for m in mismatches([(u(c.source), G.reading_pipeline(c.lang, u(c.source), grammars), u(c.expected))])]
    langs = sorted({c.lang for c in READING_CASES})
    report(4, not bad, f"{len(READING_CASES) - len(bad)}/{len(READING_CASES)} cases over {','.join(langs)} exact {bad}")


def _oracle_rules(symbols):
    """One representative per class of rules equal up to renaming the symbols.

    Both the compiler and the oracle treat the symbols interchangeably, so
    checking a representative checks its whole class.
    """
    sources = ["".join(p) for n in (1, 2) for p in itertools.product(symbols, repeat=n)]
    targets = ["".join(p) for n in (0, 1, 2) for p in itertools.product(symbols, repeat=n)]
    lefts = [None, BOS, *symbols]
    rights = [None, EOS, *symbols]
    perms = [str.maketrans(symbols, "".join(p)) for p in itertools.permutations(symbols)]

    def rename(rule, table):
        return tuple(x if x in (None, BOS, EOS) else x.translate(table) for x in rule)

    def key(rule):
        return tuple("" if x is None else x for x in rule)

    reps = {min((rename(r, t) for t in perms), key=key)
            for r in itertools.product(sources, targets, lefts, rights)}
    total = len(sources) * len(targets) * len(lefts) * len(rights)
    return sorted(reps, key=key), total


def test_criterion_05_rewrite_oracle():
    symbols = "abcd"
    lab = {c: ord(c) + 1 for c in symbols}
    sigma = F.label_class(lab.values())

    def ctx(c):
        if c is None:
            return None
        return F.accept_labels([R.BOUNDARY if c in (BOS, EOS) else lab[c]])

    start = time.perf_counter()
    rules, total_rules = _oracle_rules(symbols)
    inputs = list(all_strings(symbols, 6))
    bad = []
    for src, tgt, left, right in rules:
        fst = R.cdrewrite(F.cross([lab[c] for c in src], [lab[c] for c in tgt]), ctx(left), ctx(right), sigma)
        outputs: dict[str, set] = {}
        for ins, outs, _ in F.string_pairs(fst, 6):
            outputs.setdefault("".join(chr(x - 1) for x in ins), set()).add("".join(chr(x - 1) for x in outs))
        for s in inputs:
            want = brute_force_rewrite(s, src, tgt, left, right)
            if outputs.get(s) != {want}:
                bad.append((src, tgt, left, right, s, outputs.get(s), want))
                break
    elapsed = time.perf_counter() - start
    report(5, not bad and elapsed < 600,
           f"{len(rules) - len(bad)}/{len(rules)} rule classes ({total_rules} rules) x {len(inputs)} strings "
           f"agree in {elapsed:.1f}s {bad[:3]}")


def test_criterion_06_idempotence(grammars):
    strings = random_strings(TEST_ALPHABET, 10_000, seed=6, max_len=12)
    targets = {"N": grammars.nfc, "V_c": grammars.visual_common}
    for lang in grammars.languages:
        targets[f"V[{lang}]"] = grammars.visual[lang]
        targets[f"R[{lang}]"] = grammars.reading[lang]
    bad = []
    for name, fst in targets.items():
        for s in strings:
            once = F.apply(s, [fst])
            if F.apply(once, [fst]) != once:
                bad.append((name, h(s)))
    report(6, not bad, f"{len(targets)} grammars x {len(strings)} strings, {len(bad)} violations {bad[:3]}")


# Test alphabet plus spaces, ASCII and the letters the seed rules rewrite.
PIPELINE_ALPHABET = TEST_ALPHABET + (0x20, 0x61, 0x0615, 0x0619, 0x0620, 0x0629, 0x062F, 0x0633,
                                     0x0635, 0x06A9, 0x06AA, 0x06AF, 0x06C7, 0x06CD)


def test_criterion_07_pipeline_equality(grammars):
    strings = random_strings(PIPELINE_ALPHABET, 1000, seed=7, max_len=12)
    bad = []
    for lang in grammars.languages:
        v, r = grammars.visual[lang], grammars.reading[lang]
        vr = F.optimize(F.compose(v, r))
        for s in strings:
            if F.apply(s, [v, r]) != F.apply(s, [vr]):
                bad.append((lang, h(s)))
    report(7, not bad, f"{len(grammars.languages)} languages x {len(strings)} strings, {len(bad)} mismatches {bad[:3]}")


def test_criterion_08_romanization_round_trip(grammars):
    pairs = G.load_romanization()
    bad = []
    for cp, latin in pairs:
        roman = F.apply(chr(cp), [grammars.romap])
        back = F.apply(roman, [grammars.transliterator])
        if roman != latin or back != chr(cp):
            bad.append((f"{cp:04X}", roman, h(back)))
    yu = G.romanize("ۈ", grammars)
    ok = not bad and yu == "ü"
    report(8, ok, f"{len(pairs) - len(bad)}/{len(pairs)} entries round-trip; romanize(U+06C8)={yu!r} {bad[:3]}")


def test_criterion_09_archives(archive_dir, tmp_path):
    problems = []
    # Structural round trip.
    for name in (cli.VISUAL_FAR, cli.READING_FAR, cli.NFC_FAR, cli.ROMAN_FAR, cli.TRANSLIT_FAR):
        path = archive_dir / name
        entries = far.far_read(path)
        copy = tmp_path / name
        far.far_write(copy, entries)
        if copy.read_bytes() != path.read_bytes():
            problems.append(f"{name}: rewrite differs")
        again = far.far_read(copy)
        if any(again[k] != entries[k] for k in entries):
            problems.append(f"{name}: structure differs")
        for k in entries:
            if far.far_lookup(path, k) != entries[k]:
                problems.append(f"{name}:{k}: lookup differs")
    # A clean rebuild in a fresh process gives identical bytes.
    rebuilt = tmp_path / "rebuilt"
    proc = subprocess.run([sys.executable, "-m", "abjadkit.cli", "build", "--out", str(rebuilt)],
                          capture_output=True, text=True)
    if proc.returncode != 0:
        problems.append(f"rebuild failed: {proc.stderr[-300:]}")
    else:
        for name in os.listdir(archive_dir):
            if (rebuilt / name).read_bytes() != (archive_dir / name).read_bytes():
                problems.append(f"{name}: rebuild not byte-identical")
    # Damaged files raise the declared errors.
    data = (archive_dir / cli.READING_FAR).read_bytes()
    damaged = {
        "truncated": (data[: len(data) // 2], far.CorruptEntry),
        "bad magic": (b"XXXX" + data[4:], far.BadMagic),
        "version": (data[:4] + (99).to_bytes(4, "little") + data[8:], far.UnsupportedVersion),
        "flipped byte": (data[:-10] + bytes([data[-10] ^ 0xFF]) + data[-9:], far.CorruptEntry),
        "header only": (data[:6], far.CorruptEntry),
    }
    for label, (blob, err) in damaged.items():
        p = tmp_path / f"{label.replace(' ', '_')}.far"
        p.write_bytes(blob)
        try:
            far.far_read(p)
            problems.append(f"{label}: no error")
        except err:
            pass
        except Exception as exc:  # noqa: BLE001
            problems.append(f"{label}: {type(exc).__name__}")
    report(9, not problems, f"round trip, fresh rebuild and {len(damaged)} damage cases {problems}")


def test_criterion_10_cli_golden(archive_dir, tmp_path, capsys):
    capsys.readouterr()
    code = cli.main(["normalize", "--lang", "PA", "--input", u("06A9 0626 064A"),
                     "--visual_grm", str(archive_dir / cli.VISUAL_FAR),
                     "--reading_grm", str(archive_dir / cli.READING_FAR)])
    line = capsys.readouterr().out.strip()
    want = "> " + u("06A9 0626 06CC")
    wordlist = tmp_path / "four.tsv"
    # Three words untouched by Urdu normalization and one isolated heh that becomes heh goal.
    wordlist.write_text("abc\t1\n" + u("0628 0627") + "\t1\n" + u("062A") + "\t1\n" + u("0647") + "\t1\n",
                        encoding="utf-8")
    code2 = cli.main(["stats", "--lang", "ur", "--wordlist", str(wordlist),
                      "--visual_grm", str(archive_dir / cli.VISUAL_FAR),
                      "--reading_grm", str(archive_dir / cli.READING_FAR)])
    rows = [r.split("\t") for r in capsys.readouterr().out.strip().splitlines()]
    pct = {r[1]: r[6] for r in rows[1:]}
    ok = code == 0 and line == want and code2 == 0 and pct.get("V") == "25.00" and pct.get("V+R") == "25.00"
    report(10, ok, f"normalize printed {h(line[2:])!r} with prefix {line[:2]!r}; stats pct_tokens {pct}")


def test_criterion_11_non_arabic_invariance(grammars):
    strings = random_strings([chr(c) for c in range(128)], 1000, seed=11, max_len=20)
    fsts = {"N": grammars.nfc, "V_c": grammars.visual_common}
    for lang in grammars.languages:
        fsts[f"V[{lang}]"] = grammars.visual[lang]
        fsts[f"R[{lang}]"] = grammars.reading[lang]
    bad = [(name, s) for name, f in fsts.items() for s in strings if F.apply(s, [f]) != s]
    report(11, not bad, f"{len(fsts)} grammars x {len(strings)} ASCII strings, {len(bad)} changed {bad[:3]}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
