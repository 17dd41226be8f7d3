"""Command-line behaviour, run in-process against freshly built archives."""

from __future__ import annotations

import io
import subprocess
import sys

import pytest

from abjadkit import cli, far
from abjadkit import grammars as G

from fixtures import READING_CASES
from support import h, u


@pytest.fixture
def run(capsys):
    def invoke(*argv, stdin: str | None = None):
        capsys.readouterr()
        if stdin is not None:
            old = sys.stdin
            sys.stdin = io.StringIO(stdin)
        try:
            code = cli.main(list(argv))
        finally:
            if stdin is not None:
                sys.stdin = old
        out = capsys.readouterr()
        return code, out.out, out.err
    return invoke


@pytest.fixture
def grm(archive_dir):
    return ["--visual_grm", str(archive_dir / cli.VISUAL_FAR), "--reading_grm", str(archive_dir / cli.READING_FAR)]


def test_build_writes_all_archives(archive_dir):
    names = sorted(p.name for p in archive_dir.iterdir())
    assert names == sorted([cli.VISUAL_FAR, cli.READING_FAR, cli.NFC_FAR, cli.ROMAN_FAR, cli.TRANSLIT_FAR])
    assert far.far_keys(archive_dir / cli.VISUAL_FAR) == sorted(code.upper() for code in G.LANGUAGES)
    assert far.far_keys(archive_dir / cli.READING_FAR) == sorted(code.upper() for code in G.LANGUAGES)
    assert far.far_keys(archive_dir / cli.NFC_FAR) == ["NFC", "VISUAL_COMMON"]


def test_build_reports_sizes_and_figure(run, tmp_path, grammars):
    figure = tmp_path / "sizes.png"
    code, out, _ = run("build", "--out", str(tmp_path / "g"), "--figure", str(figure))
    assert code == 0
    rows = [line.split("\t") for line in out.strip().splitlines()]
    assert rows[0] == ["archive", "key", "states", "arcs"]
    ur = [r for r in rows if r[:2] == [cli.VISUAL_FAR, "UR"]]
    assert ur and int(ur[0][2]) == grammars.visual["ur"].num_states
    assert figure.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_build_unwritable_target(run, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code, _, err = run("build", "--out", str(blocker / "sub"))
    assert code != 0
    assert "error:" in err


def test_normalize_golden(run, grm):
    code, out, _ = run("normalize", "--lang", "PA", "--input", u("06A9 0626 064A"), *grm)
    assert code == 0
    assert out == "> " + u("06A9 0626 06CC") + "\n"
    code, out, _ = run("normalize", "--lang", "UR", "--input", "abc", *grm)
    assert (code, out) == (0, "> abc\n")


def test_normalize_hex_and_stdin(run, grm):
    code, out, _ = run("normalize", "--lang", "ur", "--hex", *grm, stdin=u("0647") + "\n" + u("064A") + "\n")
    assert code == 0
    assert out.splitlines() == ["> 06C1", "> 06CC"]


@pytest.mark.parametrize("case", READING_CASES, ids=lambda c: f"{c.lang}-{c.note}")
def test_normalize_matches_library(run, grm, grammars, case):
    code, out, _ = run("normalize", "--lang", case.lang.upper(), "--input", u(case.source), "--hex", *grm)
    assert code == 0
    assert out.strip() == "> " + h(G.reading_pipeline(case.lang, u(case.source), grammars))


def test_normalize_without_archives(run):
    code, out, _ = run("normalize", "--lang", "ckb", "--input", u("06AA"), "--hex")
    assert (code, out.strip()) == (0, "> 06A9")


def test_unknown_language(run, grm):
    code, _, err = run("normalize", "--lang", "ZZ", "--input", "x", *grm)
    assert code == cli.EXIT_UNKNOWN_LANGUAGE == 2
    assert "ZZ" in err


def test_missing_archive(run, tmp_path):
    code, _, err = run("normalize", "--lang", "ur", "--input", "x", "--visual_grm", str(tmp_path / "none.far"),
                       "--reading_grm", str(tmp_path / "none.far"))
    assert code == cli.EXIT_ERROR
    assert "cannot read" in err


def test_romanize_and_translit(run, archive_dir):
    roman = str(archive_dir / cli.ROMAN_FAR)
    translit = str(archive_dir / cli.TRANSLIT_FAR)
    assert run("romanize", "--input", u("06C8"), "--grm", roman)[:2] == (0, "ü\n")
    assert run("translit", "--input", "ü", "--grm", translit, "--hex")[:2] == (0, "06C8\n")
    assert run("romanize", "--input", "", "--grm", roman)[:2] == (0, "\n")
    assert run("romanize", "--input", u("06C8"))[:2] == (0, "ü\n")


def test_rewrite_failure_exit_code(run, archive_dir):
    # An Arabic letter with a table entry has no transliteration source.
    code, _, err = run("translit", "--input", u("0628"), "--grm", str(archive_dir / cli.TRANSLIT_FAR))
    assert code == cli.EXIT_REWRITE_FAILED == 3
    assert "Error for string" in err


def _wordlist(path, rows):
    path.write_text("".join(f"{w}\t{n}\n" for w, n in rows), encoding="utf-8")
    return str(path)


def _stats(run, grm, path, *extra):
    code, out, err = run("stats", "--lang", "ur", "--wordlist", path, *grm, *extra)
    lines = [line.split("\t") for line in out.strip().splitlines()]
    return code, lines, err


def test_stats_table(run, grm, tmp_path):
    rows = [("abc", 1), (u("0628 0627"), 1), (u("062A"), 1), (u("0647"), 1)]
    code, lines, _ = _stats(run, grm, _wordlist(tmp_path / "w.tsv", rows))
    assert code == 0
    assert lines[0] == ["lang", "stage", "tokens_total", "tokens_changed", "types_total",
                        "types_changed", "pct_tokens", "pct_types"]
    assert lines[1] == ["ur", "V", "4", "1", "4", "1", "25.00", "25.00"]
    assert lines[2] == ["ur", "V+R", "4", "1", "4", "1", "25.00", "25.00"]


def test_stats_reading_stage_counts_separately(run, grm, tmp_path):
    rows = [(u("064A"), 3), (u("0628"), 1)]
    code, lines, _ = _stats(run, grm, _wordlist(tmp_path / "w.tsv", rows))
    assert code == 0
    assert lines[1][2:] == ["4", "0", "2", "0", "0.00", "0.00"]
    assert lines[2][2:] == ["4", "3", "2", "1", "75.00", "50.00"]


def test_stats_doubled_wordlist(run, grm, tmp_path):
    rows = [("abc", 2), (u("0647"), 1), (u("064A 0628"), 5)]
    _, once, _ = _stats(run, grm, _wordlist(tmp_path / "once.tsv", rows))
    _, twice, _ = _stats(run, grm, _wordlist(tmp_path / "twice.tsv", rows + rows))
    for a, b in zip(once[1:], twice[1:]):
        assert int(b[2]) == 2 * int(a[2]) and int(b[3]) == 2 * int(a[3])
        assert b[6:] == a[6:]


def test_stats_figure(run, grm, tmp_path):
    figure = tmp_path / "rates.png"
    code, _, _ = _stats(run, grm, _wordlist(tmp_path / "w.tsv", [("abc", 1)]), "--figure", str(figure))
    assert code == 0
    assert figure.read_bytes()[:4] == b"\x89PNG"


@pytest.mark.parametrize("content", ["word\n", "word\tmany\n", "word\t-1\n", "\t3\n", "a\t1\t2\n"])
def test_stats_malformed_wordlist(run, grm, tmp_path, content):
    path = tmp_path / "bad.tsv"
    path.write_text(content, encoding="utf-8")
    code, _, err = _stats(run, grm, str(path))
    assert code == cli.EXIT_BAD_WORDLIST == 4
    assert "bad.tsv" in err


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "abjadkit.cli", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    for sub in ("build", "normalize", "romanize", "translit", "stats"):
        assert sub in proc.stdout
