"""Token and type change rates of a normalizer over a word-frequency list."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable


class WordlistError(ValueError):
    pass


@dataclass(frozen=True)
class CorpusStats:
    tokens_total: int
    tokens_changed: int
    types_total: int
    types_changed: int

    def __post_init__(self):
        if not (0 <= self.tokens_changed <= self.tokens_total and 0 <= self.types_changed <= self.types_total):
            raise ValueError("changed counts must lie between zero and the totals")

    @property
    def pct_tokens(self) -> float:
        return 100.0 * self.tokens_changed / self.tokens_total if self.tokens_total else 0.0

    @property
    def pct_types(self) -> float:
        return 100.0 * self.types_changed / self.types_total if self.types_total else 0.0


def parse_wordlist(lines: Iterable[str]) -> list[tuple[str, int]]:
    """Parse ``word<TAB>frequency`` lines; repeated words accumulate."""
    counts: dict[str, int] = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        cols = line.split("\t")
        if len(cols) != 2 or not cols[0]:
            raise WordlistError(f"line {lineno}: expected word<TAB>frequency")
        try:
            freq = int(cols[1])
        except ValueError:
            raise WordlistError(f"line {lineno}: frequency {cols[1]!r} is not an integer") from None
        if freq < 0:
            raise WordlistError(f"line {lineno}: negative frequency")
        counts[cols[0]] = counts.get(cols[0], 0) + freq
    return list(counts.items())


def read_wordlist(path) -> list[tuple[str, int]]:
    with open(path, encoding="utf-8") as fh:
        return parse_wordlist(fh)


def corpus_stats(words: Iterable[tuple[str, int]], normalize: Callable[[str], str]) -> CorpusStats:
    tokens_total = tokens_changed = types_total = types_changed = 0
    for word, freq in words:
        types_total += 1
        tokens_total += freq
        if normalize(word) != word:
            types_changed += 1
            tokens_changed += freq
    return CorpusStats(tokens_total, tokens_changed, types_total, types_changed)
