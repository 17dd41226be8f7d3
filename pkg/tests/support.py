"""Shared oracles and generators for the test-suite.

Nothing here imports the transducer code: the oracles are independent
re-implementations working on plain code-point lists.
"""

from __future__ import annotations

import itertools
import random

from abjadkit import _ucd

# 30 Arabic code points: the letters that take part in canonical composition,
# a few ordinary letters, every reordering mark and superscript alef.
TEST_ALPHABET = tuple(
    [0x0621, 0x0622, 0x0623, 0x0624, 0x0625, 0x0626, 0x0627, 0x0628, 0x062A, 0x0631, 0x0643, 0x0647]
    + list(range(0x0648, 0x0656))
    + [0x0670, 0x06C1, 0x06CC, 0x06D2]
)
assert len(TEST_ALPHABET) == 30 and len(set(TEST_ALPHABET)) == 30


def u(hexes: str) -> str:
    """'0627 0653' -> the string of those code points."""
    return "".join(chr(int(tok, 16)) for tok in hexes.split())


def h(text: str) -> str:
    return " ".join(f"{ord(c):04X}" for c in text)


# -- reference NFC -----------------------------------------------------------

def _ccc(cp: int) -> int:
    rec = _ucd.RECORDS.get(cp)
    return rec[2] if rec else 0


def _decompose(cp: int) -> list[int]:
    rec = _ucd.RECORDS.get(cp)
    if rec is None or rec[3] is None:
        return [cp]
    out = []
    for part in rec[3]:
        out.extend(_decompose(part))
    return out


def reference_nfc(text: str) -> str:
    """Textbook NFC: full decomposition, canonical ordering, canonical composition."""
    cps = [d for c in text for d in _decompose(ord(c))]
    # Canonical ordering: bubble any adjacent pair of non-starters out of order.
    changed = True
    while changed:
        changed = False
        for i in range(len(cps) - 1):
            a, b = _ccc(cps[i]), _ccc(cps[i + 1])
            if a > b > 0:
                cps[i], cps[i + 1] = cps[i + 1], cps[i]
                changed = True
    # Canonical composition.
    out: list[int] = []
    starter = None
    last_ccc = 0
    for cp in cps:
        cc = _ccc(cp)
        if starter is not None:
            adjacent = starter == len(out) - 1
            if adjacent or 0 < last_ccc < cc:
                comp = _ucd.COMPOSITIONS.get((out[starter], cp))
                if comp is not None:
                    out[starter] = comp
                    continue
        if cc == 0:
            starter = len(out)
        last_ccc = cc
        out.append(cp)
    return "".join(map(chr, out))


# -- brute-force rewriting ---------------------------------------------------

BOS = "^"
EOS = "$"


def brute_force_rewrite(s: str, source: str, target: str, left: str | None, right: str | None) -> str:
    """Obligatory left-to-right application of ``source -> target / left _ right``.

    ``right`` is checked against the input, ``left`` against the output
    written so far.  ``BOS``/``EOS`` match the string edges.
    """
    out = ""
    i = 0
    n = len(s)
    while i < n:
        j = i + len(source)
        if s[i:j] == source:
            if right is None:
                ok_right = True
            elif right == EOS:
                ok_right = j == n
            else:
                ok_right = j < n and s[j] == right
            if left is None:
                ok_left = True
            elif left == BOS:
                ok_left = out == ""
            else:
                ok_left = out[-1:] == left
            if ok_left and ok_right:
                out += target
                i = j
                continue
        out += s[i]
        i += 1
    return out


def all_strings(symbols, max_len: int):
    for n in range(max_len + 1):
        for t in itertools.product(symbols, repeat=n):
            yield "".join(t)


def random_strings(alphabet, count: int, seed: int, max_len: int = 10, min_len: int = 0) -> list[str]:
    rng = random.Random(seed)
    chars = [chr(c) if isinstance(c, int) else c for c in alphabet]
    return ["".join(rng.choice(chars) for _ in range(rng.randint(min_len, max_len))) for _ in range(count)]
