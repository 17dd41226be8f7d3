"""Generate ``src/abjadkit/_ucd.py`` from a UnicodeData.txt-format file.

    python tools/extract_unicode.py tools/UnicodeData-14.0.0-arabic.txt \
        > src/abjadkit/_ucd.py

Only the Arabic-script blocks are kept.  Compatibility decompositions
(``<isolated>``, ``<final>`` ...) are dropped since only NFC is needed.
"""

import argparse
import sys

BLOCKS = [
    (0x0600, 0x06FF),
    (0x0750, 0x077F),
    (0x0870, 0x089F),
    (0x08A0, 0x08FF),
    (0xFB50, 0xFDFF),
    (0xFE70, 0xFEFF),
]

# CompositionExclusions.txt lists no code points in these blocks.
EXCLUSIONS: set = set()


def in_blocks(cp):
    return any(lo <= cp <= hi for lo, hi in BLOCKS)


def parse(lines):
    records = {}
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        f = line.split(";")
        cp = int(f[0], 16)
        if not in_blocks(cp) or f[1].startswith("<"):
            continue
        decomp = None
        if f[5] and not f[5].startswith("<"):
            decomp = tuple(int(x, 16) for x in f[5].split())
        records[cp] = (f[1].lower(), f[2], int(f[3]), decomp)
    return records


def compositions(records):
    pairs = {}
    for cp, (_, _, ccc, decomp) in records.items():
        if decomp is None or len(decomp) != 2 or cp in EXCLUSIONS:
            continue
        starter = records.get(decomp[0])
        if ccc != 0 or starter is None or starter[2] != 0:
            continue
        pairs[decomp] = cp
    return pairs


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("unicodedata")
    ap.add_argument("--version", default="14.0.0")
    args = ap.parse_args(argv)
    with open(args.unicodedata, encoding="utf-8") as fh:
        records = parse(fh)
    out = sys.stdout
    out.write("# Generated by tools/extract_unicode.py; do not edit.\n")
    out.write(f'UNICODE_VERSION = "{args.version}"\n\n')
    out.write("# code point -> (name, general category, combining class, canonical decomposition)\n")
    out.write("RECORDS = {\n")
    for cp in sorted(records):
        name, gc, ccc, decomp = records[cp]
        d = "None" if decomp is None else "(" + ", ".join(f"0x{x:04X}" for x in decomp) + ",)"
        out.write(f"    0x{cp:04X}: ({name!r}, {gc!r}, {ccc}, {d}),\n")
    out.write("}\n\n")
    out.write("# (starter, mark) -> primary composite\n")
    out.write("COMPOSITIONS = {\n")
    for (a, b), c in sorted(compositions(records).items()):
        out.write(f"    (0x{a:04X}, 0x{b:04X}): 0x{c:04X},\n")
    out.write("}\n")


if __name__ == "__main__":
    main()
