"""Write UnicodeData.txt-format lines for the Arabic-script blocks.

Used when the official UnicodeData.txt is not at hand: any module with the
``unicodedata`` interface can stand in (``unicodedata2==14.0.0`` pins the
version this package embeds).

    python tools/dump_ucd_subset.py --module unicodedata2 > tools/UnicodeData-14.0.0-arabic.txt
"""

import argparse
import importlib
import sys

BLOCKS = [
    (0x0600, 0x06FF),
    (0x0750, 0x077F),
    (0x0870, 0x089F),
    (0x08A0, 0x08FF),
    (0xFB50, 0xFDFF),
    (0xFE70, 0xFEFF),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--module", default="unicodedata2")
    args = ap.parse_args(argv)
    ud = importlib.import_module(args.module)
    sys.stderr.write(f"unicode version {ud.unidata_version}\n")
    for lo, hi in BLOCKS:
        for cp in range(lo, hi + 1):
            ch = chr(cp)
            name = ud.name(ch, None)
            if name is None:
                continue
            dec = ud.decimal(ch, None)
            dig = ud.digit(ch, None)
            num = ud.numeric(ch, None)
            fields = [
                f"{cp:04X}", name, ud.category(ch), str(ud.combining(ch)),
                ud.bidirectional(ch), ud.decomposition(ch),
                "" if dec is None else str(dec),
                "" if dig is None else str(dig),
                "" if num is None else (str(int(num)) if num == int(num) else str(num)),
                "Y" if ud.mirrored(ch) else "N",
                "", "", "", "", "",
            ]
            print(";".join(fields))


if __name__ == "__main__":
    main()
