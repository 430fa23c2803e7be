#!/usr/bin/env python3
"""Regenerates include/spanmt/detail/unicode_tables.inc from Python's
unicodedata. The tables mirror the character classes the library needs:

  punct   -- general categories P* (trailing-punctuation stripping)
  alpha   -- categories L*
  numeric -- categories N*
  space   -- str.isspace()
  lower   -- full per-character lowercase mapping (where it differs)

Run with the CPython the project targets and commit the result.
"""

import sys
import unicodedata

MAX_CP = 0x110000


def ranges(pred):
    out = []
    start = None
    for cp in range(MAX_CP):
        if pred(cp):
            if start is None:
                start = cp
        elif start is not None:
            out.append((start, cp))
            start = None
    if start is not None:
        out.append((start, MAX_CP))
    return out


def cat(cp):
    return unicodedata.category(chr(cp))


def emit_ranges(f, name, rs):
    f.write(f"inline constexpr CpRange {name}[] = {{\n")
    for i in range(0, len(rs), 4):
        row = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in rs[i : i + 4])
        f.write(f"    {row},\n")
    f.write("};\n\n")


def main(out_path):
    punct = ranges(lambda cp: cat(cp).startswith("P"))
    alpha = ranges(lambda cp: cat(cp).startswith("L"))
    numeric = ranges(lambda cp: cat(cp).startswith("N"))
    space = ranges(lambda cp: chr(cp).isspace())

    lower = []
    for cp in range(MAX_CP):
        lo = chr(cp).lower()
        if lo != chr(cp):
            lower.append((cp, [ord(c) for c in lo]))

    with open(out_path, "w") as f:
        f.write("// Generated by scripts/gen_unicode_tables.py")
        f.write(f" (Python {sys.version.split()[0]},")
        f.write(f" Unicode {unicodedata.unidata_version}). Do not edit.\n\n")
        emit_ranges(f, "kPunctRanges", punct)
        emit_ranges(f, "kAlphaRanges", alpha)
        emit_ranges(f, "kNumericRanges", numeric)
        emit_ranges(f, "kSpaceRanges", space)

        f.write("inline constexpr LowerEntry kLowerMap[] = {\n")
        for i in range(0, len(lower), 4):
            row = ", ".join(
                "{0x%X, {0x%X, 0x%X, 0x%X}, %d}"
                % (
                    cp,
                    tgt[0],
                    tgt[1] if len(tgt) > 1 else 0,
                    tgt[2] if len(tgt) > 2 else 0,
                    len(tgt),
                )
                for cp, tgt in lower[i : i + 4]
            )
            f.write(f"    {row},\n")
        f.write("};\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/spanmt/detail/unicode_tables.inc")
