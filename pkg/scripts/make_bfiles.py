#!/usr/bin/env python3
"""Regenerate the packaged b-file fixtures.

Writes 120 terms per family to src/latticepaths/data/bfiles/.  Terms are
only written when three independent computation routes (binomial-sum
formula, generating-function coefficients, Riordan row sums) agree
exactly, so a bug in any single route cannot poison the fixtures.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from latticepaths.catalog import FAMILIES, terms

TERMS = 120
TARGET = Path(__file__).resolve().parent.parent / "src" / "latticepaths" / "data" / "bfiles"


def main() -> int:
    TARGET.mkdir(parents=True, exist_ok=True)
    for family in FAMILIES.values():
        by_formula = terms(family, TERMS, "formula")
        by_gf = terms(family, TERMS, "gf")
        by_riordan = terms(family, TERMS, "riordan")
        if not (by_formula == by_gf == by_riordan):
            raise SystemExit(f"{family.key}: computation routes disagree; refusing to write")
        path = TARGET / f"b{family.oeis_id[1:]}.txt"
        lines = "".join(f"{n} {v}\n" for n, v in enumerate(by_formula, start=family.offset))
        path.write_text(lines, encoding="ascii")
        print(f"wrote {path.name}: {TERMS} terms for {family.key} ({family.oeis_id})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
