#!/usr/bin/env python3
"""Regenerate the frozen factorization goldens under tests/goldens/.

The values come from the naive scan oracle on materialized prefixes (the
lpf engine agrees with it; the cross-check is part of the test suite and of
`epifactor verify`).  Run from anywhere; writes relative to the repo root.
"""

from __future__ import annotations

import json
from pathlib import Path

from epifactor.episturmian import MorphismTable, parse_directive
from epifactor.factorize import c_factorize, z_factorize

GOLDENS = Path(__file__).resolve().parent.parent / "tests" / "goldens"

CASES = [
    ("fibonacci_z", "|a b", "z", 8),
    ("fibonacci_c", "|a b", "c", 8),
    ("tribonacci_z", "|a b c", "z", 6),
    ("tribonacci_c", "|a b c", "c", 6),
]


def main() -> None:
    GOLDENS.mkdir(parents=True, exist_ok=True)
    for name, directive, scheme, count in CASES:
        spec = parse_directive(directive)
        table = MorphismTable(spec)
        # u_{g(count+2)} strictly covers the first `count` factors of either scheme
        word = table.u(spec.g(count + 2))
        fz = (z_factorize if scheme == "z" else c_factorize)(word, max_factors=count)
        assert fz.last_complete and not fz.cut_by_input_end
        data = {
            "directive": directive,
            "scheme": scheme,
            "factors": list(fz.factors[:count]),
        }
        out = GOLDENS / f"{name}.json"
        out.write_text(json.dumps(data, indent=2) + "\n")
        print(f"wrote {out} ({len(data['factors'])} factors)")


if __name__ == "__main__":
    main()
