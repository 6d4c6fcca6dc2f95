#!/usr/bin/env python3
"""Print the first factors of both schemes for a directive, both ways.

For each index the oracle scan value and the closed-form value are shown
side by side; the run decomposition and the c-transient parameters come
first so the table is readable on its own.
"""

import argparse
import sys

sys.path.insert(0, str(__import__("pathlib").Path(__file__).resolve().parents[1] / "src"))

from epifactor import closed_form
from epifactor.episturmian import MorphismTable, format_directive, parse_directive
from epifactor.factorize import c_factorize, z_factorize


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--directive", "-d", default="|a b")
    ap.add_argument("--factors", "-k", type=int, default=8)
    args = ap.parse_args()

    spec = parse_directive(args.directive)
    spec.require_infinite()
    count = args.factors
    table = MorphismTable(spec, max_position=max(64, spec.g(count + 4) + 2))
    word = table.u(spec.g(count + 2))

    print(f"directive      {format_directive(spec)}")
    runs = ", ".join(f"{y}^{d}" if d > 1 else y for y, d in (spec.run(m) for m in range(1, 9)))
    print(f"runs 1..8      {runs}, ...")
    transient = closed_form.c_transient(spec, table)
    print(
        f"c-transient    {'|'.join(transient.factors)}   "
        f"(i={transient.i} j={transient.j} k0={transient.k0} m={transient.m})"
    )
    print(f"oracle prefix  {len(word)} letters\n")

    oracle_z = z_factorize(word, max_factors=count).factors
    closed_z = closed_form.z_factorization(spec, count, table).factors
    oracle_c = c_factorize(word).trusted_factors[:count]
    closed_c = closed_form.c_factorization(spec, count, table)[0].factors

    width = max(
        [len(f) for fs in (oracle_z, closed_z, oracle_c, closed_c) for f in fs] + [6]
    )
    print(f"{'k':>3}  {'z oracle':<{width}}  {'z closed':<{width}}  "
          f"{'c oracle':<{width}}  {'c closed':<{width}}")
    for k in range(count):
        cells = [
            fs[k] if k < len(fs) else "-" for fs in (oracle_z, closed_z, oracle_c, closed_c)
        ]
        mark = "" if cells[0] == cells[1] and cells[2] == cells[3] else "  <- MISMATCH"
        print(f"{k + 1:>3}  " + "  ".join(f"{c:<{width}}" for c in cells) + mark)
    return 0


if __name__ == "__main__":
    sys.exit(main())
