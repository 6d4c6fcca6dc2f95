#!/usr/bin/env python3
"""Engine timing sweep: naive vs lpf on growing inputs, one JSON line each.

Inputs are prefixes of the two-letter alternating-directive word by default;
--random switches to seeded random words, --directive to any other spec.
The naive engine is skipped past --naive-cap letters (it is quadratic-ish on
adversarial inputs and only meant as an oracle).
"""

import argparse
import json
import random
import sys
import time

sys.path.insert(0, str(__import__("pathlib").Path(__file__).resolve().parents[1] / "src"))

from epifactor.episturmian import parse_directive, standard_prefix
from epifactor.factorize import c_factorize, z_factorize
from epifactor.lpf import factorize_via_lpf, warmup


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--directive", default="|a b")
    ap.add_argument("--random", action="store_true", help="random two-letter words instead")
    ap.add_argument("--lengths", default="1000,10000,100000,1000000")
    ap.add_argument("--scheme", choices=("z", "c"), default="z")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--naive-cap", type=int, default=200_000)
    args = ap.parse_args()

    lengths = [int(s) for s in args.lengths.split(",")]
    spec = parse_directive(args.directive)
    warmup()
    for n in lengths:
        if args.random:
            rng = random.Random(args.seed)
            word = "".join(rng.choice("ab") for _ in range(n))
        else:
            word = standard_prefix(spec, n)
        rows = [("lpf", lambda w: factorize_via_lpf(w, args.scheme))]
        if n <= args.naive_cap:
            naive = z_factorize if args.scheme == "z" else c_factorize
            rows.append(("naive", naive))
        for engine, fn in rows:
            t0 = time.perf_counter()
            fz = fn(word)
            dt = time.perf_counter() - t0
            print(
                json.dumps(
                    {
                        "engine": engine,
                        "scheme": args.scheme,
                        "n": n,
                        "seconds": round(dt, 6),
                        "factors": len(fz.factors),
                        "complete_factors": fz.complete_count,
                    }
                )
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
