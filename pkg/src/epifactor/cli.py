"""Command-line front end.

Subcommands: generate (print a standard prefix), factorize (run a scan
engine, the closed formulas, or both with a match verdict), verify (run the
named corpus properties), bench (time an engine on a long input).

Exit codes are a stable contract: 0 on success or full match, 1 on usage or
validation errors, 2 when a formula disagrees with a scan oracle or a
verification property fails.  JSON goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__, closed_form
from .corpus import Limits, corpus_specs, property_names, run_verify
from .episturmian import (
    DirectiveError,
    HorizonError,
    MorphismTable,
    format_directive,
    parse_directive,
    standard_prefix,
)
from .factorize import Factorization, c_factorize, z_factorize

USAGE_EXIT = 1
MISMATCH_EXIT = 2

_NAIVE_ENGINE_MAX = 512  # auto engine switches to lpf above this length


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; this contract reserves 2 for
    theorem-oracle mismatches, so usage errors are remapped to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="epifactor", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"epifactor {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", help="print a standard episturmian prefix")
    p.add_argument("-d", "--directive", required=True, help='directive word, e.g. "a^2 | a b"')
    p.add_argument("-n", "--length", type=int, required=True, help="prefix length in letters")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_generate)

    p = sub.add_parser("factorize", help="factorize a word or a directive's prefix")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("-d", "--directive", help="directive word naming an episturmian word")
    group.add_argument("--literal", help="factorize this literal word instead")
    p.add_argument("--scheme", choices=("z", "c"), default="z")
    p.add_argument(
        "--source",
        choices=("oracle", "closed", "both"),
        default="oracle",
        help="scan engine, closed formulas, or both with a match verdict",
    )
    p.add_argument(
        "-k",
        "--factors",
        type=int,
        default=None,
        help="number of factors (default 8 for a directive, all for a literal)",
    )
    p.add_argument(
        "-n",
        "--length",
        type=int,
        default=None,
        help="with -d, factorize the prefix of this length instead of auto-sizing",
    )
    p.add_argument("--engine", choices=("naive", "lpf", "auto"), default="auto")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_factorize)

    p = sub.add_parser("verify", help="check the named properties over a spec corpus")
    p.add_argument(
        "--alphabet",
        choices=("2", "3", "both"),
        default="both",
        help="alphabet sizes for the generated corpus (default both)",
    )
    p.add_argument("--max-runs", type=int, default=4, help="max prefix runs in the corpus")
    p.add_argument("--max-exp", type=int, default=3, help="max run exponent in the corpus")
    p.add_argument(
        "--spec",
        action="append",
        default=None,
        metavar="DIRECTIVE",
        help="check only this directive (repeatable; replaces the corpus)",
    )
    p.add_argument(
        "--property",
        action="append",
        default=None,
        metavar="NAME",
        help=f"run only this property (repeatable); known: {', '.join(property_names())}",
    )
    p.add_argument("--seed", type=int, default=0, help="seed for the randomized engine checks")
    p.add_argument(
        "--max-positions",
        type=int,
        default=Limits.max_positions,
        help="directive-position horizon for the construction suites",
    )
    p.add_argument(
        "--max-u-len",
        type=int,
        default=Limits.max_u_len,
        help="stop materializing palindromic prefixes past this length",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("bench", help="time a factorization engine (JSON lines)")
    p.add_argument("--engine", choices=("naive", "lpf"), required=True)
    p.add_argument(
        "-d",
        "--directive",
        default=None,
        help='episturmian input from this directive (default "|a b" unless --literal-random)',
    )
    p.add_argument(
        "--literal-random",
        action="store_true",
        help="use a seeded random word over two letters instead of a directive",
    )
    p.add_argument("-n", "--length", type=int, required=True, help="input length in letters")
    p.add_argument("--scheme", choices=("z", "c"), default="z")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_bench)

    return parser


def _fail_usage(message: str) -> int:
    print(f"epifactor: error: {message}", file=sys.stderr)
    return USAGE_EXIT


def cmd_generate(args) -> int:
    spec = parse_directive(args.directive)
    if args.length < 0:
        return _fail_usage("length must be nonnegative")
    word = standard_prefix(spec, args.length)
    if args.format == "json":
        print(json.dumps({"directive": format_directive(spec), "length": len(word), "word": word}))
    else:
        print(word)
    return 0


def _oracle_factorize(w: str, scheme: str, engine: str, max_factors: int | None) -> Factorization:
    if engine == "auto":
        engine = "naive" if len(w) <= _NAIVE_ENGINE_MAX else "lpf"
    if engine == "naive":
        fn = z_factorize if scheme == "z" else c_factorize
        return fn(w, max_factors=max_factors)
    from .lpf import factorize_via_lpf

    full = factorize_via_lpf(w, scheme)
    if max_factors is None or len(full.factors) <= max_factors:
        return full
    return Factorization(scheme, full.factors[:max_factors], True, False)


def _closed_json(scheme: str, fz: Factorization, transient) -> dict:
    data = fz.to_json_dict()
    data["source"] = "closed_form"
    if scheme == "c":
        data.update(
            transient=list(transient.factors),
            i=transient.i,
            j=transient.j,
            k0=transient.k0,
            m=transient.m,
            onset=transient.onset,
        )
    return data


def _print_factors(label: str, fz: Factorization) -> None:
    flags = []
    if not fz.last_complete:
        flags.append("last factor incomplete")
    if fz.cut_by_input_end:
        flags.append("cut by input end")
    suffix = f"  ({'; '.join(flags)})" if flags else ""
    print(f"{label}: {'|'.join(fz.factors)}{suffix}")


def cmd_factorize(args) -> int:
    scheme = args.scheme
    if args.literal is not None:
        if not args.literal:
            return _fail_usage("empty input word")
        if args.source != "oracle":
            return _fail_usage("closed formulas need a directive; use -d with --source " + args.source)
        if args.length is not None:
            return _fail_usage("-n applies to a directive, not a literal")
        fz = _oracle_factorize(args.literal, scheme, args.engine, args.factors)
        if args.format == "json":
            data = fz.to_json_dict()
            data["source"] = "oracle"
            print(json.dumps(data))
        else:
            _print_factors(f"{scheme}-factors", fz)
        return 0

    spec = parse_directive(args.directive)
    spec.require_infinite()
    count = args.factors if args.factors is not None else 8
    if count < 1:
        return _fail_usage("factor count must be positive")
    table = MorphismTable(spec)

    def oracle_word() -> str:
        if args.length is not None:
            return standard_prefix(spec, args.length, table)
        # u_{g(count+2)} strictly covers the first `count` factors of both schemes
        return table.u(spec.g(count + 2))

    if args.source == "oracle":
        fz = _oracle_factorize(oracle_word(), scheme, args.engine, count)
        if args.format == "json":
            data = fz.to_json_dict()
            data["source"] = "oracle"
            print(json.dumps(data))
        else:
            _print_factors(f"{scheme}-factors", fz)
        return 0

    if scheme == "z":
        closed = closed_form.z_factorization(spec, count, table)
        transient = None
    else:
        closed, transient = closed_form.c_factorization(spec, count, table)
    if args.source == "closed":
        if args.format == "json":
            print(json.dumps(_closed_json(scheme, closed, transient)))
        else:
            _print_factors(f"{scheme}-factors (closed form)", closed)
        return 0

    # source == "both": compare the first `count` factors
    oracle = _oracle_factorize(oracle_word(), scheme, args.engine, count)
    oracle_side = oracle.factors if scheme == "z" else oracle.trusted_factors
    divergence = None
    for idx in range(count):
        a = closed.factors[idx] if idx < len(closed.factors) else None
        b = oracle_side[idx] if idx < len(oracle_side) else None
        if a != b:
            divergence = idx + 1
            break
    match = divergence is None
    if args.format == "json":
        data = {
            "scheme": scheme,
            "oracle": {**oracle.to_json_dict(), "source": "oracle"},
            "closed_form": _closed_json(scheme, closed, transient),
            "match": match,
            "first_divergence": divergence,
        }
        print(json.dumps(data))
    else:
        _print_factors(f"{scheme}-factors (oracle)", oracle)
        _print_factors(f"{scheme}-factors (closed form)", closed)
        print(f"verdict {'MATCH' if match else 'MISMATCH'}")
    if not match:
        a = closed.factors[divergence - 1] if divergence - 1 < len(closed.factors) else "(none)"
        b = oracle_side[divergence - 1] if divergence - 1 < len(oracle_side) else "(none)"
        print(
            f"mismatch at factor {divergence}: closed {a!r} != oracle {b!r}",
            file=sys.stderr,
        )
        return MISMATCH_EXIT
    return 0


def cmd_verify(args) -> int:
    if args.spec:
        specs = [parse_directive(s) for s in args.spec]
        for spec in specs:
            spec.require_infinite()
    else:
        sizes = {"2": (2,), "3": (3,), "both": (2, 3)}[args.alphabet]
        specs = [
            s
            for size in sizes
            for s in corpus_specs(size, max_prefix_runs=args.max_runs, max_exp=args.max_exp)
        ]
    specs = sorted(specs, key=format_directive)
    limits = Limits(seed=args.seed, max_positions=args.max_positions, max_u_len=args.max_u_len)

    def progress(done: int, total: int) -> None:
        step = max(1, total // 20)
        if done % step == 0 or done == total:
            print(f"verify: {done}/{total} specs", file=sys.stderr)

    report = run_verify(specs, properties=args.property, limits=limits, progress=progress)
    if args.format == "json":
        data = {
            "specs": len(specs),
            "seed": args.seed,
            "ok": report.ok,
            "properties": [
                {"name": r.name, "checked": r.checked, "failures": list(r.failures)}
                for r in report.results
            ],
        }
        print(json.dumps(data))
    else:
        for line in report.summary_lines():
            print(line)
        shown_cap = 25
        for r in report.results:
            for line in r.failures[:shown_cap]:
                print(f"  {r.name}: {line}")
            if len(r.failures) > shown_cap:
                print(f"  {r.name}: ... and {len(r.failures) - shown_cap} more")
        failed = sum(1 for r in report.results if not r.ok)
        if report.ok:
            print(f"all {len(report.results)} properties passed over {len(specs)} specs")
        else:
            print(f"{failed} of {len(report.results)} properties failed")
    return 0 if report.ok else MISMATCH_EXIT


def cmd_bench(args) -> int:
    if args.length < 1:
        return _fail_usage("length must be positive")
    if args.literal_random and args.directive is not None:
        return _fail_usage("--literal-random and -d are mutually exclusive")
    t0 = time.perf_counter()
    if args.literal_random:
        import random

        rng = random.Random(args.seed)
        word = "".join(rng.choice("ab") for _ in range(args.length))
        source = f"random(seed={args.seed})"
    else:
        spec = parse_directive(args.directive if args.directive is not None else "|a b")
        word = standard_prefix(spec, args.length)
        source = format_directive(spec)
    build_s = time.perf_counter() - t0

    if args.engine == "lpf":
        from .lpf import factorize_via_lpf, warmup

        warmup()  # JIT compilation paid here, not inside the timing
        t0 = time.perf_counter()
        fz = factorize_via_lpf(word, args.scheme)
    else:
        fn = z_factorize if args.scheme == "z" else c_factorize
        t0 = time.perf_counter()
        fz = fn(word)
    factorize_s = time.perf_counter() - t0
    print(
        json.dumps(
            {
                "engine": args.engine,
                "scheme": args.scheme,
                "source": source,
                "n": len(word),
                "build_seconds": round(build_s, 6),
                "factorize_seconds": round(factorize_s, 6),
                "factors": len(fz.factors),
                "complete_factors": fz.complete_count,
            }
        )
    )
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except closed_form.TheoremViolationError as exc:
        print(f"epifactor: theorem check failed: {exc}", file=sys.stderr)
        return MISMATCH_EXIT
    except (DirectiveError, HorizonError, ValueError) as exc:
        print(f"epifactor: error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
