"""Acceptance gate: one test per criterion, exact equality throughout.

Each criterion reports one PASS/FAIL line in the terminal summary.  The
corpus, horizons, and sample sizes are the library defaults in
epifactor.corpus.Limits, which pin the criterion parameters: 8 closed-form
z-factors against the oracle prefix u_{g(10)} on binary specs, 6 against
u_{g(8)} on ternary ones, construction identities out to directive position
30 and prefix length 2^20, and the engine-agreement sample (exhaustive
binary length <= 12, 500 seeded random words of length <= 2000).  Time
bounds: the binary z sweep under 60 s, the lpf z-factorization of the
10^6-letter two-letter alternating prefix under 2 s.
"""

import json
import pathlib
import time

from conftest import record_acceptance

from epifactor import closed_form
from epifactor.corpus import (
    CONSTRUCTION_PROPERTIES,
    ENGINE_AGREEMENT,
    Limits,
    corpus_specs,
    run_verify,
)
from epifactor.episturmian import MorphismTable, format_directive, parse_directive, standard_prefix
from epifactor.factorize import c_factorize, z_factorize
from epifactor.lpf import factorize_via_lpf, warmup

GOLDEN_DIR = pathlib.Path(__file__).parent / "goldens"
LIMITS = Limits()
BINARY = corpus_specs(2)
TERNARY = corpus_specs(3)


def check(name: str, failures: list[str], detail: str) -> None:
    ok = not failures
    record_acceptance(f"{name} {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, f"{name}: " + "; ".join(failures[:10])


def report_failures(report) -> list[str]:
    return [f for r in report.results for f in r.failures]


def test_a1_z_theorem_binary():
    t0 = time.perf_counter()
    report = run_verify(BINARY, properties=["z-theorem"], limits=LIMITS)
    elapsed = time.perf_counter() - t0
    failures = report_failures(report)
    if elapsed >= 60.0:
        failures.append(f"binary z sweep took {elapsed:.1f}s, bound is 60s")
    check(
        "A1",
        failures,
        f"closed-form z == oracle, first {LIMITS.z_count_binary} factors on "
        f"{len(BINARY)} binary specs in {elapsed:.1f}s (< 60s)",
    )


def test_a2_z_theorem_ternary():
    report = run_verify(TERNARY, properties=["z-theorem"], limits=LIMITS)
    check(
        "A2",
        report_failures(report),
        f"closed-form z == oracle, first {LIMITS.z_count_ternary} factors on "
        f"{len(TERNARY)} ternary specs",
    )


def test_a3_c_theorem_full_corpus():
    failures: list[str] = []
    for spec in BINARY + TERNARY:
        name = format_directive(spec)
        count = LIMITS.z_count(spec)
        table = MorphismTable(spec)
        trusted = c_factorize(table.u(spec.g(count + 2))).trusted_factors
        closed, transient = closed_form.c_factorization(spec, len(trusted), table)
        if closed.factors != trusted:
            failures.append(f"{name}: closed c-factors diverge from the oracle")
        want = transient.k0 - 1 if spec.run(1)[1] == 1 else transient.k0
        if transient.j - transient.i != want:
            failures.append(f"{name}: j - i = {transient.j - transient.i}, expected {want}")
    check(
        "A3",
        failures,
        f"transient+steady c == oracle (final cut factor excluded) and the j-i "
        f"identity on {len(BINARY) + len(TERNARY)} specs",
    )


def test_a4_construction_identities():
    report = run_verify(
        BINARY + TERNARY, properties=list(CONSTRUCTION_PROPERTIES), limits=LIMITS
    )
    check(
        "A4",
        report_failures(report),
        f"{len(CONSTRUCTION_PROPERTIES)} construction identity suites, zero failures "
        f"out to position {LIMITS.max_positions} and length 2^20",
    )


def test_a5_z_from_c():
    report = run_verify(
        BINARY + TERNARY, properties=["z-from-c-agreement"], limits=LIMITS
    )
    check(
        "A5",
        report_failures(report),
        f"z-factors recovered through the c-sequence, onset..onset+{LIMITS.z_from_c_window} "
        "on every spec",
    )


def test_a6_binary_standard_words():
    report = run_verify(BINARY, properties=["sturmian-standard"], limits=LIMITS)
    check(
        "A6",
        report_failures(report),
        f"binary blocks equal standard words for p <= {LIMITS.standard_word_depth} "
        "and steady c-factors are their reversed powers",
    )


def test_a7_engine_agreement_and_speed():
    report = run_verify([], properties=[ENGINE_AGREEMENT], limits=LIMITS)
    failures = report_failures(report)
    word = standard_prefix(parse_directive("|a b"), 10**6)
    warmup()
    t0 = time.perf_counter()
    fz = factorize_via_lpf(word, "z")
    elapsed = time.perf_counter() - t0
    if elapsed >= 2.0:
        failures.append(f"lpf z on 10^6 letters took {elapsed:.2f}s, bound is 2s")
    if "".join(fz.factors) != word:
        failures.append("lpf z-factors do not concatenate back to the input")
    checked = report.result(ENGINE_AGREEMENT).checked
    check(
        "A7",
        failures,
        f"engines agree on {checked} words; lpf z on 10^6 letters in {elapsed:.2f}s (< 2s)",
    )


def test_a8_factor_count_ratio():
    report = run_verify(
        BINARY + TERNARY, properties=["factor-count-ratio"], limits=LIMITS
    )
    check(
        "A8",
        report_failures(report),
        f"complete-c count <= 2x complete-z count on every corpus prefix "
        f"(length >= {LIMITS.ratio_min_len})",
    )


def test_a9_goldens():
    failures: list[str] = []
    heads = {
        "fibonacci_z": ("a", "b", "aa", "bab", "aabaa"),
        "fibonacci_c": ("a", "b", "a", "aba", "baaba"),
        "tribonacci_z": ("a", "b", "ac", "abaa"),
    }
    for path in sorted(GOLDEN_DIR.glob("*.json")):
        data = json.loads(path.read_text())
        spec = parse_directive(data["directive"])
        frozen = tuple(data["factors"])
        table = MorphismTable(spec)
        word = table.u(spec.g(len(frozen) + 2))
        oracle = (z_factorize if data["scheme"] == "z" else c_factorize)(
            word, max_factors=len(frozen)
        )
        if oracle.factors != frozen:
            failures.append(f"{path.name}: frozen factors diverge from the oracle")
        head = heads.get(path.stem)
        if head and frozen[: len(head)] != head:
            failures.append(f"{path.name}: leading factors are not the documented ones")
    if not list(GOLDEN_DIR.glob("*.json")):
        failures.append("no golden files found")
    check("A9", failures, "frozen golden factorizations match a fresh oracle run")
