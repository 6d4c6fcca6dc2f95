"""Spec corpus enumeration and the property-check driver."""

import pytest

from epifactor.corpus import (
    CONSTRUCTION_PROPERTIES,
    ENGINE_AGREEMENT,
    Limits,
    corpus_specs,
    property_names,
    run_verify,
)
from epifactor.episturmian import format_directive, parse_directive

QUICK = Limits(
    max_positions=14,
    max_u_len=1 << 12,
    z_count_binary=5,
    z_count_ternary=4,
    z_from_c_window=3,
    standard_word_depth=5,
    structure_window=96,
    complexity_lengths=8,
    ratio_min_len=96,
    exhaustive_max_len=6,
    random_words=24,
    random_max_len=160,
)

QUICK_SPECS = [
    parse_directive(d)
    for d in ("|a b", "|a b c", "a^2 | b a", "b^3 a | b c a", "a b | c a b", "c | a b c")
]


class TestCorpusEnumeration:
    def test_counts(self):
        # rotations x (adjacent-distinct prefix run sequences x exponents)
        assert len(corpus_specs(2)) == 2 * (1 + 3 + 9 + 27 + 81)
        assert len(corpus_specs(3)) == 3 * (1 + 2 * 3 + 4 * 9 + 8 * 27 + 16 * 81)

    def test_contains_plain_tails(self):
        names = {format_directive(s) for s in corpus_specs(2)}
        assert "| a b" in names and "| b a" in names
        names3 = {format_directive(s) for s in corpus_specs(3)}
        assert "| a b c" in names3 and "| c a b" in names3

    def test_every_spec_is_infinite_and_well_formed(self):
        for s in corpus_specs(2)[:50] + corpus_specs(3)[:50]:
            s.require_infinite()
            assert parse_directive(format_directive(s)) == s

    def test_deterministic_order(self):
        a = [format_directive(s) for s in corpus_specs(3, max_prefix_runs=2)]
        b = [format_directive(s) for s in corpus_specs(3, max_prefix_runs=2)]
        assert a == b

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            corpus_specs(1)
        with pytest.raises(ValueError):
            corpus_specs(2, max_exp=0)


class TestPropertyNames:
    def test_names_are_kebab_case_and_unique(self):
        names = property_names()
        assert len(names) == len(set(names))
        for n in names:
            assert n == n.lower() and " " not in n

    def test_construction_subset(self):
        assert set(CONSTRUCTION_PROPERTIES) <= set(property_names())
        assert len(CONSTRUCTION_PROPERTIES) == 9

    def test_engine_agreement_listed(self):
        assert ENGINE_AGREEMENT in property_names()


class TestRunVerify:
    def test_quick_pass(self):
        report = run_verify(QUICK_SPECS, limits=QUICK)
        assert report.ok
        for line in report.summary_lines():
            assert line.startswith("ok")

    def test_unknown_property_rejected(self):
        with pytest.raises(ValueError):
            run_verify(QUICK_SPECS[:1], properties=["no-such-check"], limits=QUICK)

    def test_property_selection(self):
        report = run_verify(QUICK_SPECS[:2], properties=["z-theorem"], limits=QUICK)
        assert report.ok
        assert [p.name for p in report.results] == ["z-theorem"]
        assert report.result("z-theorem").checked == 2

    def test_determinism(self):
        a = run_verify(QUICK_SPECS[:3], limits=QUICK)
        b = run_verify(QUICK_SPECS[:3], limits=QUICK)
        assert a.summary_lines() == b.summary_lines()

    def test_progress_callback(self):
        seen = []
        run_verify(
            QUICK_SPECS[:3],
            properties=["construction-consistency"],
            limits=QUICK,
            progress=lambda done, total: seen.append((done, total)),
        )
        assert seen and seen[-1] == (3, 3)

    def test_engine_agreement_alone(self):
        report = run_verify([], properties=[ENGINE_AGREEMENT], limits=QUICK)
        assert report.ok
        assert report.result(ENGINE_AGREEMENT).checked > 2 ** QUICK.exhaustive_max_len
