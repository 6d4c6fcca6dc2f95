"""Scan-based z- and c-factorizations: documented examples, literal
reference scanners, and serialization."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from epifactor.factorize import (
    Factorization,
    c_factorize,
    factor_counts,
    factorization_from_json,
    z_factorize,
)

random_words = st.text(alphabet="ab", min_size=1, max_size=60)
random_words3 = st.text(alphabet="abc", min_size=1, max_size=60)


def literal_z(w: str) -> tuple[list[str], bool]:
    """Definition-level z scan: longest prefix of the rest seen before, plus
    one letter; trailing factor may stay incomplete at the word end."""
    factors, q, complete = [], 0, True
    while q < len(w):
        length = 0
        while q + length < len(w) and w[q : q + length + 1] in w[: q + length]:
            length += 1
        if q + length < len(w):
            factors.append(w[q : q + length + 1])
            q += length + 1
        else:
            factors.append(w[q:])
            complete = False
            q = len(w)
    return factors, complete


def literal_c(w: str) -> tuple[list[str], bool]:
    """Definition-level c scan: longest factor with an earlier occurrence,
    a bare letter when fresh; flag records whether the last factor repeats."""
    factors, q = [], 0
    cut = False
    while q < len(w):
        length = 0
        while q + length < len(w) and w[q : q + length + 1] in w[: q + length]:
            length += 1
        take = max(length, 1)
        factors.append(w[q : q + take])
        cut = length >= 1 and q + length == len(w)
        q += take
    return factors, cut


class TestExamples:
    def test_z_distinct_letters(self):
        fz = z_factorize("abc")
        assert fz.factors == ("a", "b", "c")
        assert fz.last_complete and not fz.cut_by_input_end

    def test_z_trailing_repeat_incomplete(self):
        fz = z_factorize("aaa")
        assert fz.factors == ("a", "aa")
        assert not fz.last_complete

    def test_z_fibonacci_prefix(self):
        fz = z_factorize("abaababaabaab")
        assert fz.factors == ("a", "b", "aa", "bab", "aabaa", "b")
        assert not fz.last_complete
        assert fz.complete_count == 5

    def test_c_two_letters(self):
        assert c_factorize("ab").factors == ("a", "b")

    def test_c_repeat_run(self):
        fz = c_factorize("aaaa")
        assert fz.factors == ("a", "aaa")
        assert fz.cut_by_input_end

    def test_c_fibonacci_prefix(self):
        fz = c_factorize("abaababaaba")
        assert fz.factors == ("a", "b", "a", "aba", "baaba")
        assert fz.cut_by_input_end

    def test_factor_counts(self):
        assert factor_counts("abc") == (3, 3)
        assert factor_counts("aaaa") == (1, 2)
        assert factor_counts("abaababaaba") == (4, 5)

    def test_empty_word_rejected(self):
        for fn in (z_factorize, c_factorize):
            with pytest.raises(ValueError):
                fn("")
        with pytest.raises(ValueError):
            factor_counts("")


class TestAgainstLiteralScan:
    @given(random_words)
    def test_z_matches_definition(self, w):
        expect, complete = literal_z(w)
        fz = z_factorize(w)
        assert list(fz.factors) == expect
        assert fz.last_complete == complete

    @given(random_words3)
    def test_z_matches_definition_three_letters(self, w):
        expect, complete = literal_z(w)
        fz = z_factorize(w)
        assert list(fz.factors) == expect
        assert fz.last_complete == complete

    @given(random_words)
    def test_c_matches_definition(self, w):
        expect, cut = literal_c(w)
        fz = c_factorize(w)
        assert list(fz.factors) == expect
        assert fz.cut_by_input_end == cut

    @given(random_words3)
    def test_c_matches_definition_three_letters(self, w):
        expect, cut = literal_c(w)
        fz = c_factorize(w)
        assert list(fz.factors) == expect
        assert fz.cut_by_input_end == cut

    @given(st.one_of(random_words, random_words3))
    def test_factors_rejoin_to_input(self, w):
        assert "".join(z_factorize(w).factors) == w
        assert "".join(c_factorize(w).factors) == w


class TestStability:
    @given(random_words, st.text(alphabet="ab", min_size=1, max_size=5))
    def test_trusted_factors_survive_extension(self, w, t):
        for fn in (z_factorize, c_factorize):
            trusted = fn(w).trusted_factors
            extended = fn(w + t).factors
            assert extended[: len(trusted)] == trusted

    @given(random_words, st.integers(min_value=1, max_value=8))
    def test_max_factors_is_a_truncation(self, w, k):
        full = z_factorize(w)
        part = z_factorize(w, max_factors=k)
        assert part.factors == full.factors[:k]
        full_c = c_factorize(w)
        part_c = c_factorize(w, max_factors=k)
        assert part_c.factors == full_c.factors[:k]


class TestSerialization:
    @given(st.one_of(random_words, random_words3))
    def test_json_round_trip(self, w):
        for fn in (z_factorize, c_factorize):
            fz = fn(w)
            again = factorization_from_json(fz.to_json())
            assert again == fz
            assert again.word == w

    def test_input_length_validated(self):
        data = json.loads(z_factorize("abaab").to_json())
        data["input_length"] = 3
        with pytest.raises(ValueError):
            factorization_from_json(data)

    def test_scheme_validated(self):
        data = json.loads(z_factorize("ab").to_json())
        data["scheme"] = "q"
        with pytest.raises(ValueError):
            factorization_from_json(data)

    def test_value_shape(self):
        data = c_factorize("aaaa").to_json_dict()
        assert data == {
            "scheme": "c",
            "input_length": 4,
            "factors": ["a", "aaa"],
            "last_complete": True,
            "cut_by_input_end": True,
        }


class TestFactorizationValue:
    def test_trusted_drops_incomplete_z_tail(self):
        fz = z_factorize("aaa")
        assert fz.trusted_factors == ("a",)

    def test_trusted_drops_cut_c_tail(self):
        fz = c_factorize("abaababaaba")
        assert fz.trusted_factors == ("a", "b", "a", "aba")

    def test_complete_count_schemes_differ(self):
        # z discounts an incomplete tail; c counts every emitted factor
        assert z_factorize("aaa").complete_count == 1
        assert c_factorize("aaa").complete_count == 2

    def test_rejects_bad_scheme(self):
        with pytest.raises(ValueError):
            Factorization("x", ("a",), True, False)
