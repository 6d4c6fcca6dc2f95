"""Basic word operations: documented examples plus property-based checks
against definition-level brute force."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epifactor import words
from epifactor._pal import longest_palindromic_suffix_length

short_words = st.text(alphabet="ab", max_size=14)
medium_words = st.text(alphabet="abc", max_size=60)


def brute_longest_palindromic_suffix(w: str) -> str:
    for start in range(len(w)):
        if w[start:] == w[start:][::-1]:
            return w[start:]
    return ""


def brute_closure(w: str) -> str:
    """Smallest L >= |w| admitting a palindrome with prefix w, built directly."""
    for total in range(len(w), 2 * len(w) + 1):
        ok = all(
            w[i] == w[total - 1 - i]
            for i in range(len(w))
            if total - 1 - i < len(w)
        )
        if ok:
            tail = "".join(
                w[total - 1 - i] for i in range(len(w), total)
            )
            return w + tail
    raise AssertionError("w + reverse(w[:-1]) is always a palindromic extension")


class TestExamples:
    def test_reversal(self):
        assert words.reverse("") == ""
        assert words.reverse("abaab") == "baaba"
        assert words.reverse("aba") == "aba"

    def test_is_palindrome(self):
        assert words.is_palindrome("")
        assert words.is_palindrome("abaaba")
        assert not words.is_palindrome("ab")

    def test_palindromic_closure(self):
        assert words.palindromic_closure("") == ""
        assert words.palindromic_closure("ab") == "aba"
        assert words.palindromic_closure("abaa") == "abaaba"

    def test_count_occurrences(self):
        assert words.count_occurrences("aa", "aaa") == 2
        assert words.count_occurrences("ba", "abaab") == 1
        assert words.count_occurrences("bab", "abaabab") == 1
        with pytest.raises(ValueError):
            words.count_occurrences("", "abc")

    def test_containment(self):
        assert words.is_prefix("ab", "abaab")
        assert words.is_suffix("aba", "abaaba")
        assert words.is_factor("", "x")
        assert not words.is_prefix("b", "abaab")
        assert not words.is_suffix("ab", "abaaba")

    def test_strip(self):
        assert words.strip_prefix("a", "abaab") == "baab"
        assert words.strip_suffix("aba", "abaaba") == "aba"
        with pytest.raises(ValueError):
            words.strip_suffix("ab", "abaaba")
        with pytest.raises(ValueError):
            words.strip_prefix("b", "abaab")

    def test_is_primitive(self):
        assert words.is_primitive("a")
        assert not words.is_primitive("abab")
        assert words.is_primitive("abaab")
        with pytest.raises(ValueError):
            words.is_primitive("")

    def test_are_conjugate(self):
        assert words.are_conjugate("ab", "ba")
        assert words.are_conjugate("ab", "ab")
        assert words.are_conjugate("aab", "aba")
        assert not words.are_conjugate("ab", "aa")
        assert not words.are_conjugate("ab", "abc")

    def test_factor_complexity(self):
        assert words.factor_complexity("abc", 0) == 1
        assert words.factor_complexity("", 0) == 1
        assert words.factor_complexity("abaaba", 1) == 2
        assert words.factor_complexity("abaababaabaab", 4) == 5
        with pytest.raises(ValueError):
            words.factor_complexity("ab", 3)


class TestClosureProperties:
    @given(short_words)
    def test_closure_is_minimal_palindromic_extension(self, w):
        got = words.palindromic_closure(w)
        assert words.is_palindrome(got)
        assert got.startswith(w)
        assert len(got) <= 2 * len(w) or not w
        assert got == brute_closure(w)

    @given(medium_words)
    def test_closure_idempotent(self, w):
        once = words.palindromic_closure(w)
        assert words.palindromic_closure(once) == once

    @given(medium_words)
    def test_palindromic_suffix_brute(self, w):
        assert words.longest_palindromic_suffix(w) == brute_longest_palindromic_suffix(w)

    @given(st.text(alphabet="abc", min_size=1, max_size=80))
    def test_suffix_kernel_matches_brute(self, w):
        # the compiled border kernel normally engages only on long inputs;
        # exercise it directly against the definitional scan
        assert longest_palindromic_suffix_length(w) == len(
            brute_longest_palindromic_suffix(w)
        )

    @settings(deadline=None, max_examples=20)
    @given(st.text(alphabet="ab", min_size=520, max_size=600))
    def test_long_words_use_same_semantics(self, w):
        # past the length threshold the kernel path is taken; results must
        # be indistinguishable from the short-word scan
        got = words.longest_palindromic_suffix(w)
        assert got == brute_longest_palindromic_suffix(w)
        closure = words.palindromic_closure(w)
        assert words.is_palindrome(closure) and closure.startswith(w)
        assert len(closure) == 2 * len(w) - len(got)


class TestCountingAndStructure:
    @given(st.text(alphabet="ab", min_size=1, max_size=6), medium_words)
    def test_count_matches_position_scan(self, p, t):
        brute = sum(1 for q in range(len(t) - len(p) + 1) if t[q : q + len(p)] == p)
        assert words.count_occurrences(p, t) == brute

    @given(st.text(alphabet="ab", min_size=1, max_size=24))
    def test_primitive_matches_divisor_scan(self, w):
        n = len(w)
        brute = not any(
            n % d == 0 and w == w[:d] * (n // d) for d in range(1, n)
        )
        assert words.is_primitive(w) == brute

    @given(st.text(alphabet="abc", max_size=20), st.text(alphabet="abc", max_size=20))
    def test_conjugate_matches_rotation_scan(self, u, v):
        brute = len(u) == len(v) and any(
            u[i:] + u[:i] == v for i in range(max(1, len(u)))
        )
        assert words.are_conjugate(u, v) == brute

    def test_conjugacy_is_an_equivalence(self):
        # canonical rotation induces the same partition, which makes
        # reflexivity, symmetry, and transitivity immediate
        from itertools import product

        for n in range(1, 7):
            all_words = ["".join(t) for t in product("ab", repeat=n)]
            canon = {w: min(w[i:] + w[:i] for i in range(n)) for w in all_words}
            for u in all_words:
                for v in all_words:
                    assert words.are_conjugate(u, v) == (canon[u] == canon[v])

    @given(medium_words, st.integers(min_value=0, max_value=60))
    def test_complexity_matches_set_count(self, w, n):
        if n > len(w):
            with pytest.raises(ValueError):
                words.factor_complexity(w, n)
        else:
            brute = len({w[q : q + n] for q in range(len(w) - n + 1)})
            assert words.factor_complexity(w, n) == brute
