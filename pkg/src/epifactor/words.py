"""Primitive operations on finite words.

A word is a plain ``str`` over a lowercase ASCII alphabet, one character per
letter; the empty string is the empty word.  Everything here is a pure
function of immutable values, so all of it is thread-safe.
"""

from __future__ import annotations

ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def check_word(w: str) -> str:
    """Validate the text form of a word (possibly empty) and return it."""
    if not isinstance(w, str):
        raise TypeError(f"word must be str, got {type(w).__name__}")
    for ch in w:
        if ch not in ALPHABET:
            raise ValueError(f"invalid letter {ch!r}: words use 'a'..'z'")
    return w


def check_letter(a: str) -> str:
    if not isinstance(a, str) or len(a) != 1 or a not in ALPHABET:
        raise ValueError(f"invalid letter {a!r}: expected one of 'a'..'z'")
    return a


def reverse(w: str) -> str:
    """The mirror image of w."""
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


# Above this length the quadratic scan starts to hurt; switch to the
# linear-time border computation (see _pal).  Both paths are cross-checked
# against each other and against brute force in the test suite.
_PAL_SUFFIX_FAST_THRESHOLD = 512


def longest_palindromic_suffix(w: str) -> str:
    """The longest suffix of w that is a palindrome (ε counts, so one exists)."""
    n = len(w)
    if n > _PAL_SUFFIX_FAST_THRESHOLD:
        from ._pal import longest_palindromic_suffix_length

        return w[n - longest_palindromic_suffix_length(w) :]
    for start in range(n):
        s = w[start:]
        if s == s[::-1]:
            return s
    return ""


def palindromic_closure(w: str) -> str:
    """Shortest palindrome that has w as a prefix.

    Split w = p·q where q is the longest palindromic suffix; the closure is
    then w followed by p reversed.  Minimality: any shorter palindrome with
    prefix w would exhibit a longer palindromic suffix of w.
    """
    n = len(w)
    q = longest_palindromic_suffix(w)
    return w + w[: n - len(q)][::-1]


def count_occurrences(p: str, t: str) -> int:
    """Number of start positions of p in t, overlapping occurrences included."""
    if not p:
        raise ValueError("empty pattern has no well-defined occurrence count")
    count = 0
    pos = t.find(p)
    while pos != -1:
        count += 1
        pos = t.find(p, pos + 1)
    return count


def is_prefix(v: str, w: str) -> bool:
    return w.startswith(v)


def is_suffix(v: str, w: str) -> bool:
    return w.endswith(v)


def is_factor(v: str, w: str) -> bool:
    return v in w


def strip_prefix(v: str, w: str) -> str:
    """Remove the prefix v from w; error if v is not actually a prefix."""
    if not w.startswith(v):
        raise ValueError(f"{v!r} is not a prefix of {w!r}")
    return w[len(v):]


def strip_suffix(v: str, w: str) -> str:
    """Remove the suffix v from w; error if v is not actually a suffix."""
    if not w.endswith(v):
        raise ValueError(f"{v!r} is not a suffix of {w!r}")
    return w[: len(w) - len(v)]


def is_primitive(w: str) -> bool:
    """True iff w is not u^m for any shorter u and m >= 2.

    Uses the classic rotation trick: w is a proper power exactly when w
    occurs in (w+w) at some interior position.
    """
    if not w:
        raise ValueError("primitivity is undefined for the empty word")
    return (w + w).find(w, 1, 2 * len(w) - 1) == -1


def are_conjugate(u: str, v: str) -> bool:
    """True iff u and v are rotations of one another."""
    return len(u) == len(v) and v in u + u


def factor_complexity(w: str, n: int) -> int:
    """Number of distinct length-n factors of w; n must not exceed |w|."""
    if n < 0 or n > len(w):
        raise ValueError(f"factor length {n} out of range for word of length {len(w)}")
    if n == 0:
        return 1
    return len({w[q : q + n] for q in range(len(w) - n + 1)})
