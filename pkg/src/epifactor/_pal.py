"""Linear-time longest-palindromic-suffix via a border computation.

A suffix of w is a palindrome exactly when it equals the matching prefix of
reverse(w), so the longest palindromic suffix of w is the longest border
between reverse(w) and w.  That border is the final value of the classic
prefix function of reverse(w) + sep + w, with a separator that cannot occur
in a word.  Kept out of words.py so the base module stays import-light; the
kernel is JIT-compiled on first use.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _final_border(t):  # pragma: no cover - exercised via the public wrapper
    m = t.shape[0]
    pi = np.zeros(m, np.int32)
    k = 0
    for i in range(1, m):
        c = t[i]
        while k > 0 and t[k] != c:
            k = pi[k - 1]
        if t[k] == c:
            k += 1
        pi[i] = k
    return pi[m - 1]


def longest_palindromic_suffix_length(w: str) -> int:
    if not w:
        return 0
    combined = (w[::-1] + "\x00" + w).encode("ascii")
    t = np.frombuffer(combined, dtype=np.uint8).astype(np.int32)
    return int(_final_border(t))
