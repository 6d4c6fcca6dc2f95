"""Greedy left-to-right factorizations of finite words.

Two schemes are supported.  Scanning a word left to right with history
w[0:q] and remainder w[q:]:

* scheme "z": the factor at q is the shortest prefix of the remainder that
  occurs exactly once in the text up to and including itself, i.e. the
  shortest prefix with no occurrence starting before q.  Its length is
  lpf(q) + 1 where lpf(q) is the longest-previous-factor length at q.
* scheme "c": the factor at q is the longest prefix of the remainder with an
  occurrence starting before q (the earlier occurrence may overlap into the
  factor), or a single fresh letter if even w[q] never occurred.  Its length
  is max(lpf(q), 1).

End-of-input conventions: a z-run whose final prefix never becomes unique is
emitted as an incomplete last factor (last_complete=False); a c-factor whose
match reaches the last position gets cut_by_input_end=True, meaning it could
extend if the word continued.  All other factors are stable: extending the
input never changes them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

SCHEMES = ("z", "c")


def _occurs_before(w: str, q: int, length: int) -> bool:
    """True iff w[q:q+length] also starts at some position < q.

    Such an occurrence lies entirely inside w[0 : q+length-1], hence the
    search window; it is allowed to overlap into the factor itself.
    """
    return w.find(w[q : q + length], 0, q + length - 1) != -1


def _match_length(w: str, q: int) -> int:
    """lpf(q): the largest L with w[q:q+L] starting somewhere before q.

    The predicate "length L occurs before" is monotone (shorten an occurrence
    and it still occurs), so galloping then bisecting it is equivalent to the
    literal length-by-length scan of the definition.
    """
    n = len(w)
    if q == 0 or not _occurs_before(w, q, 1):
        return 0
    lo = 1  # occurs
    hi = 2
    while q + hi <= n and _occurs_before(w, q, hi):
        lo = hi
        hi *= 2
    hi = min(hi, n - q)  # lengths > lo up to hi are candidates
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _occurs_before(w, q, mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


@dataclass(frozen=True)
class Factorization:
    """An ordered factor list plus end-of-input bookkeeping.

    When produced by a full run, concatenating the factors reproduces the
    input; engines stopped early by max_factors return the already-final
    factors of a proper prefix instead.
    """

    scheme: str
    factors: tuple[str, ...]
    last_complete: bool
    cut_by_input_end: bool

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {self.scheme!r}, expected one of {SCHEMES}")
        if any(not f for f in self.factors):
            raise ValueError("factors must be nonempty words")

    @property
    def word(self) -> str:
        return "".join(self.factors)

    @property
    def complete_count(self) -> int:
        """Factors that satisfy their scheme's defining condition.

        Every c-factor is maximal within the finite word, so all count; a cut
        flag only marks the last one as possibly extendable.  An incomplete
        z-remainder does not count.
        """
        if self.scheme == "z" and not self.last_complete:
            return len(self.factors) - 1
        return len(self.factors)

    @property
    def trusted_factors(self) -> tuple[str, ...]:
        """Factors guaranteed to stay factors under any extension of the input."""
        drop = (self.scheme == "z" and not self.last_complete) or (
            self.scheme == "c" and self.cut_by_input_end
        )
        return self.factors[:-1] if drop else self.factors

    def to_json_dict(self) -> dict:
        return {
            "scheme": self.scheme,
            "input_length": len(self.word),
            "factors": list(self.factors),
            "last_complete": self.last_complete,
            "cut_by_input_end": self.cut_by_input_end,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def factorization_from_json(data: dict | str) -> Factorization:
    if isinstance(data, str):
        data = json.loads(data)
    f = Factorization(
        scheme=data["scheme"],
        factors=tuple(data["factors"]),
        last_complete=bool(data["last_complete"]),
        cut_by_input_end=bool(data["cut_by_input_end"]),
    )
    if "input_length" in data and data["input_length"] != len(f.word):
        raise ValueError(
            f"input_length {data['input_length']} does not match factors (total {len(f.word)})"
        )
    return f


def z_factorize(w: str, max_factors: int | None = None) -> Factorization:
    """Parse w into shortest-unique-prefix factors.

    With max_factors the run stops early and returns only already-final
    factors (useful when only the head of a huge word matters).
    """
    if not w:
        raise ValueError("cannot factorize the empty word")
    n = len(w)
    factors: list[str] = []
    q = 0
    complete = True
    while q < n:
        if max_factors is not None and len(factors) >= max_factors:
            break
        length = _match_length(w, q) + 1
        if q + length > n:
            # no prefix of the remainder is unique; emit the dangling rest
            factors.append(w[q:])
            complete = False
            q = n
        else:
            factors.append(w[q : q + length])
            q += length
    return Factorization("z", tuple(factors), complete, not complete)


def c_factorize(w: str, max_factors: int | None = None) -> Factorization:
    """Parse w into longest-previously-seen-prefix factors."""
    if not w:
        raise ValueError("cannot factorize the empty word")
    n = len(w)
    factors: list[str] = []
    q = 0
    cut = False
    while q < n:
        if max_factors is not None and len(factors) >= max_factors:
            break
        length = _match_length(w, q)
        take = max(length, 1)
        factors.append(w[q : q + take])
        q += take
        if q == n:
            cut = length >= 1
    return Factorization("c", tuple(factors), True, cut)


def factor_counts(w: str, engine: str = "auto") -> tuple[int, int]:
    """(complete z-factor count, c-factor count) for w.

    The c count includes a final cut factor: it is still a maximal factor of
    the finite word.  engine picks the scanners: "naive", "lpf", or "auto"
    (lpf for words past a few hundred letters).
    """
    if not w:
        raise ValueError("cannot factorize the empty word")
    if engine == "auto":
        engine = "naive" if len(w) <= 512 else "lpf"
    if engine == "naive":
        z, c = z_factorize(w), c_factorize(w)
    elif engine == "lpf":
        from . import lpf

        z = lpf.factorize_via_lpf(w, "z")
        c = lpf.factorize_via_lpf(w, "c")
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return z.complete_count, len(c.factors)
