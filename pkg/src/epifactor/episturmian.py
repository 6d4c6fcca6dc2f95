"""Directive words and the palindromic-closure construction.

A directive spec is a run-length encoded infinite letter sequence
Delta = y_1^{d_1} y_2^{d_2} ... with a finite list of prefix runs followed by
a periodic tail of runs.  From it this module builds the palindromic prefixes
u_n (u_1 = empty, u_{n+1} = closure(u_n x_n)), the building blocks
h_n = mu_n(x_{n+1}) under the prepending morphisms psi_a, and binary standard
words.  The limit of the u_n is the standard episturmian word directed by
Delta; every factorization result in this package is phrased over these
objects.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass

from . import words
from .words import ALPHABET, check_letter, palindromic_closure, reverse

Run = tuple[str, int]

DEFAULT_MAX_POSITION = 64
DEFAULT_MAX_WORD_LEN = 2**24


class DirectiveError(ValueError):
    """A directive spec violates the run grammar or run invariants."""


class HorizonError(RuntimeError):
    """A construction ran past its configured position or word-length cap."""


def _check_runs(runs, where: str) -> tuple[Run, ...]:
    out = []
    for idx, run in enumerate(runs):
        letter, exp = run
        check_letter(letter)
        if not isinstance(exp, int) or exp < 1:
            raise DirectiveError(f"{where} run {idx + 1}: exponent must be a positive integer, got {exp!r}")
        out.append((letter, exp))
    return tuple(out)


@dataclass(frozen=True)
class DirectiveSpec:
    """Run-length encoded directive word: finite prefix runs + periodic tail runs.

    Adjacent runs must use distinct letters, across every junction: inside the
    prefix, prefix into tail, inside the tail, and the tail wrapping onto
    itself.  An empty tail is allowed for finite analysis only; a tail is
    never allowed to consist of a single run (its wrap junction would repeat
    the letter forever, and no factorization of interest terminates on a
    periodic single-letter tail).
    """

    prefix_runs: tuple[Run, ...]
    tail_runs: tuple[Run, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix_runs", _check_runs(self.prefix_runs, "prefix"))
        object.__setattr__(self, "tail_runs", _check_runs(self.tail_runs, "tail"))
        if not self.prefix_runs and not self.tail_runs:
            raise DirectiveError("directive needs at least one run")
        pr, tr = self.prefix_runs, self.tail_runs
        for k in range(len(pr) - 1):
            if pr[k][0] == pr[k + 1][0]:
                raise DirectiveError(
                    f"adjacent prefix runs {k + 1} and {k + 2} share letter {pr[k][0]!r}"
                )
        for k in range(len(tr) - 1):
            if tr[k][0] == tr[k + 1][0]:
                raise DirectiveError(
                    f"adjacent tail runs {k + 1} and {k + 2} share letter {tr[k][0]!r}"
                )
        if pr and tr and pr[-1][0] == tr[0][0]:
            raise DirectiveError(
                f"prefix-to-tail junction: runs share letter {tr[0][0]!r}"
            )
        if len(tr) == 1:
            raise DirectiveError(
                f"tail wrap junction: single tail run {tr[0][0]!r} repeats its own letter; "
                "the resulting word is ultimately periodic and its factorizations never "
                "stabilize per factor"
            )
        # len(tr) >= 2 with distinct adjacency; wrap check still needed
        if tr and tr[-1][0] == tr[0][0]:
            raise DirectiveError(
                f"tail wrap junction: last and first tail runs share letter {tr[0][0]!r}"
            )

    # -- run-level access -------------------------------------------------

    @property
    def alphabet(self) -> str:
        """All letters used, as a sorted string."""
        return "".join(sorted({r[0] for r in self.prefix_runs + self.tail_runs}))

    @property
    def tail_alphabet(self) -> str:
        """Letters occurring infinitely often (the tail's letters), sorted."""
        return "".join(sorted({r[0] for r in self.tail_runs}))

    @property
    def is_infinite(self) -> bool:
        return bool(self.tail_runs)

    def require_infinite(self) -> None:
        if not self.tail_runs:
            raise DirectiveError("operation needs an infinite directive (nonempty tail)")

    def run(self, m: int) -> Run:
        """The m-th run (y_m, d_m), 1-indexed, cycling the tail forever."""
        if m < 1:
            raise DirectiveError(f"run index must be >= 1, got {m}")
        if m <= len(self.prefix_runs):
            return self.prefix_runs[m - 1]
        if not self.tail_runs:
            raise DirectiveError(f"run {m} past the end of a finite directive")
        return self.tail_runs[(m - len(self.prefix_runs) - 1) % len(self.tail_runs)]

    def g(self, m: int) -> int:
        """Position where the m-th run starts: d_1 + ... + d_{m-1} + 1."""
        if m < 1:
            raise DirectiveError(f"run index must be >= 1, got {m}")
        return 1 + sum(self.run(t)[1] for t in range(1, m))

    def total_prefix_length(self) -> int:
        """Number of positions covered by the prefix runs alone."""
        return sum(d for _, d in self.prefix_runs)

    def letter(self, n: int) -> str:
        """The n-th directive letter x_n, 1-indexed."""
        if n < 1:
            raise DirectiveError(f"position must be >= 1, got {n}")
        rest = n - 1
        for letter, exp in self.prefix_runs:
            if rest < exp:
                return letter
            rest -= exp
        if not self.tail_runs:
            raise DirectiveError(f"position {n} past the end of a finite directive")
        period = sum(d for _, d in self.tail_runs)
        rest %= period
        for letter, exp in self.tail_runs:
            if rest < exp:
                return letter
            rest -= exp
        raise AssertionError("unreachable")

    def expand(self, n: int) -> str:
        """The first n directive letters x_1 ... x_n as a word."""
        if n < 0:
            raise DirectiveError(f"length must be >= 0, got {n}")
        out = []
        for letter, exp in self.prefix_runs:
            if len(out) >= n:
                break
            out.append(letter * min(exp, n - len(out)))
        total = sum(map(len, out))
        if total < n:
            if not self.tail_runs:
                raise DirectiveError(f"cannot expand {n} positions of a finite directive")
            while total < n:
                for letter, exp in self.tail_runs:
                    take = min(exp, n - total)
                    out.append(letter * take)
                    total += take
                    if total == n:
                        break
        return "".join(out)

    def previous_position(self, n: int) -> int | None:
        """Largest i < n with x_i = x_n, or None when x_n is fresh."""
        x = self.expand(n)
        i = x.rfind(x[-1], 0, n - 1)
        return None if i == -1 else i + 1


# -- directive string grammar ---------------------------------------------

_RUN_RE = re.compile(r"([a-z])(?:\^(\d+))?$")


def _parse_runlist(text: str, where: str) -> tuple[Run, ...]:
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    runs = []
    for part in parts:
        m = _RUN_RE.match(part)
        if not m:
            raise DirectiveError(f"bad {where} run {part!r}: expected letter or letter^exponent")
        letter, exp = m.group(1), m.group(2)
        runs.append((letter, int(exp) if exp is not None else 1))
    return tuple(runs)


def parse_directive(text: str) -> DirectiveSpec:
    """Parse "a^2 b | a b" style directive strings.

    The optional part after "|" is the periodic tail; runs are separated by
    spaces or commas; a missing exponent means 1.
    """
    if not isinstance(text, str) or not text.strip():
        raise DirectiveError("empty directive string")
    if text.count("|") > 1:
        raise DirectiveError("at most one '|' separator allowed")
    head, _, tail = text.partition("|")
    return DirectiveSpec(_parse_runlist(head, "prefix"), _parse_runlist(tail, "tail"))


def format_directive(spec: DirectiveSpec) -> str:
    def fmt(runs):
        return " ".join(l if d == 1 else f"{l}^{d}" for l, d in runs)

    if spec.tail_runs:
        return f"{fmt(spec.prefix_runs)} | {fmt(spec.tail_runs)}".strip()
    return fmt(spec.prefix_runs)


# -- morphisms -------------------------------------------------------------


def psi(a: str, w: str) -> str:
    """The morphism fixing a and turning every other letter x into ax."""
    check_letter(a)
    # str.translate keeps this linear at C speed even on multi-MB words
    table = {ord(c): c if c == a else a + c for c in set(w)}
    return w.translate(table)


def mu(spec: DirectiveSpec, n: int, w: str) -> str:
    """Composition psi_{x_1} o psi_{x_2} o ... o psi_{x_n} applied to w.

    The innermost morphism uses the deepest directive letter x_n, the
    outermost uses x_1; n = 0 is the identity.  Cost grows exponentially in
    n, so this is a reference implementation; hot paths build the same words
    through MorphismTable.
    """
    if n < 0:
        raise DirectiveError(f"morphism depth must be >= 0, got {n}")
    for i in range(n, 0, -1):
        w = psi(spec.letter(i), w)
    return w


# -- cached construction ----------------------------------------------------


class MorphismTable:
    """Memoized u_n / h_n words for one directive spec.

    Construction avoids both palindromic-closure scans and morphism
    expansion: with p = previous position of the letter x_n,

        h_{n-1} = u_n x_n            when x_n is fresh (p undefined)
        h_{n-1} = u_n minus the suffix u_p   otherwise
        u_{n+1} = h_{n-1} u_n

    Tests cross-validate this against the closure and morphism definitions.
    Growth stops at the configured caps; raise them explicitly for big words.
    Cache extension is lock-protected, so concurrent readers are safe.
    """

    def __init__(
        self,
        spec: DirectiveSpec,
        max_position: int = DEFAULT_MAX_POSITION,
        max_word_len: int = DEFAULT_MAX_WORD_LEN,
    ):
        self.spec = spec
        self.max_position = max_position
        self.max_word_len = max_word_len
        self._lock = threading.Lock()
        self._u: list[str] = ["", ""]  # index n >= 1; slot 0 unused
        self._h: list[str] = []
        self._x: list[str] = []  # x_1.. at index 0..
        self._prev: list[int | None] = [None]  # slot 0 unused
        self._last_seen: dict[str, int] = {}

    def _position(self, n: int) -> None:
        # materialize x_1..x_n and previous-occurrence links
        while len(self._x) < n:
            i = len(self._x) + 1
            if i > self.max_position:
                raise HorizonError(
                    f"directive position {i} exceeds max_position={self.max_position}; "
                    "construct MorphismTable with a higher cap to go further"
                )
            c = self.spec.letter(i)
            self._x.append(c)
            self._prev.append(self._last_seen.get(c))
            self._last_seen[c] = i

    def _grow(self, n_target: int) -> None:
        with self._lock:
            while len(self._u) - 1 < n_target:
                n = len(self._u) - 1  # u_n is the latest built
                self._position(n)
                x_n = self._x[n - 1]
                p = self._prev[n]
                u_n = self._u[n]
                if p is None:
                    h = u_n + x_n
                else:
                    h = u_n[: len(u_n) - len(self._u[p])]
                if len(h) + len(u_n) > self.max_word_len:
                    raise HorizonError(
                        f"|u_{n + 1}| = {len(h) + len(u_n)} exceeds max_word_len="
                        f"{self.max_word_len}; construct MorphismTable with a higher cap"
                    )
                self._h.append(h)
                self._u.append(h + u_n)

    def u(self, n: int) -> str:
        """The n-th palindromic prefix, n >= 1; u_1 is empty."""
        if n < 1:
            raise ValueError(f"u index must be >= 1, got {n}")
        self._grow(n)
        return self._u[n]

    def h(self, n: int) -> str:
        """The building block h_n = mu_n(x_{n+1}), n >= 0."""
        if n < 0:
            raise ValueError(f"h index must be >= 0, got {n}")
        self._grow(n + 2)
        return self._h[n]

    def v(self, n: int) -> str:
        """The overlap palindrome u_n with the reversed h_{n-1} suffix removed.

        Defined only when the letter x_n occurred earlier in the directive;
        the result is a palindrome and both a prefix and a suffix of u_{n-1}.
        """
        if n < 1:
            raise ValueError(f"v index must be >= 1, got {n}")
        self._grow(n + 1)
        if self._prev[n] is None:
            raise ValueError(
                f"v undefined at position {n}: letter {self._x[n - 1]!r} has no earlier occurrence"
            )
        return words.strip_suffix(reverse(self._h[n - 1]), self._u[n])

    def previous_position(self, n: int) -> int | None:
        with self._lock:
            self._position(n)
        return self._prev[n]


def standard_prefix(spec: DirectiveSpec, length: int, table: MorphismTable | None = None) -> str:
    """The length-n prefix of the standard word directed by spec.

    Takes the first palindromic prefix u_k that is long enough and cuts it;
    u_{k} is a prefix of u_{k+1}, so the result is prefix-consistent across
    lengths.
    """
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    if length == 0:
        return ""
    spec.require_infinite()
    if table is None:
        table = MorphismTable(
            spec,
            max_position=max(DEFAULT_MAX_POSITION, length + 2),
            max_word_len=max(DEFAULT_MAX_WORD_LEN, 2 * length + 4),
        )
    n = 1
    while len(table.u(n)) < length:
        n += 1
    return table.u(n)[:length]


def sturmian_standard_word(spec: DirectiveSpec, p: int) -> str:
    """Binary standard words s_p built from the spec's run exponents.

    s_{-1} is the letter the directive does not start with, s_0 is the
    directive's first letter, and s_p = (s_{p-1})^{d_p} s_{p-2}.  Orienting
    the base cases by the directive (rather than alphabetically) is what
    makes s_{p-1} coincide with the reversed-prefix blocks h_{g(p)-1} for
    every binary spec; the verification suite pins that down.
    """
    if len(spec.alphabet) != 2:
        raise DirectiveError(f"standard words need a binary spec, alphabet is {spec.alphabet!r}")
    if p < -1:
        raise ValueError(f"standard word index must be >= -1, got {p}")
    first = spec.run(1)[0]
    other = spec.alphabet[0] if first == spec.alphabet[1] else spec.alphabet[1]
    if p == -1:
        return other
    s_prev, s_cur = other, first
    for t in range(1, p + 1):
        d = spec.run(t)[1]
        s_prev, s_cur = s_cur, s_cur * d + s_prev
    return s_cur
