"""Per-index factorization formulas for standard episturmian words.

Instead of scanning the word, both factorization schemes can be read off the
directive runs.  Writing B_m for the reversed building block at the start of
run m (B_m = reverse of h_{g(m)-1}, which begins with y_m):

* z-scheme: z_1 = x_1 and, for k >= 2, z_k is (B_{k-1})^{d_{k-1}} with the
  leading y_{k-1} removed and y_k appended.
* c-scheme: after a short alphabet-introduction transient of j factors, the
  k-th factor is the pure power (B_n)^{d_n} at run n = k - j + i, where i is
  the run by which every letter has appeared.

Every public function cross-checks the formulas against structural
identities of the palindromic prefixes and raises TheoremViolationError on
any mismatch, so a silent wrong answer cannot escape.  The scan-based
engines in factorize/lpf stay the ground truth the test suite compares
against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .episturmian import (
    DEFAULT_MAX_POSITION,
    DEFAULT_MAX_WORD_LEN,
    DirectiveSpec,
    MorphismTable,
    sturmian_standard_word,
)
from .factorize import Factorization
from .words import reverse


class TheoremViolationError(RuntimeError):
    """A closed-form value failed one of its structural consistency checks."""


def _default_table(spec: DirectiveSpec, runs_needed: int) -> MorphismTable:
    positions = spec.g(runs_needed + 1) + 2
    return MorphismTable(
        spec,
        max_position=max(DEFAULT_MAX_POSITION, positions),
        max_word_len=DEFAULT_MAX_WORD_LEN,
    )


def _rev_block(spec: DirectiveSpec, table: MorphismTable, m: int) -> str:
    """Reversed building block at the start of run m; begins with y_m."""
    block = reverse(table.h(spec.g(m) - 1))
    y_m = spec.run(m)[0]
    if block[0] != y_m:
        raise TheoremViolationError(
            f"reversed block of run {m} starts with {block[0]!r}, expected {y_m!r}"
        )
    return block


def alphabet_onset_run(spec: DirectiveSpec) -> int:
    """Smallest run index i such that runs 1..i use every letter of the spec."""
    spec.require_infinite()
    target = set(spec.alphabet)
    seen: set[str] = set()
    t = 0
    while seen != target:
        t += 1
        seen.add(spec.run(t)[0])
    return t


# -- z-scheme ----------------------------------------------------------------


def z_factor_k(spec: DirectiveSpec, k: int, table: MorphismTable | None = None) -> str:
    """The k-th z-factor straight from the directive runs."""
    spec.require_infinite()
    if k < 1:
        raise ValueError(f"factor index must be >= 1, got {k}")
    if k == 1:
        return spec.letter(1)
    if table is None:
        table = _default_table(spec, k)
    y_prev, d_prev = spec.run(k - 1)
    y_k = spec.run(k)[0]
    power = _rev_block(spec, table, k - 1) * d_prev
    return power[1:] + y_k  # power starts with y_prev by the block check


def z_factorization(
    spec: DirectiveSpec, count: int, table: MorphismTable | None = None
) -> Factorization:
    """First `count` z-factors, verified against the palindromic prefixes.

    After k factors the concatenation must equal u_{g(k)} y_k; that identity
    is checked at every step.
    """
    spec.require_infinite()
    if count < 1:
        raise ValueError(f"factor count must be >= 1, got {count}")
    if table is None:
        table = _default_table(spec, count)
    factors: list[str] = []
    cum: list[str] = []
    for k in range(1, count + 1):
        f = z_factor_k(spec, k, table)
        factors.append(f)
        cum.append(f)
        expected = table.u(spec.g(k)) + spec.run(k)[0]
        got = "".join(cum)
        if got != expected:
            raise TheoremViolationError(
                f"z-factors 1..{k} concatenate to a word of length {len(got)}, "
                f"expected u_g({k}) plus the run letter (length {len(expected)})"
                if len(got) != len(expected)
                else f"z-factors 1..{k} do not concatenate to u_g({k}) plus the run letter"
            )
    return Factorization("z", tuple(factors), True, False)


# -- c-scheme ----------------------------------------------------------------


@dataclass(frozen=True)
class CTransient:
    """The c-factors emitted while the alphabet is still being introduced.

    i is the run index by which all letters have appeared, j = len(factors)
    is where the steady regime starts, k0 the alphabet size, and m is 1 when
    the directive starts with a single-letter run (else 0); they satisfy
    j = i + k0 - m.
    """

    factors: tuple[str, ...]
    i: int
    j: int
    k0: int
    m: int

    @property
    def onset(self) -> int:
        """Smallest z-index recoverable from a steady c-factor."""
        return self.i + 2


def c_transient(spec: DirectiveSpec, table: MorphismTable | None = None) -> CTransient:
    """Simulate the alphabet-introduction phase of the c-factorization.

    The state is a run index n plus a one-letter carry: a fresh letter y_n is
    always emitted alone, and the following factor is (B_n)^{d_n} with that
    letter removed from the front; runs whose letter was already seen emit
    the full power.  The simulation stops at n = i + 1 and the result is
    checked against the palindromic prefixes before being returned.
    """
    spec.require_infinite()
    i = alphabet_onset_run(spec)
    if table is None:
        table = _default_table(spec, i + 1)
    y_1, d_1 = spec.run(1)
    factors: list[str] = [y_1]
    m = 1 if d_1 == 1 else 0
    if d_1 > 1:
        factors.append(y_1 * (d_1 - 1))
    n = 2
    carry = ""
    seen = {y_1}
    while not (carry == "" and n - 1 >= i):
        y_n, d_n = spec.run(n)
        if carry == "":
            if y_n not in seen:
                factors.append(y_n)
                carry = y_n
                seen.add(y_n)
            else:
                factors.append(_rev_block(spec, table, n) * d_n)
                n += 1
        else:
            power = _rev_block(spec, table, n) * d_n
            factors.append(power[1:])  # drop the leading y_n (= carry)
            carry = ""
            n += 1
        seen.add(y_n)
    if n != i + 1:
        raise TheoremViolationError(
            f"transient simulation stopped at run {n}, expected {i + 1}"
        )
    result = CTransient(tuple(factors), i, len(factors), len(spec.alphabet), m)
    _check_transient(spec, table, result)
    return result


def _check_transient(spec: DirectiveSpec, table: MorphismTable, t: CTransient) -> None:
    if t.j != t.i + t.k0 - t.m:
        raise TheoremViolationError(
            f"transient length {t.j} != i + k0 - m = {t.i + t.k0 - t.m}"
        )
    y_i = spec.run(t.i)[0]
    if t.factors[-2] != y_i:
        raise TheoremViolationError(
            f"next-to-last transient factor is {t.factors[-2]!r}, expected the bare {y_i!r}"
        )
    if "".join(t.factors[:-2]) != table.u(spec.g(t.i)):
        raise TheoremViolationError(
            "transient factors before the last two do not concatenate to u at the onset run"
        )
    if "".join(t.factors) != table.u(spec.g(t.i + 1)):
        raise TheoremViolationError(
            "transient factors do not concatenate to u just past the onset run"
        )


def c_factor_k(
    spec: DirectiveSpec,
    k: int,
    transient: CTransient | None = None,
    table: MorphismTable | None = None,
) -> str:
    """The k-th c-factor for k at or past the end of the transient.

    Indices k < j vary factor by factor and must be read from c_transient;
    asking for them here is an error.  At k = j the factor is the transient's
    final (front-stripped) power; past j it is the pure power (B_n)^{d_n}
    at run n = k - j + i.
    """
    if transient is None:
        transient = c_transient(spec, table)
    if k < 1:
        raise ValueError(f"factor index must be >= 1, got {k}")
    if k < transient.j:
        raise ValueError(
            f"factor {k} is inside the transient (j = {transient.j}); take it from c_transient"
        )
    if k == transient.j:
        return transient.factors[-1]
    n = k - transient.j + transient.i
    if table is None:
        table = _default_table(spec, n)
    return _rev_block(spec, table, n) * spec.run(n)[1]


def c_factorization(
    spec: DirectiveSpec, count: int, table: MorphismTable | None = None
) -> tuple[Factorization, CTransient]:
    """First `count` c-factors plus the transient they came from."""
    spec.require_infinite()
    if count < 1:
        raise ValueError(f"factor count must be >= 1, got {count}")
    transient = c_transient(spec, table)
    if table is None and count > transient.j:
        table = _default_table(spec, count - transient.j + transient.i)
    factors = list(transient.factors[:count])
    for k in range(transient.j + 1, count + 1):
        factors.append(c_factor_k(spec, k, transient, table))
    return Factorization("c", tuple(factors), True, False), transient


def z_from_c(
    spec: DirectiveSpec,
    k: int,
    transient: CTransient | None = None,
    table: MorphismTable | None = None,
) -> str:
    """Recover the k-th z-factor from a steady c-factor.

    For k >= onset = i + 2, the c-factor at index k + k0 - 1 - m equals
    y_{k-1} z_k with y_k removed from the end; swapping the boundary letters
    yields z_k.  Below the onset the needed c-index would land inside the
    transient, so those ranks are rejected.
    """
    if transient is None:
        transient = c_transient(spec, table)
    if k < transient.onset:
        raise ValueError(
            f"z-from-c needs k >= {transient.onset} "
            f"(the c-index k + {transient.k0 - 1 - transient.m} must clear the transient)"
        )
    c_index = k + transient.k0 - 1 - transient.m
    c_val = c_factor_k(spec, c_index, transient, table)
    y_prev = spec.run(k - 1)[0]
    y_k = spec.run(k)[0]
    if not c_val.startswith(y_prev):
        raise TheoremViolationError(
            f"c-factor {c_index} starts with {c_val[0]!r}, expected {y_prev!r}"
        )
    return c_val[1:] + y_k


# -- binary standard-word reading ------------------------------------------


@dataclass(frozen=True)
class CheckLine:
    name: str
    index: int
    expected: str
    actual: str

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class SturmianCheckReport:
    directive: str
    lines: tuple[CheckLine, ...]

    @property
    def ok(self) -> bool:
        return all(line.ok for line in self.lines)

    def failures(self) -> tuple[CheckLine, ...]:
        return tuple(line for line in self.lines if not line.ok)


def sturmian_c_check(
    spec: DirectiveSpec, p_max: int, table: MorphismTable | None = None
) -> SturmianCheckReport:
    """Confirm the binary reading of the blocks as standard words.

    For a two-letter spec the building blocks are standard words: with
    s_{-1}, s_0 seeded from the directive's first letter and s_p =
    (s_{p-1})^{d_p} s_{p-2}, the block h_{g(p)-1} equals s_{p-1}, and the
    steady c-factors are powers of reversed standard words.  Returns a line
    per comparison rather than raising, so disagreements are inspectable.
    """
    from .episturmian import format_directive

    if len(spec.alphabet) != 2:
        from .episturmian import DirectiveError

        raise DirectiveError(
            f"standard-word reading needs a binary spec, alphabet is {spec.alphabet!r}"
        )
    if p_max < 1:
        raise ValueError(f"p_max must be >= 1, got {p_max}")
    spec.require_infinite()
    if table is None:
        table = _default_table(spec, p_max + 1)
    lines: list[CheckLine] = []
    for p in range(1, p_max + 1):
        lines.append(
            CheckLine(
                "block-equals-standard-word",
                p,
                expected=sturmian_standard_word(spec, p - 1),
                actual=table.h(spec.g(p) - 1),
            )
        )
    transient = c_transient(spec, table)
    j, m = transient.j, transient.m
    for k in range(j + 1, p_max + 2 - m + 1):
        s = sturmian_standard_word(spec, k + m - 3)
        d = spec.run(k + m - 2)[1]
        lines.append(
            CheckLine(
                "steady-factor-is-power-of-reversed-standard-word",
                k,
                expected=reverse(s) * d,
                actual=c_factor_k(spec, k, transient, table),
            )
        )
    return SturmianCheckReport(format_directive(spec), tuple(lines))
