"""Directive-spec corpora and the named verification properties.

corpus_specs enumerates every directive spec in a small exhaustive space
(bounded prefix runs and exponents, tail = a cyclic rotation of the
alphabet at exponent 1).  run_verify then drives named property checks over
such a corpus; each property returns failure strings, so a report can show
exactly which spec and index disagreed and on what words.

The construction checks are anchored independently of the fast recursion:
ConstructionDefs rebuilds every palindromic prefix by literal palindromic
closure and grounds the building blocks in the morphism definition, and only
then are the recursion table and the block identities compared against those
definitions.  The closed-form checks compare formula output against the
scan-based oracles on materialized prefixes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import closed_form
from .episturmian import DirectiveSpec, MorphismTable, format_directive, mu
from .factorize import Factorization, c_factorize, factor_counts, z_factorize
from .words import ALPHABET, is_palindrome, is_prefix, is_primitive, is_suffix, reverse


# -- corpus enumeration ------------------------------------------------------


def corpus_specs(
    alphabet_size: int = 2, max_prefix_runs: int = 4, max_exp: int = 3
) -> tuple[DirectiveSpec, ...]:
    """Every spec with <= max_prefix_runs prefix runs, exponents <= max_exp.

    Tails are the cyclic rotations of the alphabet, all at exponent 1;
    prefix run letters range over the whole alphabet with distinct adjacent
    letters, and the last prefix run must not collide with the tail start.
    Order is deterministic.
    """
    if not 2 <= alphabet_size <= len(ALPHABET):
        raise ValueError(f"alphabet size must be in 2..{len(ALPHABET)}, got {alphabet_size}")
    if max_prefix_runs < 0 or max_exp < 1:
        raise ValueError("need max_prefix_runs >= 0 and max_exp >= 1")
    letters = ALPHABET[:alphabet_size]
    specs: list[DirectiveSpec] = []
    for r in range(alphabet_size):
        rotation = letters[r:] + letters[:r]
        tail = tuple((c, 1) for c in rotation)
        for runs in range(max_prefix_runs + 1):
            for seq in itertools.product(letters, repeat=runs):
                if any(seq[t] == seq[t + 1] for t in range(runs - 1)):
                    continue
                if seq and seq[-1] == rotation[0]:
                    continue
                for exps in itertools.product(range(1, max_exp + 1), repeat=runs):
                    specs.append(DirectiveSpec(tuple(zip(seq, exps)), tail))
    return tuple(specs)


@dataclass(frozen=True)
class Limits:
    """Horizons and sample sizes for one verification run."""

    max_positions: int = 30  # directive positions for the construction suites
    max_u_len: int = 1 << 20  # stop materializing once u_n passes this
    morphism_anchor_len: int = 1 << 16  # ground h_n in mu up to this block size
    z_count_binary: int = 8  # closed-form z-factors compared on 2-letter specs
    z_count_ternary: int = 6  # and on larger alphabets
    z_from_c_window: int = 8  # ranks checked past the recovery onset
    standard_word_depth: int = 10  # p range for the binary standard-word reading
    structure_window: int = 192  # palindromic window for factor-set checks
    complexity_lengths: int = 16  # factor counts are checked exactly up to this length
    complexity_window_cap: int = 2048  # stop growing the complexity window here
    ratio_min_len: int = 128  # shortest prefix used for the factor-count ratio
    exhaustive_max_len: int = 12  # engine agreement: all binary words this long
    random_words: int = 500  # engine agreement: random sample size
    random_max_len: int = 2000
    seed: int = 0

    def z_count(self, spec: DirectiveSpec) -> int:
        return self.z_count_binary if len(spec.alphabet) == 2 else self.z_count_ternary


# -- definition-anchored construction ---------------------------------------


@dataclass(frozen=True)
class ConstructionDefs:
    """Palindromic prefixes rebuilt from the closure definition alone.

    u[n] holds the n-th palindromic prefix for 1 <= n <= n_max + 1, built by
    literally iterating u_{n+1} = closure(u_n x_n); h[t] = u_{t+2} with the
    u_{t+1} suffix removed is then the t-th building block as forced by the
    product identity, with no reference to the recursion table under test.
    Positions stop at the earlier of the position cap and the first n whose
    u_n exceeds the length cap (u_{n+1} itself may overshoot once).
    """

    spec: DirectiveSpec
    n_max: int
    x: tuple[str, ...]
    prev: tuple[int | None, ...]
    u: tuple[str, ...]
    h: tuple[str, ...]


def build_defs(spec: DirectiveSpec, limits: Limits) -> ConstructionDefs:
    from .words import palindromic_closure

    spec.require_infinite()
    x: list[str] = [""]
    prev: list[int | None] = [None]
    u: list[str] = ["", ""]
    h: list[str] = []
    last_seen: dict[str, int] = {}
    n = 0
    while True:
        n += 1
        if n > limits.max_positions or len(u[n]) > limits.max_u_len:
            n -= 1
            break
        x_n = spec.letter(n)
        x.append(x_n)
        prev.append(last_seen.get(x_n))
        last_seen[x_n] = n
        closure = palindromic_closure(u[n] + x_n)
        if not closure.endswith(u[n]):
            raise AssertionError(f"closure of u_{n} x_{n} does not end with u_{n}")
        h.append(closure[: len(closure) - len(u[n])])
        u.append(closure)
    return ConstructionDefs(spec, n, tuple(x), tuple(prev), tuple(u), tuple(h))


class SpecContext:
    """Per-spec cache shared by the property checks."""

    def __init__(self, spec: DirectiveSpec, limits: Limits):
        self.spec = spec
        self.limits = limits
        self.directive = format_directive(spec)
        self._cache: dict[str, object] = {}

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def defs(self) -> ConstructionDefs:
        return self._get("defs", lambda: build_defs(self.spec, self.limits))

    @property
    def table(self) -> MorphismTable:
        return self._get("table", lambda: MorphismTable(self.spec))

    @property
    def z_count(self) -> int:
        return self.limits.z_count(self.spec)

    @property
    def prefix(self) -> str:
        """Prefix long enough to validate z_count closed-form z-factors."""
        return self._get("prefix", lambda: self.table.u(self.spec.g(self.z_count + 2)))

    @property
    def oracle_z(self) -> Factorization:
        return self._get("oracle_z", lambda: z_factorize(self.prefix, max_factors=self.z_count))

    @property
    def c_prefix(self) -> str:
        """Prefix long enough that stable oracle c-factors reach the steady
        regime; a late alphabet onset needs more runs than the z window."""

        def build():
            runs = max(self.z_count + 2, self.transient.i + 5)
            return self.table.u(self.spec.g(runs))

        return self._get("c_prefix", build)

    @property
    def oracle_c(self) -> Factorization:
        return self._get("oracle_c", lambda: c_factorize(self.c_prefix))

    @property
    def transient(self) -> closed_form.CTransient:
        return self._get("transient", lambda: closed_form.c_transient(self.spec, self.table))

    @property
    def closed_z(self) -> Factorization:
        return self._get(
            "closed_z", lambda: closed_form.z_factorization(self.spec, self.z_count, self.table)
        )

    @property
    def closed_c_factors(self) -> tuple[str, ...]:
        """Closed-form c-factors until they cover the whole c prefix."""

        def build():
            factors = list(self.transient.factors)
            total = sum(map(len, factors))
            k = self.transient.j
            while total < len(self.c_prefix):
                k += 1
                f = closed_form.c_factor_k(self.spec, k, self.transient, self.table)
                factors.append(f)
                total += len(f)
            return tuple(factors)

        return self._get("closed_c", build)

    def factor_profile(self, window: str, lengths: range):
        """factor set and follower map per length, within one window word."""
        key = ("profile", window, lengths.start, lengths.stop)

        def build():
            out = {}
            for ln in lengths:
                facs: set[str] = set()
                followers: dict[str, set[str]] = {}
                for q in range(len(window) - ln + 1):
                    f = window[q : q + ln]
                    facs.add(f)
                    if q + ln < len(window):
                        followers.setdefault(f, set()).add(window[q + ln])
                out[ln] = (facs, followers)
            return out

        return self._get(key, build)

    def palindromic_window(self, at_least: int, at_most: int) -> str:
        """The largest u_n with |u_n| <= at_most (or the first >= at_least)."""
        n = 1
        best = self.table.u(1)
        while True:
            n += 1
            w = self.table.u(n)
            if len(w) > at_most and len(best) >= at_least:
                return best
            best = w
            if len(best) >= at_most:
                return best


# -- construction properties -------------------------------------------------


def prop_construction_consistency(ctx: SpecContext) -> list[str]:
    """Recursion-table words equal the closure-built definitions."""
    d, t = ctx.defs, ctx.table
    fails = []
    for n in range(1, d.n_max + 2):
        if t.u(n) != d.u[n]:
            fails.append(f"u_{n}: table != closure definition")
    for k in range(d.n_max):
        if t.h(k) != d.h[k]:
            fails.append(f"h_{k}: table != closure-forced block")
    for n in range(1, d.n_max + 1):
        if t.previous_position(n) != d.prev[n]:
            fails.append(f"previous position of {n}: table {t.previous_position(n)} != {d.prev[n]}")
    return fails


def prop_block_morphism(ctx: SpecContext) -> list[str]:
    """h_t equals the composed prepending morphisms applied to x_{t+1}."""
    d = ctx.defs
    fails = []
    for t in range(d.n_max):
        if len(d.h[t]) > ctx.limits.morphism_anchor_len:
            break
        if mu(ctx.spec, t, d.x[t + 1]) != d.h[t]:
            fails.append(f"h_{t} != morphism composition on x_{t + 1}")
    return fails


def prop_block_from_prefixes(ctx: SpecContext) -> list[str]:
    """h_{n-1} is u_n x_n for a fresh letter, else u_n minus the u_{P(n)} suffix."""
    d = ctx.defs
    fails = []
    for n in range(1, d.n_max + 1):
        p = d.prev[n]
        if p is None:
            if d.h[n - 1] != d.u[n] + d.x[n]:
                fails.append(f"h_{n - 1} != u_{n} x_{n} (fresh letter)")
        elif d.h[n - 1] + d.u[p] != d.u[n]:
            fails.append(f"h_{n - 1} u_{p} != u_{n}")
    return fails


def prop_block_chain(ctx: SpecContext) -> list[str]:
    """With p = P(n) defined, h_{n-1} = h_{n-2} h_{n-3} ... h_{p-1}."""
    d = ctx.defs
    fails = []
    for n in range(2, d.n_max + 1):
        p = d.prev[n]
        if p is None:
            continue
        if d.h[n - 1] != "".join(d.h[t] for t in range(n - 2, p - 2, -1)):
            fails.append(f"h_{n - 1} != product of h_{n - 2}..h_{p - 1}")
    return fails


def prop_prefix_product(ctx: SpecContext) -> list[str]:
    """u_{n+1} = h_{n-1}...h_1 h_0 and its reversed form, plus the recursion."""
    d = ctx.defs
    fails = []
    for n in range(1, d.n_max + 1):
        target = d.u[n + 1]
        if target != d.h[n - 1] + d.u[n]:
            fails.append(f"u_{n + 1} != h_{n - 1} u_{n}")
        if target != "".join(d.h[t] for t in range(n - 1, -1, -1)):
            fails.append(f"u_{n + 1} != descending block product at n={n}")
        if target != "".join(reverse(d.h[t]) for t in range(n)):
            fails.append(f"u_{n + 1} != ascending reversed block product at n={n}")
    return fails


def prop_block_run_constancy(ctx: SpecContext) -> list[str]:
    """Blocks repeat exactly while the directive letter repeats.

    h_n = h_{n-1} iff x_{n+1} = x_n; when the letter changes, u_n is a proper
    prefix of h_n; and each block is a prefix of the next.
    """
    d = ctx.defs
    fails = []
    for n in range(1, d.n_max):
        same = d.h[n] == d.h[n - 1]
        if same != (d.x[n + 1] == d.x[n]):
            fails.append(f"h_{n} repetition disagrees with directive letters at {n}")
        if d.x[n + 1] != d.x[n]:
            if not (len(d.u[n]) < len(d.h[n]) and d.h[n].startswith(d.u[n])):
                fails.append(f"u_{n} is not a proper prefix of h_{n}")
        if not d.h[n].startswith(d.h[n - 1]):
            fails.append(f"h_{n - 1} is not a prefix of h_{n}")
    return fails


def prop_overlap_palindrome(ctx: SpecContext) -> list[str]:
    """Structure of u_n around the reversed block, when x_n occurred before.

    With p = P(n): h_{n-1} starts u_n, its reversal ends u_n, and the head
    left over after removing that reversed suffix is exactly u_p, hence a
    palindrome that starts and ends u_{n-1}; u_n is a suffix of u_{n-1}
    followed by the reversed block; and when the directive letter also
    changed at n, u_n is a suffix of the reversed block's square and u_{n+1}
    of its cube.
    """
    d = ctx.defs
    fails = []
    for n in range(2, d.n_max + 1):
        p = d.prev[n]
        if p is None:
            continue
        hb = d.h[n - 1]
        rb = reverse(hb)
        un = d.u[n]
        if not un.startswith(hb):
            fails.append(f"h_{n - 1} does not start u_{n}")
        if not un.endswith(rb):
            fails.append(f"reversed h_{n - 1} does not end u_{n}")
            continue
        v = un[: len(un) - len(rb)]
        if v != d.u[p]:
            fails.append(f"u_{n} minus reversed h_{n - 1} != u_{p}")
        if not is_palindrome(v):
            fails.append(f"u_{n} minus reversed h_{n - 1} is not a palindrome")
        if not (is_prefix(v, d.u[n - 1]) and is_suffix(v, d.u[n - 1])):
            fails.append(f"overlap palindrome at {n} does not start and end u_{n - 1}")
        if not (d.u[n - 1] + rb).endswith(un):
            fails.append(f"u_{n} is not a suffix of u_{n - 1} plus reversed h_{n - 1}")
        if d.x[n] != d.x[n - 1]:
            if not (rb * 2).endswith(un):
                fails.append(f"u_{n} is not a suffix of the reversed h_{n - 1} squared")
            if not (rb * 3).endswith(d.u[n + 1]):
                fails.append(f"u_{n + 1} is not a suffix of the reversed h_{n - 1} cubed")
    return fails


def prop_run_powers(ctx: SpecContext) -> list[str]:
    """Run-level powers of the blocks assemble the palindromic prefixes.

    u_{g(m+1)} equals the run block to the d_m on the left of u_{g(m)}, the
    reversed block to the d_m on its right, and the full product over runs
    in both orientations; u_{g(m)-1} is a proper prefix of the run block for
    m >= 2; u_{g(m)} is a suffix of the reversed block's square; and
    u_{g(m+1)} is a suffix of its (d_m + 2)-th power.
    """
    d, spec = ctx.defs, ctx.spec
    fails = []
    m = 0
    while True:
        m += 1
        if spec.g(m + 1) > d.n_max + 1:
            break
        gm, gm1 = spec.g(m), spec.g(m + 1)
        d_m = spec.run(m)[1]
        block = d.h[gm - 1]
        rb = reverse(block)
        target = d.u[gm1]
        if target != block * d_m + d.u[gm]:
            fails.append(f"u_g({m + 1}) != run-{m} block power before u_g({m})")
        if target != d.u[gm] + rb * d_m:
            fails.append(f"u_g({m + 1}) != u_g({m}) before reversed run-{m} block power")
        if target != "".join(d.h[spec.g(t) - 1] * spec.run(t)[1] for t in range(m, 0, -1)):
            fails.append(f"u_g({m + 1}) != descending product of run block powers")
        if target != "".join(
            reverse(d.h[spec.g(t) - 1]) * spec.run(t)[1] for t in range(1, m + 1)
        ):
            fails.append(f"u_g({m + 1}) != ascending product of reversed run block powers")
        if m >= 2:
            u_before = d.u[gm - 1]
            if not (len(u_before) < len(block) and block.startswith(u_before)):
                fails.append(f"u at g({m})-1 is not a proper prefix of the run-{m} block")
        if not (rb * 2).endswith(d.u[gm]):
            fails.append(f"u_g({m}) is not a suffix of the reversed run-{m} block squared")
        if not (rb * (d_m + 2)).endswith(target):
            fails.append(
                f"u_g({m + 1}) is not a suffix of the reversed run-{m} block to the d+2"
            )
    return fails


def prop_block_primitivity(ctx: SpecContext) -> list[str]:
    d = ctx.defs
    fails = []
    for t in range(d.n_max):
        if not is_primitive(d.h[t]):
            fails.append(f"h_{t} is not primitive")
        if not is_primitive(reverse(d.h[t])):
            fails.append(f"reversed h_{t} is not primitive")
    return fails


# -- word-structure properties ------------------------------------------------


def prop_reversal_closed_factors(ctx: SpecContext) -> list[str]:
    """Factor sets of a palindromic window are closed under reversal."""
    window = ctx.palindromic_window(32, ctx.limits.structure_window)
    top = max(1, len(window) // 4)
    profile = ctx.factor_profile(window, range(1, top + 1))
    fails = []
    for ln, (facs, _) in profile.items():
        if facs != {reverse(f) for f in facs}:
            fails.append(f"length-{ln} factor set of a {len(window)}-letter window not reversal-closed")
    return fails


def prop_right_special_unique(ctx: SpecContext) -> list[str]:
    """At most one factor per length extends to the right in multiple ways."""
    window = ctx.palindromic_window(32, ctx.limits.structure_window)
    top = max(1, len(window) // 4)
    profile = ctx.factor_profile(window, range(1, top + 1))
    fails = []
    for ln, (_, followers) in profile.items():
        special = [f for f, nxt in followers.items() if len(nxt) >= 2]
        if len(special) > 1:
            fails.append(f"{len(special)} right-special factors of length {ln}")
    return fails


def prop_factor_complexity(ctx: SpecContext) -> list[str]:
    """Distinct factor counts equal (letters - 1) * length + 1 at every length.

    The count law holds at all lengths when the tail reuses the whole
    alphabet, which covers every built-in corpus spec; other directives are
    outside the claim and skipped.  A finite window can only miss factors of
    the full word, never invent them, so the window grows until the top
    length reaches its expected count (a letter that recurs late in the
    directive pushes this out), then all lengths are confirmed on the window
    that got there.  A count above the law fails at any window size; a
    window hitting the cap while still short fails too, naming the cap.
    """
    spec, limits = ctx.spec, ctx.limits
    if set(spec.tail_alphabet) != set(spec.alphabet):
        return []
    k = len(spec.alphabet)
    top = limits.complexity_lengths
    expect_top = (k - 1) * top + 1
    n = 2
    window = ctx.table.u(n)
    while True:
        if len(window) >= 4 * top:
            got = len({window[q : q + top] for q in range(len(window) - top + 1)})
            if got == expect_top:
                break
            if got > expect_top:
                return [f"{got} distinct factors of length {top}, the law allows {expect_top}"]
            if len(window) >= limits.complexity_window_cap:
                return [
                    f"still {got} of {expect_top} factors of length {top} at the "
                    f"window cap {limits.complexity_window_cap}"
                ]
        n += 1
        window = ctx.table.u(n)
    fails = []
    for ln in range(1, top + 1):
        got = len({window[q : q + ln] for q in range(len(window) - ln + 1)})
        if got != (k - 1) * ln + 1:
            fails.append(f"{got} distinct factors of length {ln}, the law says {(k - 1) * ln + 1}")
    return fails


# -- closed-form properties ----------------------------------------------------


def prop_z_theorem(ctx: SpecContext) -> list[str]:
    """Closed-form z-factors equal the scan oracle's complete factors."""
    closed = ctx.closed_z.factors
    oracle = ctx.oracle_z
    fails = []
    if not oracle.last_complete or len(oracle.factors) < ctx.z_count:
        fails.append(
            f"oracle produced only {len(oracle.factors)} complete z-factors of {ctx.z_count}"
        )
    for k, (a, b) in enumerate(zip(closed, oracle.factors), start=1):
        if a != b:
            fails.append(f"z-factor {k}: closed {a!r} != oracle {b!r}")
    return fails


def prop_c_theorem(ctx: SpecContext) -> list[str]:
    """Closed-form c-factors equal the scan oracle's trusted factors."""
    closed = ctx.closed_c_factors
    t = ctx.transient
    trusted = ctx.oracle_c.trusted_factors
    fails = []
    if t.j != t.i + t.k0 - t.m:
        fails.append(f"transient length {t.j} != i + k0 - m")
    if len(trusted) <= t.j:
        fails.append(
            f"only {len(trusted)} stable oracle c-factors; steady regime (past {t.j}) unexercised"
        )
    if len(closed) < len(trusted):
        fails.append(f"closed c-factors stop at {len(closed)} < {len(trusted)} oracle factors")
    for k, (a, b) in enumerate(zip(closed, trusted), start=1):
        if a != b:
            fails.append(f"c-factor {k}: closed {a!r} != oracle {b!r}")
    return fails


def prop_z_prefix_identity(ctx: SpecContext) -> list[str]:
    """Oracle z-factors concatenate to u_{g(k)} plus the k-th run letter."""
    spec = ctx.spec
    fails = []
    cum = ""
    for k, factor in enumerate(ctx.oracle_z.factors, start=1):
        cum += factor
        if cum != ctx.table.u(spec.g(k)) + spec.run(k)[0]:
            fails.append(f"z-factors 1..{k} != u_g({k}) plus run letter")
    return fails


def prop_c_prefix_identity(ctx: SpecContext) -> list[str]:
    """Oracle c-factors concatenate to palindromic prefixes past the transient."""
    spec, t = ctx.spec, ctx.transient
    trusted = ctx.oracle_c.trusted_factors
    fails = []
    if len(trusted) >= t.j - 2 and "".join(trusted[: t.j - 2]) != ctx.table.u(spec.g(t.i)):
        fails.append(f"c-factors 1..{t.j - 2} != u_g(i)")
    if len(trusted) >= t.j - 1 and trusted[t.j - 2] != spec.run(t.i)[0]:
        fails.append("the factor before the transient boundary is not the bare run letter")
    for k in range(t.j, len(trusted) + 1):
        if "".join(trusted[:k]) != ctx.table.u(spec.g(k - t.j + t.i + 1)):
            fails.append(f"c-factors 1..{k} != u_g({k - t.j + t.i + 1})")
    return fails


def prop_z_nonoccurrence(ctx: SpecContext) -> list[str]:
    """Each z-factor past the first misses the palindromic prefix it extends."""
    spec = ctx.spec
    fails = []
    for k in range(2, ctx.z_count + 1):
        z_k = closed_form.z_factor_k(spec, k, ctx.table)
        if z_k in ctx.table.u(spec.g(k)):
            fails.append(f"z-factor {k} occurs inside u_g({k})")
    return fails


def prop_c_nonoccurrence(ctx: SpecContext) -> list[str]:
    """The steady block power plus the next run letter misses its prefix."""
    spec, t = ctx.spec, ctx.transient
    fails = []
    for n in range(t.i, t.i + ctx.z_count):
        power = reverse(ctx.table.h(spec.g(n) - 1)) * spec.run(n)[1]
        word = power + spec.run(n + 1)[0]
        if word in ctx.table.u(spec.g(n + 1)):
            fails.append(f"steady run-{n} power plus next letter occurs inside u_g({n + 1})")
    return fails


def prop_z_from_c_agreement(ctx: SpecContext) -> list[str]:
    """Recovering z-factors through the c-sequence matches the direct formula."""
    t = ctx.transient
    fails = []
    for k in range(t.onset, t.onset + ctx.limits.z_from_c_window + 1):
        via_c = closed_form.z_from_c(ctx.spec, k, t, ctx.table)
        direct = closed_form.z_factor_k(ctx.spec, k, ctx.table)
        if via_c != direct:
            fails.append(f"z-factor {k} via c-sequence {via_c!r} != direct {direct!r}")
    return fails


def prop_sturmian_standard(ctx: SpecContext) -> list[str]:
    """Binary blocks read as standard words (vacuous on larger alphabets)."""
    if len(ctx.spec.alphabet) != 2:
        return []
    report = closed_form.sturmian_c_check(
        ctx.spec, ctx.limits.standard_word_depth, ctx.table
    )
    return [
        f"{line.name} at {line.index}: expected {line.expected!r}, got {line.actual!r}"
        for line in report.failures()
    ]


def prop_factor_count_ratio(ctx: SpecContext) -> list[str]:
    """Complete c-count stays within twice the complete z-count."""
    w = ctx.prefix
    if len(w) < ctx.limits.ratio_min_len:
        from .episturmian import standard_prefix

        w = standard_prefix(ctx.spec, ctx.limits.ratio_min_len, ctx.table)
    zc, cc = factor_counts(w)
    if cc > 2 * zc:
        return [f"c-count {cc} > 2 * z-count {zc} on a {len(w)}-letter prefix"]
    return []


# -- global (spec-independent) property ---------------------------------------


def engine_agreement_failures(limits: Limits) -> tuple[int, list[str]]:
    """Naive and lpf-based engines agree factor-for-factor.

    Exhaustive over binary words up to the configured length, then a seeded
    random sample over two- and three-letter alphabets; the quadratic lpf
    reference is compared on the exhaustive portion as well.
    """
    from . import lpf as lpf_mod

    fails: list[str] = []
    checked = 0

    def compare(w: str, check_lpf_naive: bool) -> None:
        nonlocal checked
        checked += 1
        for scheme in ("z", "c"):
            a = (z_factorize if scheme == "z" else c_factorize)(w)
            b = lpf_mod.factorize_via_lpf(w, scheme)
            if a != b:
                fails.append(f"{scheme}-engines disagree on {w!r}")
        if check_lpf_naive:
            if lpf_mod.lpf_naive(w) != list(lpf_mod.lpf(w)):
                fails.append(f"lpf engines disagree on {w!r}")

    for length in range(1, limits.exhaustive_max_len + 1):
        for tup in itertools.product("ab", repeat=length):
            compare("".join(tup), check_lpf_naive=length <= 8)
    rng = random.Random(limits.seed)
    for _ in range(limits.random_words):
        size = rng.randint(1, limits.random_max_len)
        sigma = ALPHABET[: rng.choice((2, 3))]
        compare("".join(rng.choice(sigma) for _ in range(size)), check_lpf_naive=size <= 64)
    return checked, fails


# -- the registry and the runner ----------------------------------------------

PROPERTIES: dict[str, object] = {
    "construction-consistency": prop_construction_consistency,
    "block-morphism": prop_block_morphism,
    "block-from-prefixes": prop_block_from_prefixes,
    "block-chain": prop_block_chain,
    "prefix-product": prop_prefix_product,
    "block-run-constancy": prop_block_run_constancy,
    "overlap-palindrome": prop_overlap_palindrome,
    "run-powers": prop_run_powers,
    "block-primitivity": prop_block_primitivity,
    "reversal-closed-factors": prop_reversal_closed_factors,
    "right-special-unique": prop_right_special_unique,
    "factor-complexity": prop_factor_complexity,
    "z-theorem": prop_z_theorem,
    "c-theorem": prop_c_theorem,
    "z-prefix-identity": prop_z_prefix_identity,
    "c-prefix-identity": prop_c_prefix_identity,
    "z-nonoccurrence": prop_z_nonoccurrence,
    "c-nonoccurrence": prop_c_nonoccurrence,
    "z-from-c-agreement": prop_z_from_c_agreement,
    "sturmian-standard": prop_sturmian_standard,
    "factor-count-ratio": prop_factor_count_ratio,
}

ENGINE_AGREEMENT = "engine-agreement"

CONSTRUCTION_PROPERTIES = (
    "construction-consistency",
    "block-morphism",
    "block-from-prefixes",
    "block-chain",
    "prefix-product",
    "block-run-constancy",
    "overlap-palindrome",
    "run-powers",
    "block-primitivity",
)


def property_names() -> tuple[str, ...]:
    return tuple(PROPERTIES) + (ENGINE_AGREEMENT,)


@dataclass(frozen=True)
class PropertyResult:
    name: str
    checked: int  # specs (or words, for engine agreement)
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class VerifyReport:
    results: tuple[PropertyResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def result(self, name: str) -> PropertyResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def summary_lines(self) -> list[str]:
        width = max(len(r.name) for r in self.results) if self.results else 0
        return [
            f"{'ok  ' if r.ok else 'FAIL'}  {r.name:<{width}}  checked={r.checked}"
            f"  failures={len(r.failures)}"
            for r in self.results
        ]


def run_verify(
    specs,
    properties=None,
    limits: Limits | None = None,
    progress=None,
) -> VerifyReport:
    """Run the named properties over the given specs.

    properties defaults to every known name; unknown names are rejected.
    progress, if given, is called with (done_specs, total_specs).
    """
    limits = limits or Limits()
    names = list(properties) if properties is not None else list(property_names())
    unknown = [n for n in names if n not in PROPERTIES and n != ENGINE_AGREEMENT]
    if unknown:
        raise ValueError(
            f"unknown properties {unknown}; known: {', '.join(property_names())}"
        )
    per_spec = [n for n in names if n in PROPERTIES]
    specs = list(specs)
    failures: dict[str, list[str]] = {n: [] for n in names}
    counts: dict[str, int] = {n: 0 for n in names}
    for done, spec in enumerate(specs, start=1):
        ctx = SpecContext(spec, limits)
        for name in per_spec:
            counts[name] += 1
            try:
                msgs = PROPERTIES[name](ctx)
            except closed_form.TheoremViolationError as exc:
                msgs = [str(exc)]
            for msg in msgs:
                failures[name].append(f"{ctx.directive}: {msg}")
        if progress is not None:
            progress(done, len(specs))
    if ENGINE_AGREEMENT in names:
        checked, fails = engine_agreement_failures(limits)
        counts[ENGINE_AGREEMENT] = checked
        failures[ENGINE_AGREEMENT] = fails
    return VerifyReport(
        tuple(PropertyResult(n, counts[n], tuple(failures[n])) for n in names)
    )
