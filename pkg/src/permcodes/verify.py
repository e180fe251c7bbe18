"""Exhaustive verification suites.

Each suite sweeps every permutation of a given size and checks one family
of identities: that the pointed-pattern codes agree digit by digit with
the corresponding transform of the Lehmer code, that digit sums match the
statistics they are claimed to realize, and that every registry statistic
is equidistributed with the inversion number.  A failing suite always
reports a concrete counterexample.
"""

import math
import time
from dataclasses import dataclass, replace
from typing import Callable, Sequence

from permcodes import codes, core, patterns, statistics, transforms


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    n: int
    ok: bool
    checked: int
    millis: float
    counterexample: dict[str, str] | None = None

    def status(self) -> str:
        return "pass" if self.ok else "FAIL"

    def as_record(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "status": self.status(),
            "checked": self.checked,
            "millis": round(self.millis, 3),
            "counterexample": self.counterexample,
        }


def _seq(values: Sequence[int]) -> str:
    return core.format_sequence(values)


class _Run:
    """Per-suite bookkeeping: timing, counting, counterexample capture."""

    def __init__(self, suite: str, n: int) -> None:
        self.suite = suite
        self.n = n
        self.checked = 0
        self._start = time.perf_counter()

    def fail(self, perm: Sequence[int], detail: str, expected, actual) -> VerifyReport:
        millis = (time.perf_counter() - self._start) * 1000.0
        cex = {
            "permutation": _seq(perm),
            "detail": detail,
            "expected": str(expected),
            "actual": str(actual),
        }
        return VerifyReport(self.suite, self.n, False, self.checked, millis, cex)

    def ok(self) -> VerifyReport:
        millis = (time.perf_counter() - self._start) * 1000.0
        return VerifyReport(self.suite, self.n, True, self.checked, millis)


def _pointed(expr: str) -> list[patterns.PointedPattern]:
    terms = patterns.parse_terms(expr)
    assert all(isinstance(t, patterns.PointedPattern) for t in terms)
    return terms  # type: ignore[return-value]


_LEHMER_DIRECT = _pointed("b-A")
_LEHMER_TRIPLE = _pointed("b-cA + c-aB + c-bA + bA")
_MCMAHON_POINTED = _pointed("a-Cb + b-Ac + c-Ba")
_LAST_DIGIT = patterns.parse_pattern("(b-a]")

# Pointed sets whose induced digits reproduce a transform of the Lehmer
# code; the final flag marks codes whose last digit comes from (b-a]
# instead of the pointed sum.
_CODE_FAMILIES: tuple[tuple[str, Callable, list[patterns.PointedPattern], bool], ...] = (
    ("gamma", transforms.gamma, _pointed("a-cB + b-aC + c-bA + bA"), False),
    ("theta", transforms.theta, _pointed("b-aC + b-cA + c-bA + bA"), False),
    ("lambda", transforms.lambda_, _pointed("a-cB + c-aB + c-bA + bA"), False),
    ("upsilon", transforms.upsilon, _pointed("a-Cb + b-Ac + b-Ca"), True),
    ("psi", transforms.psi, _pointed("b-Ac + b-Ca + c-Ab"), True),
)

_LEMMA_LHS = statistics.from_expression("(b-ca)+(ba)").terms
_LEMMA_RHS = statistics.from_expression("(b-ac)+(b-a]").terms
_HEAD_TERMS = statistics.from_expression("(a-cb)+(b-ca)+(c-ba)").terms


def verify_lehmer_identities(n: int) -> VerifyReport:
    """Both pointed-pattern forms of the Lehmer code match the codec."""
    run = _Run("lehmer", n)
    for p in core.enumerate_permutations(n):
        t = codes.lehmer_encode(p)
        got = patterns.induced_code(_LEHMER_DIRECT, p)
        if got != t:
            return run.fail(p, "pointed b-A vs Lehmer code", _seq(t), _seq(got))
        got = patterns.induced_code(_LEHMER_TRIPLE, p)
        if got != t:
            return run.fail(p, "pointed 4-term set vs Lehmer code", _seq(t), _seq(got))
        run.checked += 1
    return run.ok()


def verify_mcmahon(n: int) -> VerifyReport:
    """McMahon digit sum is maj; its pointed/pattern forms agree."""
    run = _Run("mcmahon", n)
    maj_stat = statistics.lookup("maj-delta")
    for p in core.enumerate_permutations(n):
        m = codes.mcmahon_code(p)
        mj = core.maj(p)
        if sum(m) != mj:
            return run.fail(p, "McMahon digit sum vs maj", mj, sum(m))
        got = patterns.induced_code(_MCMAHON_POINTED, p)
        if got[: n - 1] != m[: n - 1]:
            return run.fail(p, "pointed McMahon digits 1..n-1", _seq(m[: n - 1]), _seq(got[: n - 1]))
        last = patterns.count_occurrences(_LAST_DIGIT, p)
        if last != m[-1]:
            return run.fail(p, "(b-a] vs last McMahon digit", m[-1], last)
        if statistics.evaluate(maj_stat, p) != mj:
            return run.fail(p, "maj pattern expression", mj, statistics.evaluate(maj_stat, p))
        run.checked += 1
    return run.ok()


def verify_theorem_codes(n: int) -> VerifyReport:
    """Each pointed family reproduces its transform of the Lehmer code."""
    run = _Run("codes", n)
    for p in core.enumerate_permutations(n):
        t = codes.lehmer_encode(p)
        for name, fn, terms, last_separate in _CODE_FAMILIES:
            expected = fn(t)
            got = list(patterns.induced_code(terms, p))
            if last_separate:
                got[-1] = patterns.count_occurrences(_LAST_DIGIT, p)
            if tuple(got) != expected:
                return run.fail(
                    p, f"pointed code vs {name} of Lehmer code", _seq(expected), _seq(got)
                )
        run.checked += 1
    return run.ok()


def verify_s2_s4(n: int) -> VerifyReport:
    """The two prefix-based codes are injective and sum to s2 / s4."""
    run = _Run("s2s4", n)
    s2 = statistics.lookup("s2")
    s4 = statistics.lookup("s4")
    seen2: dict[tuple[int, ...], tuple[int, ...]] = {}
    seen4: dict[tuple[int, ...], tuple[int, ...]] = {}
    for p in core.enumerate_permutations(n):
        m = codes.mcmahon_code(p)
        code2 = m[:-1] + (p[0] - 1,)
        if sum(code2) != statistics.evaluate(s2, p):
            return run.fail(p, "s2 vs McMahon prefix + first entry", statistics.evaluate(s2, p), sum(code2))
        if code2 in seen2:
            return run.fail(p, "s2 code collision", _seq(seen2[code2]), _seq(p))
        seen2[code2] = p

        if n == 1:
            code4: tuple[int, ...] = (p[0] - 1,)
        else:
            tau = core.reduction(p[1:])
            code4 = codes.mcmahon_code(tau) + (p[0] - 1,)
            head = sum(patterns.count_many(_HEAD_TERMS, p))
            if head != core.maj(tau):
                return run.fail(p, "head terms vs maj of reduced tail", core.maj(tau), head)
        core.check_subexcedant(code4)
        if sum(code4) != statistics.evaluate(s4, p):
            return run.fail(p, "s4 vs reduced-tail McMahon code", statistics.evaluate(s4, p), sum(code4))
        if code4 in seen4:
            return run.fail(p, "s4 code collision", _seq(seen4[code4]), _seq(p))
        seen4[code4] = p
        run.checked += 1
    # distinct subexcedant vectors for all n! permutations: a bijection
    assert len(seen4) == math.factorial(n)
    return run.ok()


def verify_mahonian_all(n: int) -> VerifyReport:
    """Every registry statistic is equidistributed with inv."""
    run = _Run("mahonian", n)
    stats = statistics.registry()
    dists = statistics.distribution_many(stats, n)
    ref = dists[[s.name for s in stats].index("inv")]
    for stat, dist in zip(stats, dists):
        if dist.counts != ref.counts:
            millis = (time.perf_counter() - run._start) * 1000.0
            return VerifyReport(
                run.suite,
                n,
                False,
                run.checked,
                millis,
                {
                    "statistic": stat.name,
                    "detail": "distribution differs from inv",
                    "expected": str(list(ref.counts)),
                    "actual": str(list(dist.counts)),
                },
            )
        run.checked += math.factorial(n)
    return run.ok()


def verify_lemma_and_remarks(n: int) -> VerifyReport:
    """Two-term identity, reduced-tail maj remark, last-digit disagreement."""
    run = _Run("lemmas", n)
    prefix_groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for p in core.enumerate_permutations(n):
        lhs = sum(patterns.count_many(_LEMMA_LHS, p))
        rhs = sum(patterns.count_many(_LEMMA_RHS, p))
        if lhs != rhs:
            return run.fail(p, "(b-ca)+(ba) vs (b-ac)+(b-a]", rhs, lhs)
        if n >= 2:
            tau = core.reduction(p[1:])
            head = sum(patterns.count_many(_HEAD_TERMS, p))
            if head != core.maj(tau):
                return run.fail(p, "head terms vs maj of reduced tail", core.maj(tau), head)
        m = codes.mcmahon_code(p)
        prefix_groups.setdefault(m[:-1], []).append(p)
        run.checked += 1

    # Permutations whose McMahon codes share all but the last digit must
    # disagree at every position.
    for prefix, group in prefix_groups.items():
        for i in range(n):
            column = [p[i] for p in group]
            if len(set(column)) != len(column):
                dup = [p for p in group if column.count(p[i]) > 1]
                return run.fail(
                    dup[0],
                    f"last-digit group {_seq(prefix)} agrees at position {i + 1}",
                    "pairwise distinct entries",
                    _seq(dup[1]),
                )
    return run.ok()


SUITES: dict[str, tuple[Callable[[int], VerifyReport], int]] = {
    "lehmer": (verify_lehmer_identities, 7),
    "mcmahon": (verify_mcmahon, 7),
    "codes": (verify_theorem_codes, 7),
    "s2s4": (verify_s2_s4, 7),
    "mahonian": (verify_mahonian_all, 8),
    "lemmas": (verify_lemma_and_remarks, 6),
}


def run_suite(name: str, n_max: int | None = None) -> VerifyReport:
    """Run one suite for n = 1 upward, stopping at the first failure.

    The returned report aggregates time and checks over the sweep; its
    ``n`` is the failing size, or the largest size on success.
    """
    if name not in SUITES:
        known = ", ".join(SUITES)
        raise ValueError(f"unknown suite {name!r}; expected one of: {known}")
    fn, default_n = SUITES[name]
    top = default_n if n_max is None else n_max
    if top < 1:
        raise ValueError("n must be >= 1")
    total_ms = 0.0
    total_checked = 0
    report = None
    for n in range(1, top + 1):
        report = fn(n)
        total_ms += report.millis
        total_checked += report.checked
        if not report.ok:
            break
    assert report is not None
    return replace(report, millis=total_ms, checked=total_checked)
