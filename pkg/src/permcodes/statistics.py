"""Registry of Mahonian pattern statistics and their distributions.

A statistic is a sum of vincular-pattern occurrence counts.  The registry
stores each statistic as its pattern expression (terms kept with
multiplicity), together with the Lehmer-code transform that realizes it
as a permutation code, where one is known.  Evaluation always goes
through the pattern engine; the direct inv/maj definitions in
:mod:`permcodes.core` serve as independent cross-checks in the tests.
"""

import functools
import math
from dataclasses import dataclass
from typing import Sequence

from permcodes import patterns
from permcodes.core import Distribution, check_permutation, enumerate_permutations
from permcodes.transforms import TransformKind


@dataclass(frozen=True)
class StatisticDef:
    name: str
    expression: str
    terms: tuple[patterns.VincularPattern, ...]
    transform: TransformKind | None = None


_TABLE: tuple[tuple[str, str, TransformKind | None], ...] = (
    ("inv", "(b-a)", None),
    ("inv-alt", "(b-ca)+(c-ab)+(c-ba)+(ba)", None),
    ("maj", "(a-cb)+(b-ca)+(c-ba)+(ba)", None),
    ("maj-delta", "(a-cb)+(b-ac)+(c-ba)+(b-a]", TransformKind.DELTA),
    ("s2", "(a-cb)+(b-ac)+(c-ba)+[b-a)", None),
    ("s4", "(a-cb)+(b-ca)+(c-ba)+[b-a)", None),
    ("stat", "(a-cb)+(b-ac)+(c-ba)+(ba)", TransformKind.GAMMA),
    ("stat-prime", "(b-ac)+(b-ca)+(c-ba)+(ba)", TransformKind.THETA),
    ("stat-second", "(a-cb)+(c-ab)+(c-ba)+(ba)", TransformKind.LAMBDA),
    ("conj8-second", "(a-cb)+(b-ca)+(b-ca)+(ba)", TransformKind.UPSILON),
    ("conj8-third", "(b-ca)+(b-ca)+(c-ab)+(ba)", TransformKind.PSI),
)


def _plain_terms(expr: str) -> tuple[patterns.VincularPattern, ...]:
    terms = []
    for t in patterns.parse_terms(expr):
        if isinstance(t, patterns.PointedPattern):
            raise ValueError(f"statistic terms must be plain patterns, got {t.text()}")
        terms.append(t)
    return tuple(terms)


@functools.cache
def registry() -> tuple[StatisticDef, ...]:
    """All built-in statistics, in table order."""
    return tuple(
        StatisticDef(name, expr, _plain_terms(expr), kind)
        for name, expr, kind in _TABLE
    )


def lookup(name: str) -> StatisticDef:
    """Find a registry statistic by name.

    >>> lookup("maj").expression
    '(a-cb)+(b-ca)+(c-ba)+(ba)'
    """
    for stat in registry():
        if stat.name == name:
            return stat
    known = ", ".join(s.name for s in registry())
    raise ValueError(f"unknown statistic {name!r}; expected one of: {known}")


def from_expression(expr: str, name: str = "expr") -> StatisticDef:
    """Build an ad-hoc statistic from a pattern expression."""
    return StatisticDef(name, expr, _plain_terms(expr), None)


def evaluate(stat: StatisticDef, perm: Sequence[int]) -> int:
    """Total occurrence count of the statistic's terms (with multiplicity).

    >>> evaluate(lookup("inv"), (3, 1, 2))
    2
    """
    p = check_permutation(perm)
    return sum(patterns.count_many(stat.terms, p))


def _tally(counts: list[int], value: int) -> None:
    if value >= len(counts):
        counts.extend([0] * (value + 1 - len(counts)))
    counts[value] += 1


def distribution_many(
    stats: Sequence[StatisticDef], n: int, max_n: int | None = None
) -> list[Distribution]:
    """Distributions of several statistics in one sweep over S_n.

    Shared pattern terms are counted once per permutation, which matters
    for the exhaustive n = 8 runs.
    """
    distinct: dict[patterns.VincularPattern, int] = {}
    term_index: list[list[int]] = []
    for stat in stats:
        idxs = []
        for term in stat.terms:
            idxs.append(distinct.setdefault(term, len(distinct)))
        term_index.append(idxs)
    distinct_terms = list(distinct)

    base = n * (n - 1) // 2
    counts = [[0] * (base + 1) for _ in stats]
    for p in enumerate_permutations(n, max_n=max_n):
        per_term = patterns.count_many(distinct_terms, p)
        for si, idxs in enumerate(term_index):
            _tally(counts[si], sum(per_term[j] for j in idxs))

    total = math.factorial(n)
    assert all(sum(c) == total for c in counts)
    return [Distribution(n, tuple(c)) for c in counts]


def distribution(stat: StatisticDef, n: int, max_n: int | None = None) -> Distribution:
    """Value counts of a statistic over all n! permutations."""
    return distribution_many([stat], n, max_n=max_n)[0]


@functools.cache
def _inv_reference(n: int) -> Distribution:
    return distribution(lookup("inv"), n)


def is_mahonian(stat: StatisticDef, n: int, max_n: int | None = None) -> bool:
    """Whether the statistic is equidistributed with inv on S_n."""
    return distribution(stat, n, max_n=max_n).counts == _inv_reference(n).counts
