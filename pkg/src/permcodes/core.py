"""Permutations in one-line notation and subexcedant digit sequences.

A permutation of {1..n} is stored as a plain tuple of its values, e.g.
``(5, 2, 1, 6, 4, 3)``.  A digit sequence t1..tn is *subexcedant* when
0 <= ti <= i-1 for every position i (so t1 is always 0).  There are
exactly n! subexcedant sequences of length n, which is what makes them
usable as permutation codes.

All positions in docstrings are 1-based, matching the usual one-line
notation; storage is 0-based tuples.
"""

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

ENV_MAX_N = "PERMCODES_MAX_N"
DEFAULT_MAX_N = 10


def enumeration_cap() -> int:
    """Largest n the exhaustive enumerators accept.

    Defaults to 10 (10! is still comfortable desk scale); override with
    the PERMCODES_MAX_N environment variable.
    """
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{ENV_MAX_N} must be >= 1, got {cap}")
    return cap


def check_permutation(values: Sequence[int]) -> tuple[int, ...]:
    """Validate one-line notation and return it as a tuple.

    >>> check_permutation([2, 1, 3])
    (2, 1, 3)
    >>> check_permutation([1, 1, 2])
    Traceback (most recent call last):
        ...
    ValueError: not a permutation of 1..3: (1, 1, 2)
    """
    p = tuple(values)
    n = len(p)
    if n == 0:
        raise ValueError("empty permutation (n = 0) is not supported")
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {p}")
    return p


def check_subexcedant(digits: Sequence[int]) -> tuple[int, ...]:
    """Validate that digit i lies in 0..i-1 and return the tuple.

    >>> check_subexcedant([0, 1, 0, 3])
    (0, 1, 0, 3)
    """
    t = tuple(digits)
    if not t:
        raise ValueError("empty sequence (n = 0) is not supported")
    for i, d in enumerate(t):
        if not 0 <= d <= i:
            raise ValueError(
                f"digit {d} at position {i + 1} is outside 0..{i}: {t}"
            )
    return t


@dataclass(frozen=True)
class Distribution:
    """Value counts of a statistic over all n! permutations of size n.

    ``counts[k]`` is the number of permutations attaining value k.  The
    array is dense from 0 up to at least n(n-1)/2, the maximum of the
    inversion number.
    """

    n: int
    counts: tuple[int, ...]

    def total(self) -> int:
        return sum(self.counts)

    def max_value(self) -> int:
        return len(self.counts) - 1


def identity(n: int) -> tuple[int, ...]:
    """The identity permutation 1 2 ... n.

    >>> identity(3)
    (1, 2, 3)
    """
    if n < 1:
        raise ValueError("empty permutation (n = 0) is not supported")
    return tuple(range(1, n + 1))


def inv(perm: Sequence[int]) -> int:
    """Number of inverted pairs (i < j with perm_i > perm_j).

    >>> inv((3, 2, 1))
    3
    """
    p = check_permutation(perm)
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def maj(perm: Sequence[int]) -> int:
    """Major index: the sum of descent positions i with perm_i > perm_{i+1}.

    >>> maj((3, 1, 2))
    1
    """
    p = check_permutation(perm)
    return sum(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def reduction(seq: Sequence[int]) -> tuple[int, ...]:
    """Rank pattern of a distinct-integer sequence (smallest becomes 1).

    >>> reduction((4, 5, 1, 3, 6))
    (3, 4, 1, 2, 5)
    """
    s = tuple(seq)
    if not s:
        raise ValueError("cannot reduce an empty sequence")
    if len(set(s)) != len(s):
        raise ValueError(f"entries must be distinct: {s}")
    rank = {v: r for r, v in enumerate(sorted(s), start=1)}
    return tuple(rank[v] for v in s)


def _check_enumerable(n: int, max_n: int | None) -> None:
    cap = enumeration_cap() if max_n is None else max_n
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise ValueError(
            f"n={n} exceeds the enumeration cap {cap}; "
            f"set {ENV_MAX_N} to raise it"
        )


def enumerate_permutations(n: int, max_n: int | None = None) -> Iterator[tuple[int, ...]]:
    """All n! permutations of {1..n} in lexicographic order.

    >>> list(enumerate_permutations(2))
    [(1, 2), (2, 1)]
    """
    _check_enumerable(n, max_n)
    return itertools.permutations(range(1, n + 1))


def enumerate_subexcedant(n: int, max_n: int | None = None) -> Iterator[tuple[int, ...]]:
    """All n! subexcedant sequences of length n in lexicographic order.

    >>> list(enumerate_subexcedant(2))
    [(0, 0), (0, 1)]
    """
    _check_enumerable(n, max_n)
    return itertools.product(*(range(i + 1) for i in range(n)))


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse space- or comma-separated one-line notation.

    >>> parse_permutation("5, 2, 1, 6, 4, 3")
    (5, 2, 1, 6, 4, 3)
    """
    return check_permutation(_parse_ints(text))


def parse_digits(text: str) -> tuple[int, ...]:
    """Parse a space- or comma-separated digit sequence (unvalidated)."""
    return _parse_ints(text)


def _parse_ints(text: str) -> tuple[int, ...]:
    parts = text.replace(",", " ").split()
    if not parts:
        raise ValueError("empty sequence")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"not an integer sequence: {text!r}") from None


def format_sequence(values: Sequence[int]) -> str:
    """Render a permutation or digit sequence as space-separated text."""
    return " ".join(str(v) for v in values)
