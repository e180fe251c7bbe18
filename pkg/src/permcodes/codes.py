"""Permutation codes: the Lehmer code and the McMahon code.

The Lehmer code records, for each position i, how many larger values sit
to the left of position i; its digit sum is the inversion number.  The
McMahon code is the delta transform of the Lehmer code; its digit sum is
the major index, and the permutation can be rebuilt from it by repeated
right circular shifts of prefixes.
"""

from typing import Sequence

from permcodes import transforms
from permcodes.core import check_permutation, check_subexcedant


def lehmer_encode(perm: Sequence[int]) -> tuple[int, ...]:
    """Lehmer code: digit i counts earlier entries larger than perm_i.

    >>> lehmer_encode((5, 2, 1, 6, 4, 3))
    (0, 1, 2, 0, 2, 3)
    """
    p = check_permutation(perm)
    return tuple(
        sum(1 for j in range(i) if p[j] > p[i]) for i in range(len(p))
    )


def lehmer_decode(digits: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`lehmer_encode`.

    >>> lehmer_decode((0, 1, 2, 0, 2, 3))
    (5, 2, 1, 6, 4, 3)
    """
    t = check_subexcedant(digits)
    n = len(t)
    # Every value left of position i comes from the set still unplaced at
    # step i, so perm_i is the (t_i + 1)-th largest of that set.
    remaining = list(range(1, n + 1))
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = remaining.pop(len(remaining) - 1 - t[i])
    return tuple(out)


def mcmahon_code(perm: Sequence[int]) -> tuple[int, ...]:
    """McMahon code: the delta transform of the Lehmer code.

    Its digit sum equals the major index of the permutation.

    >>> mcmahon_code((5, 2, 1, 6, 4, 3))
    (0, 1, 2, 2, 4, 3)
    """
    return transforms.delta(lehmer_encode(perm))


def build_from_mcmahon_steps(
    digits: Sequence[int],
) -> list[tuple[int, int, tuple[int, ...]]]:
    """Rows of the prefix-shift construction, one per prefix length.

    Starting from the identity, for i = n down to 1 the length-i prefix is
    rotated right s_i times (a right rotation moves the last prefix entry
    to the front).  Returns ``(i, s_i, row_after_the_rotations)`` triples.

    >>> build_from_mcmahon_steps((0, 1))
    [(2, 1, (2, 1)), (1, 0, (2, 1))]
    """
    s = check_subexcedant(digits)
    n = len(s)
    row = list(range(1, n + 1))
    steps = []
    for i in range(n, 0, -1):
        k = s[i - 1]
        if k:
            row[:i] = row[i - k : i] + row[: i - k]
        steps.append((i, k, tuple(row)))
    return steps


def build_from_mcmahon(digits: Sequence[int]) -> tuple[int, ...]:
    """The permutation whose McMahon code is the given sequence.

    >>> build_from_mcmahon((0, 1, 2, 2, 4, 3))
    (5, 2, 1, 6, 4, 3)
    """
    return build_from_mcmahon_steps(digits)[-1][2]
