"""Six bijections on subexcedant sequences, plus their inverses.

Each transform rewrites a subexcedant sequence t1..tn into another one
s1..sn via a local recurrence (formulas below are 1-based).  All six are
bijections of the n!-element set of length-n sequences onto itself, so
composing any of them with a permutation code yields another permutation
code.  The code verifies bijectivity exhaustively in the test suite
rather than assuming it.

Names follow the conventional Greek-letter labels used for these maps:
delta, gamma, theta, lambda, upsilon, psi.
"""

import enum
from typing import Sequence

from permcodes.core import check_subexcedant


class TransformKind(enum.Enum):
    """Closed enumeration of the transforms, plus a neutral identity."""

    DELTA = "delta"
    GAMMA = "gamma"
    THETA = "theta"
    LAMBDA = "lambda"
    UPSILON = "upsilon"
    PSI = "psi"
    IDENTITY = "id"

    @classmethod
    def from_name(cls, name: str) -> "TransformKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            known = ", ".join(kind.value for kind in cls)
            raise ValueError(f"unknown transform {name!r}; expected one of: {known}") from None


def _checked(out: list[int]) -> tuple[int, ...]:
    # every transform must preserve subexcedance; cheap to assert on each call
    assert all(0 <= d <= i for i, d in enumerate(out)), out
    return tuple(out)


def delta(t: Sequence[int]) -> tuple[int, ...]:
    """s_i = (t_i - t_{i+1}) mod i for i < n; s_n = t_n."""
    t = check_subexcedant(t)
    n = len(t)
    return _checked([(t[j] - t[j + 1]) % (j + 1) for j in range(n - 1)] + [t[n - 1]])


def delta_inv(s: Sequence[int]) -> tuple[int, ...]:
    """t_n = s_n; t_i = (t_{i+1} + s_i) mod i, filled right to left."""
    s = check_subexcedant(s)
    n = len(s)
    t = [0] * n
    t[n - 1] = s[n - 1]
    for j in range(n - 2, -1, -1):
        t[j] = (t[j + 1] + s[j]) % (j + 1)
    return _checked(t)


def gamma(t: Sequence[int]) -> tuple[int, ...]:
    """s_1 = 0; s_i = (t_{i-1} - t_i) mod i for i > 1."""
    t = check_subexcedant(t)
    return _checked([0] + [(t[j - 1] - t[j]) % (j + 1) for j in range(1, len(t))])


def gamma_inv(s: Sequence[int]) -> tuple[int, ...]:
    """t_1 = s_1; t_i = (t_{i-1} - s_i) mod i, filled left to right."""
    s = check_subexcedant(s)
    t = [s[0]]
    for j in range(1, len(s)):
        t.append((t[j - 1] - s[j]) % (j + 1))
    return _checked(t)


def theta(t: Sequence[int]) -> tuple[int, ...]:
    """s_1 = 0; s_i = t_{i-1} - t_i if t_{i-1} >= t_i, else t_i."""
    t = check_subexcedant(t)
    out = [0]
    for j in range(1, len(t)):
        out.append(t[j - 1] - t[j] if t[j - 1] >= t[j] else t[j])
    return _checked(out)


def theta_inv(s: Sequence[int]) -> tuple[int, ...]:
    """t_1 = 0; t_i = s_i if t_{i-1} < s_i, else t_{i-1} - s_i."""
    s = check_subexcedant(s)
    t = [0]
    for j in range(1, len(s)):
        t.append(s[j] if t[j - 1] < s[j] else t[j - 1] - s[j])
    return _checked(t)


def lambda_(t: Sequence[int]) -> tuple[int, ...]:
    """s_1 = 0; s_i = t_i if t_{i-1} >= t_i, else i + t_{i-1} - t_i."""
    t = check_subexcedant(t)
    out = [0]
    for j in range(1, len(t)):
        out.append(t[j] if t[j - 1] >= t[j] else (j + 1) + t[j - 1] - t[j])
    return _checked(out)


def lambda_inv(s: Sequence[int]) -> tuple[int, ...]:
    """t_1 = 0; t_i = i + t_{i-1} - s_i if t_{i-1} < s_i, else s_i."""
    s = check_subexcedant(s)
    t = [0]
    for j in range(1, len(s)):
        t.append((j + 1) + t[j - 1] - s[j] if t[j - 1] < s[j] else s[j])
    return _checked(t)


def upsilon(t: Sequence[int]) -> tuple[int, ...]:
    """s_i = i - t_i - 1 if t_i < t_{i+1}, else t_i - t_{i+1}; s_n = t_n."""
    t = check_subexcedant(t)
    n = len(t)
    out = []
    for j in range(n - 1):
        out.append(j - t[j] if t[j] < t[j + 1] else t[j] - t[j + 1])
    out.append(t[n - 1])
    return _checked(out)


def upsilon_inv(s: Sequence[int]) -> tuple[int, ...]:
    """t_n = s_n; t_i = t_{i+1} + s_i when that stays below i, else i - 1 - s_i."""
    s = check_subexcedant(s)
    n = len(s)
    t = [0] * n
    t[n - 1] = s[n - 1]
    for j in range(n - 2, -1, -1):
        c = t[j + 1] + s[j]
        t[j] = c if c <= j else j - s[j]
    return _checked(t)


def psi(t: Sequence[int]) -> tuple[int, ...]:
    """s_i = t_{i+1} - t_i - 1 if t_i < t_{i+1}, else t_i; s_n = t_n."""
    t = check_subexcedant(t)
    n = len(t)
    out = []
    for j in range(n - 1):
        out.append(t[j + 1] - t[j] - 1 if t[j] < t[j + 1] else t[j])
    out.append(t[n - 1])
    return _checked(out)


def psi_inv(s: Sequence[int]) -> tuple[int, ...]:
    """t_n = s_n; t_i = s_i if s_i >= t_{i+1}, else t_{i+1} - s_i - 1."""
    s = check_subexcedant(s)
    n = len(s)
    t = [0] * n
    t[n - 1] = s[n - 1]
    for j in range(n - 2, -1, -1):
        t[j] = s[j] if s[j] >= t[j + 1] else t[j + 1] - s[j] - 1
    return _checked(t)


def _identity(t: Sequence[int]) -> tuple[int, ...]:
    return check_subexcedant(t)


_FORWARD = {
    TransformKind.DELTA: delta,
    TransformKind.GAMMA: gamma,
    TransformKind.THETA: theta,
    TransformKind.LAMBDA: lambda_,
    TransformKind.UPSILON: upsilon,
    TransformKind.PSI: psi,
    TransformKind.IDENTITY: _identity,
}

_INVERSE = {
    TransformKind.DELTA: delta_inv,
    TransformKind.GAMMA: gamma_inv,
    TransformKind.THETA: theta_inv,
    TransformKind.LAMBDA: lambda_inv,
    TransformKind.UPSILON: upsilon_inv,
    TransformKind.PSI: psi_inv,
    TransformKind.IDENTITY: _identity,
}


def apply(kind: TransformKind, t: Sequence[int]) -> tuple[int, ...]:
    """Apply a transform to a subexcedant sequence.

    >>> apply(TransformKind.DELTA, (0, 1, 2, 0, 2, 3))
    (0, 1, 2, 2, 4, 3)
    """
    return _FORWARD[kind](t)


def invert(kind: TransformKind, s: Sequence[int]) -> tuple[int, ...]:
    """Apply the inverse of a transform.

    >>> invert(TransformKind.DELTA, (0, 1, 2, 2, 4, 3))
    (0, 1, 2, 0, 2, 3)
    """
    return _INVERSE[kind](s)
