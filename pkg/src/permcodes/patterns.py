"""Vincular pattern parsing and occurrence counting.

Pattern text grammar
--------------------
A pattern is written over the letters a..z, ordered alphabetically
(``a < b < c ...``).  Adjacent letters form a *block*; letters inside one
block must occupy adjacent positions in the permutation, while a dash
between blocks allows any gap.  The surrounding delimiters control
anchoring:

* ``(`` / ``)``   decorative, no constraint (and may be omitted);
* ``[``           the match must start at the first position;
* ``]``           the match must end at the last position.

At most one letter may be written in UPPER case; that letter is the
*point* of the pattern, and pointed counts fix which permutation position
plays its role.  Whitespace is ignored, letters must be distinct, and the
letters need not be contiguous from 'a' (only their relative order
matters, so ``ca`` means the same as ``ba``).

Examples: ``(a-cb)``, ``[b-a)``, ``(b-a]``, ``b-Ac``, ``bA``.

Statistic expressions join patterns with ``+``, repetitions allowed,
e.g. ``(a-cb)+(b-ca)+(b-ca)+(ba)``.
"""

from dataclasses import dataclass
from typing import Iterator, Sequence

from permcodes.core import check_permutation, enumerate_permutations


@dataclass(frozen=True)
class VincularPattern:
    """Ranked letters split into adjacency blocks, with optional anchors.

    ``ranks`` holds the letters as relative ranks (1 = smallest) in
    pattern order; ``blocks`` holds the block lengths, in order.
    """

    ranks: tuple[int, ...]
    blocks: tuple[int, ...]
    anchored_start: bool = False
    anchored_end: bool = False

    def __post_init__(self) -> None:
        k = len(self.ranks)
        if k == 0:
            raise ValueError("pattern must contain at least one letter")
        if sorted(self.ranks) != list(range(1, k + 1)):
            raise ValueError(f"ranks must be a permutation of 1..{k}: {self.ranks}")
        if any(b < 1 for b in self.blocks) or sum(self.blocks) != k:
            raise ValueError(f"blocks {self.blocks} do not partition {k} letters")

    def __len__(self) -> int:
        return len(self.ranks)

    def block_offsets(self) -> tuple[int, ...]:
        """Index of each block's first letter within ``ranks``."""
        offs = []
        pos = 0
        for b in self.blocks:
            offs.append(pos)
            pos += b
        return tuple(offs)

    def text(self) -> str:
        """Canonical textual form, e.g. ``(a-cb)`` or ``[b-a)``."""
        return _render(self, point=None)


@dataclass(frozen=True)
class PointedPattern:
    """A vincular pattern with one privileged letter (1-based position)."""

    pattern: VincularPattern
    point: int

    def __post_init__(self) -> None:
        if not 1 <= self.point <= len(self.pattern):
            raise ValueError(
                f"point {self.point} outside 1..{len(self.pattern)}"
            )

    def text(self) -> str:
        """Canonical textual form with the point in upper case."""
        return _render(self.pattern, point=self.point)


def _render(pat: VincularPattern, point: int | None) -> str:
    letters = [chr(ord("a") + r - 1) for r in pat.ranks]
    if point is not None:
        letters[point - 1] = letters[point - 1].upper()
    chunks = []
    pos = 0
    for b in pat.blocks:
        chunks.append("".join(letters[pos : pos + b]))
        pos += b
    body = "-".join(chunks)
    open_d = "[" if pat.anchored_start else "("
    close_d = "]" if pat.anchored_end else ")"
    return f"{open_d}{body}{close_d}"


def parse_pattern(text: str) -> VincularPattern | PointedPattern:
    """Parse pattern text; an upper-case letter yields a pointed pattern.

    >>> parse_pattern("(a-cb)")
    VincularPattern(ranks=(1, 3, 2), blocks=(1, 2), anchored_start=False, anchored_end=False)
    >>> parse_pattern("b-Ac").point
    2
    """
    s = "".join(text.split())
    if not s:
        raise ValueError("empty pattern")
    open_d = close_d = None
    if s[0] in "([":
        open_d, s = s[0], s[1:]
    if s and s[-1] in ")]":
        close_d, s = s[-1], s[:-1]
    if (open_d is None) != (close_d is None):
        raise ValueError(f"unmatched delimiter in pattern {text!r}")
    for ch in s:
        if ch in "()[]":
            raise ValueError(f"misplaced delimiter {ch!r} in pattern {text!r}")
        if ch != "-" and not ("a" <= ch <= "z" or "A" <= ch <= "Z"):
            raise ValueError(f"stray character {ch!r} in pattern {text!r}")
    chunks = s.split("-")
    if any(not c for c in chunks):
        raise ValueError(f"empty block in pattern {text!r}")
    letters = "".join(chunks)
    lowered = letters.lower()
    if len(set(lowered)) != len(lowered):
        raise ValueError(f"duplicate letter in pattern {text!r}")
    points = [i for i, ch in enumerate(letters) if ch.isupper()]
    if len(points) > 1:
        raise ValueError(f"more than one pointed letter in pattern {text!r}")
    order = sorted(lowered)
    pat = VincularPattern(
        ranks=tuple(order.index(ch) + 1 for ch in lowered),
        blocks=tuple(len(c) for c in chunks),
        anchored_start=open_d == "[",
        anchored_end=close_d == "]",
    )
    if points:
        return PointedPattern(pat, points[0] + 1)
    return pat


def parse_terms(text: str) -> list[VincularPattern | PointedPattern]:
    """Parse a '+'-joined pattern expression, keeping multiplicity.

    >>> [t.text() for t in parse_terms("(b-ca) + (b-ca) + (ba)")]
    ['(b-ca)', '(b-ca)', '(ba)']
    """
    parts = "".join(text.split()).split("+")
    if any(not p for p in parts):
        raise ValueError(f"empty term in expression {text!r}")
    return [parse_pattern(p) for p in parts]


def _occurrences(
    pat: VincularPattern,
    perm: tuple[int, ...],
    pin_block: int | None = None,
    pin_start: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield 1-based position tuples of matches; ``perm`` pre-validated.

    ``pin_block``/``pin_start`` optionally force one block to a fixed
    0-based start position (used for pointed counts).
    """
    n = len(perm)
    ranks = pat.ranks
    blocks = pat.blocks
    if len(ranks) > n:
        return
    offsets = pat.block_offsets()
    m = len(blocks)

    # Prevalidate each block independently: starts where the block's
    # internal order matches, honouring anchors and any pinned start.
    candidates: list[list[int]] = []
    for b in range(m):
        ln = blocks[b]
        off = offsets[b]
        lo, hi = 0, n - ln
        if b == 0 and pat.anchored_start:
            hi = 0
        if b == m - 1 and pat.anchored_end:
            lo = max(lo, n - ln)
        valid = []
        for q in range(lo, hi + 1):
            if pin_block == b and q != pin_start:
                continue
            ok = True
            for u in range(ln - 1):
                ru, vu = ranks[off + u], perm[q + u]
                for v in range(u + 1, ln):
                    if (ru < ranks[off + v]) != (vu < perm[q + v]):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                valid.append(q)
        if not valid:
            return
        candidates.append(valid)

    chosen_rank: list[int] = []
    chosen_val: list[int] = []
    chosen_pos: list[int] = []

    def extend(b: int, min_q: int) -> Iterator[tuple[int, ...]]:
        if b == m:
            yield tuple(q + 1 for q in chosen_pos)
            return
        ln = blocks[b]
        off = offsets[b]
        for q in candidates[b]:
            if q < min_q:
                continue
            ok = True
            for u in range(ln):
                ru, vu = ranks[off + u], perm[q + u]
                for rv, vv in zip(chosen_rank, chosen_val):
                    if (ru < rv) != (vu < vv):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            chosen_rank.extend(ranks[off : off + ln])
            chosen_val.extend(perm[q : q + ln])
            chosen_pos.extend(range(q, q + ln))
            yield from extend(b + 1, q + ln)
            del chosen_rank[-ln:]
            del chosen_val[-ln:]
            del chosen_pos[-ln:]

    yield from extend(0, 0)


def occurrences(pat: VincularPattern, perm: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield the 1-based index tuples at which the pattern occurs."""
    p = check_permutation(perm)
    return _occurrences(pat, p)


def count_occurrences(pat: VincularPattern, perm: Sequence[int]) -> int:
    """Number of occurrences of a (plain) vincular pattern.

    >>> count_occurrences(parse_pattern("(b-a)"), (3, 1, 2))
    2
    """
    if isinstance(pat, PointedPattern):
        raise ValueError("pointed pattern requires a position; use count_pointed_at")
    p = check_permutation(perm)
    return sum(1 for _ in _occurrences(pat, p))


def count_many(pats: Sequence[VincularPattern], perm: Sequence[int]) -> list[int]:
    """Occurrence counts for several patterns on one permutation."""
    p = check_permutation(perm)
    return [sum(1 for _ in _occurrences(pat, p)) for pat in pats]


def count_pointed_at(pp: PointedPattern, perm: Sequence[int], i: int) -> int:
    """Occurrences in which position i plays the pointed letter.

    Summing over i = 1..n recovers the plain occurrence count.

    >>> count_pointed_at(parse_pattern("b-Ac"), (2, 4, 5, 1, 3, 6), 5)
    2
    """
    p = check_permutation(perm)
    if not 1 <= i <= len(p):
        raise ValueError(f"position {i} outside 1..{len(p)}")
    block, within = _locate_point(pp)
    start = (i - 1) - within
    if start < 0:
        return 0
    return sum(1 for _ in _occurrences(pp.pattern, p, block, start))


def _locate_point(pp: PointedPattern) -> tuple[int, int]:
    """Block index and offset-within-block of the pointed letter."""
    off = 0
    for b, ln in enumerate(pp.pattern.blocks):
        if pp.point - 1 < off + ln:
            return b, pp.point - 1 - off
        off += ln
    raise AssertionError("point outside pattern")  # unreachable after validation


def induced_code(terms: Sequence[PointedPattern], perm: Sequence[int]) -> tuple[int, ...]:
    """Digit sequence t with t_i the pointed-occurrence total at position i.

    The result is returned raw; whether it is subexcedant (and hence a
    permutation code digit vector) is the caller's claim to check.
    """
    p = check_permutation(perm)
    code = [0] * len(p)
    for pp in terms:
        if not isinstance(pp, PointedPattern):
            raise ValueError(f"induced codes need pointed patterns, got {pp!r}")
        li = pp.point - 1
        for pos in _occurrences(pp.pattern, p):
            code[pos[li] - 1] += 1
    return tuple(code)


@dataclass(frozen=True)
class CodeReport:
    """Outcome of an induced-code bijectivity check over all of S_n."""

    ok: bool
    n: int
    reason: str | None = None
    witnesses: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = ()


def is_permutation_code(
    terms: Sequence[PointedPattern],
    n: int,
    final_term: VincularPattern | None = None,
    max_n: int | None = None,
) -> CodeReport:
    """Check whether the pointed terms induce a permutation code on S_n.

    Builds the induced digit vector for every permutation (with digit n
    replaced by the plain count of ``final_term`` when one is given) and
    checks that all n! vectors are subexcedant and pairwise distinct.
    Witnesses carry (permutation, code) pairs for any failure.
    """
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    for p in enumerate_permutations(n, max_n=max_n):
        code = list(induced_code(terms, p))
        if final_term is not None:
            code[-1] = count_occurrences(final_term, p)
        vec = tuple(code)
        for j, d in enumerate(vec):
            if not 0 <= d <= j:
                return CodeReport(False, n, "not subexcedant", ((p, vec),))
        if vec in seen:
            return CodeReport(False, n, "collision", ((seen[vec], vec), (p, vec)))
        seen[vec] = p
    return CodeReport(True, n)
