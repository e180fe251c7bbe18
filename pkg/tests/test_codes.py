import collections
import itertools

import pytest
from hypothesis import given, strategies as st

from permcodes import codes, core

PERM = (5, 2, 1, 6, 4, 3)
LEHMER = (0, 1, 2, 0, 2, 3)
MCMAHON = (0, 1, 2, 2, 4, 3)


def perms_strategy(max_n=8):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1)))
    )


class TestLehmer:
    def test_reference_permutation(self):
        assert codes.lehmer_encode(PERM) == LEHMER
        assert codes.lehmer_decode(LEHMER) == PERM

    def test_identity_is_all_zeros(self):
        assert codes.lehmer_encode((1, 2, 3, 4)) == (0, 0, 0, 0)
        assert codes.lehmer_decode((0, 0, 0)) == (1, 2, 3)

    def test_encode_injective_n4(self):
        images = {codes.lehmer_encode(p) for p in itertools.permutations(range(1, 5))}
        assert len(images) == 24

    def test_decode_roundtrip_all_sequences_n5(self):
        for t in core.enumerate_subexcedant(5):
            assert codes.lehmer_encode(codes.lehmer_decode(t)) == t

    def test_encode_roundtrip_all_permutations_n6(self):
        for p in core.enumerate_permutations(6):
            assert codes.lehmer_decode(codes.lehmer_encode(p)) == p

    def test_digit_sum_is_inv(self):
        for p in core.enumerate_permutations(6):
            assert sum(codes.lehmer_encode(p)) == core.inv(p)

    def test_decode_rejects_invalid(self):
        with pytest.raises(ValueError):
            codes.lehmer_decode((0, 2))


class TestMcMahon:
    def test_reference_permutation(self):
        assert codes.mcmahon_code(PERM) == MCMAHON

    def test_identity_is_all_zeros(self):
        assert codes.mcmahon_code((1, 2, 3, 4, 5)) == (0,) * 5

    def test_digit_sum_is_maj(self):
        for p in core.enumerate_permutations(6):
            assert sum(codes.mcmahon_code(p)) == core.maj(p)

    def test_digit_sum_distribution_matches_inv_n5(self):
        by_maj = collections.Counter(
            sum(codes.mcmahon_code(p)) for p in core.enumerate_permutations(5)
        )
        by_inv = collections.Counter(
            core.inv(p) for p in core.enumerate_permutations(5)
        )
        assert by_maj == by_inv


class TestBuildFromMcMahon:
    def test_reference_rows(self):
        steps = codes.build_from_mcmahon_steps(MCMAHON)
        assert steps == [
            (6, 3, (4, 5, 6, 1, 2, 3)),
            (5, 4, (5, 6, 1, 2, 4, 3)),
            (4, 2, (1, 2, 5, 6, 4, 3)),
            (3, 2, (2, 5, 1, 6, 4, 3)),
            (2, 1, (5, 2, 1, 6, 4, 3)),
            (1, 0, (5, 2, 1, 6, 4, 3)),
        ]
        assert codes.build_from_mcmahon(MCMAHON) == PERM

    def test_zeros_build_identity(self):
        assert codes.build_from_mcmahon((0, 0, 0, 0)) == (1, 2, 3, 4)

    def test_roundtrip_all_sequences_n6(self):
        for s in core.enumerate_subexcedant(6):
            assert codes.mcmahon_code(codes.build_from_mcmahon(s)) == s

    def test_roundtrip_all_permutations_n6(self):
        for p in core.enumerate_permutations(6):
            assert codes.build_from_mcmahon(codes.mcmahon_code(p)) == p


@given(perms_strategy())
def test_lehmer_roundtrip(p):
    p = tuple(p)
    assert codes.lehmer_decode(codes.lehmer_encode(p)) == p


@given(perms_strategy())
def test_mcmahon_roundtrip_and_sum(p):
    p = tuple(p)
    m = codes.mcmahon_code(p)
    assert codes.build_from_mcmahon(m) == p
    assert sum(m) == core.maj(p)
