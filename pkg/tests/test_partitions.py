import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import class_counts, partition_count
from tropical_hurwitz.partitions import (
    Partition,
    PartitionError,
    RamificationProfile,
    all_partitions,
    class_size,
    ell,
    genus_from_profile,
    parse_partition,
    parse_profile,
    r,
)


def P(*parts):
    return Partition.of(parts)


class TestParse:
    def test_comma_form(self):
        p = parse_partition("2,1", 3)
        assert p.multiplicities == {1: 1, 2: 1}

    def test_identity(self):
        assert parse_partition("1,1,1", 3) == Partition.identity(3)

    def test_multiplicity_form(self):
        assert parse_partition("1^2 2^1", 4) == P(2, 1, 1)

    def test_unsorted_input_is_normalised(self):
        assert parse_partition("1,3,2", 6).parts == (3, 2, 1)
        assert str(parse_partition("1,3,2", 6)) == "3,2,1"

    @pytest.mark.parametrize("text", ["3,1", "0,3", "-1,4", "a,b", "", "2^x"])
    def test_rejects(self, text):
        with pytest.raises(PartitionError):
            parse_partition(text, 3)

    def test_different_degrees_never_equal(self):
        assert Partition(2, (1, 1)) != Partition(3, (1, 1, 1))


class TestAllPartitions:
    def test_small(self):
        assert all_partitions(1) == (P(1),)
        assert all_partitions(3) == (P(3), P(2, 1), P(1, 1, 1))
        assert len(all_partitions(5)) == 7

    @pytest.mark.parametrize("d", range(1, 13))
    def test_count_and_uniqueness(self, d):
        parts = all_partitions(d)
        assert len(parts) == partition_count(d)
        assert len(set(parts)) == len(parts)
        assert all(sum(p.parts) == d for p in parts)

    def test_order_is_reverse_lexicographic(self):
        parts = all_partitions(6)
        assert parts[0] == P(6) and parts[-1] == Partition.identity(6)
        assert list(parts) == sorted(parts)


class TestClassSize:
    def test_examples(self):
        assert class_size(Partition.identity(5)) == 1
        assert class_size(P(2, 1)) == 3
        assert class_size(P(3)) == 2

    @pytest.mark.parametrize("d", range(1, 8))
    def test_matches_bruteforce(self, d):
        counts = class_counts(d)
        for p in all_partitions(d):
            assert class_size(p) == counts[p.parts]
        assert sum(class_size(p) for p in all_partitions(d)) == math.factorial(d)


class TestStatistics:
    def test_identity(self):
        p = Partition.identity(4)
        assert (ell(p), r(p)) == (4, 0)

    def test_small(self):
        assert (ell(P(3)), r(P(3))) == (1, 2)
        assert (ell(P(2, 1)), r(P(2, 1))) == (2, 1)

    @given(st.integers(1, 10).flatmap(lambda d: st.sampled_from(all_partitions(d))))
    def test_ell_plus_r(self, p):
        assert ell(p) + r(p) == p.d


class TestProfiles:
    def test_needs_three_points(self):
        with pytest.raises(PartitionError):
            RamificationProfile(2, (P(2), P(2)))

    def test_mixed_degrees_rejected(self):
        with pytest.raises(PartitionError):
            RamificationProfile(2, (P(2), P(2), P(3)))

    def test_parse_profile(self):
        prof = parse_profile("2,1;2,1;3", 3)
        assert prof.n == 3 and prof[2] == P(3)
        with pytest.raises(PartitionError):
            parse_profile("3;2;2;2", 2)

    def test_genus(self):
        assert genus_from_profile(parse_profile("2;2;2;2", 2)) == 1
        assert genus_from_profile(parse_profile("2,1;2,1;3", 3)) == 0
        assert genus_from_profile(parse_profile("1;1;1;1", 1)) == 0

    def test_genus_may_be_half_integral(self):
        g = genus_from_profile(parse_profile("2;2;2", 2))
        assert g == Fraction(1, 2)
