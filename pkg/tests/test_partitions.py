from __future__ import annotations

import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from altrestrict.partitions import (
    Composition,
    Partition,
    beta,
    double,
    enumerate_p_regular,
    enumerate_splitting,
    in_splitting_class,
    is_p_regular,
    parse_partition,
)

from conftest import brute_p_regular

GOLDEN = Path(__file__).parent / "golden"


class TestPartitionType:
    def test_strips_trailing_zeros(self):
        assert Partition((3, 1, 0, 0)) == (3, 1)
        assert Partition((0,)) == ()

    def test_size_and_length(self):
        lam = Partition((5, 3, 1))
        assert lam.n == 9
        assert lam.h == 3

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Partition((3, -1))

    def test_part_is_one_based_and_padded(self):
        lam = Partition((4, 2))
        assert lam.part(1) == 4
        assert lam.part(3) == 0

    def test_text_round_trip(self):
        assert str(Partition((5, 3, 1))) == "5,3,1"
        assert parse_partition("5,3,1") == (5, 3, 1)
        assert parse_partition(" 7 , 5 ") == (7, 5)

    @pytest.mark.parametrize("text", ["1,2", "3,,1", "a", "3,0,1", "-1"])
    def test_parse_is_strict(self, text):
        with pytest.raises(ValueError):
            parse_partition(text)

    def test_composition_positive(self):
        assert Composition((1, 3, 2)).n == 6
        with pytest.raises(ValueError):
            Composition((2, 0, 1))


class TestRegularity:
    @pytest.mark.parametrize(
        "lam,p,expected",
        [((5, 3), 2, True), ((2, 1, 1), 2, False), ((3, 3, 3), 3, False), ((3, 3, 1), 3, True)],
    )
    def test_examples(self, lam, p, expected):
        assert is_p_regular(Partition(lam), p) is expected

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_enumeration_matches_brute_force(self, p):
        for n in range(31):
            assert enumerate_p_regular(n, p) == brute_p_regular(n, p), n

    def test_small_enumeration(self):
        assert enumerate_p_regular(3, 2) == [(2, 1), (3,)]
        assert enumerate_p_regular(0, 2) == [()]


class TestBetaAndDouble:
    @pytest.mark.parametrize("n,expected", [(6, (4, 2)), (7, (4, 3)), (1, (1,)), (2, (2,)), (8, (5, 3))])
    def test_beta(self, n, expected):
        assert beta(n) == expected

    @pytest.mark.parametrize(
        "lam,expected", [((3, 1), (2, 1, 1)), ((4,), (3, 1)), ((8,), (5, 3)), ((4, 3), (3, 1, 2, 1))]
    )
    def test_double(self, lam, expected):
        assert double(Partition(lam)) == expected

    def test_double_collides_only_through_the_part_two(self):
        assert double(Partition((3,))) == double(Partition((2, 1)))

    def test_double_injective_on_admissible_2_regular(self):
        for n in range(1, 31):
            images = [
                double(lam)
                for lam in enumerate_p_regular(n, 2)
                if all(part % 4 != 2 for part in lam)
            ]
            assert len(set(images)) == len(images)


class TestSplittingClass:
    def test_n8_p2(self):
        assert set(enumerate_splitting(8, 2)) == {(5, 3), (4, 3, 1)}

    @pytest.mark.parametrize(
        "lam,p", [((4, 3, 1), 2), ((3, 2, 1), 2), ((7, 3, 2), 3)]
    )
    def test_members(self, lam, p):
        assert in_splitting_class(Partition(lam), p)

    def test_rejects_irregular(self):
        with pytest.raises(ValueError):
            in_splitting_class(Partition((2, 1, 1)), 2)

    def test_two_regular_matches_preimage_search(self):
        # independent route: image of double over admissible preimages
        for n in range(1, 27):
            preimages = [
                mu
                for m in range(n + 1)
                for mu in enumerate_p_regular(m, 2)
                if all(part % 4 != 2 for part in mu)
            ]
            images = {tuple(double(mu)) for mu in preimages}
            expected = sorted(
                lam
                for lam in images
                if sum(lam) == n and list(lam) == sorted(lam, reverse=True) and len(set(lam)) == len(lam)
            )
            assert enumerate_splitting(n, 2) == expected, n

    def test_beta_membership(self):
        for n in range(1, 41):
            assert in_splitting_class(beta(n), 2) is (n % 4 != 2), n

    @pytest.mark.parametrize("p", [2, 3])
    def test_at_least_three_rows_unless_basic_spin(self, p):
        for n in range(5, 31 if p == 2 else 25):
            for lam in enumerate_splitting(n, p):
                assert lam.h >= 3 or (p == 2 and n % 4 != 2 and lam == beta(n)), (n, lam)

    def test_golden_n5_p3(self):
        golden = json.loads((GOLDEN / "splitting_5_3.json").read_text())
        assert [list(lam) for lam in enumerate_splitting(5, 3)] == golden


@given(st.lists(st.integers(min_value=1, max_value=12), max_size=8))
def test_partition_canonical_from_sorted(parts):
    lam = Partition(sorted(parts, reverse=True))
    assert lam.n == sum(parts)
    assert all(a >= b for a, b in zip(lam, lam[1:]))
    assert parse_partition(str(lam)) == lam if lam else True
