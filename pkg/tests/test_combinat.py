import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from z2quiver.combinat import (
    DimVector,
    SetPartition,
    YoungLabel,
    bn_canonicalize,
    enumerate_set_partitions,
    full_mask,
    multiset_coeff,
    parse_dim_vector,
    parse_subset,
    partitions_of_int,
    subset_str,
    sym_diff,
)

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def mask(*elements: int) -> int:
    return sum(1 << (e - 1) for e in elements)


class TestSymDiff:
    def test_definition(self):
        assert sym_diff(mask(1, 2), mask(2, 3), 3) == mask(1, 3)

    def test_self_cancellation(self):
        for a in range(8):
            assert sym_diff(a, a, 3) == 0

    def test_identity(self):
        for a in range(8):
            assert sym_diff(a, 0, 3) == a

    def test_ground_set_mismatch(self):
        with pytest.raises(ValueError):
            sym_diff(mask(3), mask(1), 2)

    def test_commutative_and_cardinality_exhaustive(self):
        n = 8
        for a in range(1 << n):
            for b in range(1 << n):
                d = sym_diff(a, b, n)
                assert d == sym_diff(b, a, n)
                assert d.bit_count() == a.bit_count() + b.bit_count() - 2 * (a & b).bit_count()

    def test_associative_exhaustive_small(self):
        n = 4
        for a, b, c in itertools.product(range(1 << n), repeat=3):
            assert sym_diff(sym_diff(a, b, n), c, n) == sym_diff(a, sym_diff(b, c, n), n)

    @given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 255))
    def test_associative_random(self, a, b, c):
        n = 8
        assert sym_diff(sym_diff(a, b, n), c, n) == sym_diff(a, sym_diff(b, c, n), n)

    def test_subset_str_roundtrip(self):
        for a in range(16):
            assert parse_subset(subset_str(a), 4) == a


def brute_multiset(k: int, n: int) -> int:
    # independent oracle: count weakly decreasing n-tuples over {1..k}
    return sum(1 for _ in itertools.combinations_with_replacement(range(k), n))


class TestMultisetCoeff:
    def test_two_choose_three(self):
        assert brute_multiset(2, 3) == 4
        assert multiset_coeff(2, 3) == 4

    def test_one_symbol(self):
        for n in range(1, 8):
            assert multiset_coeff(1, n) == 1

    def test_single_draw(self):
        for k in range(1, 8):
            assert multiset_coeff(k, 1) == k

    def test_edge_cases(self):
        assert multiset_coeff(0, 3) == 0
        assert multiset_coeff(0, 0) == 1
        assert multiset_coeff(5, 0) == 1
        with pytest.raises(ValueError):
            multiset_coeff(-1, 2)

    def test_against_enumeration(self):
        for k in range(0, 6):
            for n in range(0, 6):
                assert multiset_coeff(k, n) == brute_multiset(k, n)


class TestSetPartitions:
    def test_n1(self):
        parts = list(enumerate_set_partitions(1))
        assert parts == [SetPartition(1, (1,))]

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            list(enumerate_set_partitions(0))

    def test_n3_explicit(self):
        got = {p.blocks for p in enumerate_set_partitions(3)}
        expected = {
            (mask(1, 2, 3),),
            (mask(1, 2), mask(3)),
            (mask(1, 3), mask(2)),
            (mask(2, 3), mask(1)),
            (mask(1), mask(2), mask(3)),
        }
        assert got == expected

    @pytest.mark.parametrize("n", range(1, 9))
    def test_bell_counts_valid_and_distinct(self, n):
        seen = set()
        for p in enumerate_set_partitions(n):
            assert p.n == n
            union = 0
            for b in p.blocks:
                assert b and not (b & union)
                union |= b
            assert union == full_mask(n)
            # canonical order: size desc, then min element asc
            keys = [(-b.bit_count(), (b & -b).bit_length()) for b in p.blocks]
            assert keys == sorted(keys)
            seen.add(p.blocks)
        assert len(seen) == BELL[n]

    def test_invalid_partitions_rejected(self):
        with pytest.raises(ValueError):
            SetPartition(3, (mask(1, 2),))  # does not cover
        with pytest.raises(ValueError):
            SetPartition(3, (mask(1, 2), mask(2, 3)))  # overlap
        with pytest.raises(ValueError):
            SetPartition(3, (mask(1, 2, 3), 0))  # empty block

    def test_young_rows(self):
        p = SetPartition(5, (mask(1, 2), mask(3, 4), mask(5)))
        assert p.young_rows() == ((2, 2), (1, 1))


class TestBnCanonicalize:
    def test_flip_then_sort(self):
        v = DimVector(((1, 2), (0, 3), (2, 1)))
        assert bn_canonicalize(v).pairs == ((3, 0), (2, 1), (2, 1))

    def test_idempotent(self):
        for v in (DimVector(((3, 0), (2, 1))), DimVector(((0, 2), (2, 0)))):
            c = bn_canonicalize(v)
            assert bn_canonicalize(c) == c

    def test_two_pairs(self):
        assert bn_canonicalize(DimVector(((0, 2), (2, 0)))).pairs == ((2, 0), (2, 0))

    def test_orbit_invariant_preserved(self):
        # the unordered-pair multiset is a complete orbit invariant
        for v in (DimVector(((1, 3), (4, 0), (2, 2))), DimVector(((0, 1), (1, 0)))):
            c = bn_canonicalize(v)
            assert sorted(tuple(sorted(p)) for p in v.pairs) == sorted(
                tuple(sorted(p)) for p in c.pairs
            )

    @pytest.mark.parametrize("n", range(1, 6))
    @pytest.mark.parametrize("m", range(0, 7))
    def test_canonical_count_matches_orbit_formula(self, n, m):
        reps = set()
        for plus in itertools.product(range(m + 1), repeat=n):
            reps.add(bn_canonicalize(DimVector(tuple((p, m - p) for p in plus))))
        if m % 2 == 0:
            expected = math.comb(m // 2 + n, n)
        else:
            expected = math.comb((m - 1) // 2 + n, n)
        assert len(reps) == expected


class TestDimVector:
    def test_parse_and_str_roundtrip(self):
        for text in ("2,1;2,1;2,1", "4,0;4,0;2,2;2,2", "0,1"):
            assert str(parse_dim_vector(text)) == text

    def test_repeat_shorthand(self):
        assert parse_dim_vector("(4,0)*2;2,2;2,2") == parse_dim_vector("4,0;4,0;2,2;2,2")
        assert parse_dim_vector("(2,1)*3") == DimVector.standard(3, 3)

    def test_parse_reports_offending_pair(self):
        with pytest.raises(ValueError, match="pair 2"):
            parse_dim_vector("2,1;2;2,1")

    def test_constant_sum_enforced(self):
        with pytest.raises(ValueError):
            DimVector(((2, 1), (1, 1)))
        with pytest.raises(ValueError):
            DimVector(((1, -1),))

    def test_level_and_flat(self):
        v = DimVector.standard(3, 4)
        assert (v.n, v.m) == (3, 4)
        assert v.flat() == (3, 1, 3, 1, 3, 1)

    def test_character(self):
        v = DimVector.character(3, mask(1, 3))
        assert v.pairs == ((0, 1), (1, 0), (0, 1))

    @given(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=1, max_size=6))
    def test_parse_format_roundtrip_random(self, raw):
        m = sum(raw[0])
        pairs = tuple((p, m - p) for p, _ in raw if p <= m)
        if not pairs:
            pairs = ((m, 0),)
        v = DimVector(pairs)
        assert parse_dim_vector(str(v)) == v


class TestYoungLabel:
    def test_valid(self):
        y = YoungLabel(((3, 2), (1, 1)), ((3, 1), (1,)))
        assert y.n == 7
        assert y.sizes() == (3, 3, 1)
        assert y.ks() == (3, 1, 1)
        assert y.label() == "(3,3,1),(3,1,1)"

    def test_invalid(self):
        with pytest.raises(ValueError):
            YoungLabel(((2, 1), (2, 1)), ((1,), (1,)))  # lengths not decreasing
        with pytest.raises(ValueError):
            YoungLabel(((2, 2),), ((1, 2),))  # k not weakly decreasing
        with pytest.raises(ValueError):
            YoungLabel(((2, 1),), ((3,),))  # k out of range


def test_partitions_of_int():
    assert set(partitions_of_int(4)) == {(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)}
    counts = [len(list(partitions_of_int(n))) for n in range(8)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15]
