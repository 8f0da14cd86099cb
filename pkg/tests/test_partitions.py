import json

import pytest
from hypothesis import given, strategies as st

from dysonsym import (
    CountTable,
    conjugate,
    crank,
    crank_counts,
    crank_moment,
    gen_binomial,
    partition_count,
    partitions_of,
    rank,
    rank_counts,
    rank_moment,
)
from dysonsym.partitions import CRANK_TABLE_ONE, check_partition


def test_partitions_of_small():
    assert list(partitions_of(0)) == [()]
    assert list(partitions_of(1)) == [(1,)]
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partition_count_matches_enumeration():
    for n in range(12):
        assert partition_count(n) == len(list(partitions_of(n)))


def test_partition_count_known_values():
    # Classical values of p(n).
    assert partition_count(10) == 42
    assert partition_count(20) == 627
    assert partition_count(40) == 37338
    assert partition_count(80) == 15796476


def test_check_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        check_partition((2, 0))
    assert check_partition([3, 1]) == (3, 1)


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((2, 2)) == (2, 2)


@given(st.integers(1, 12))
def test_conjugate_is_involution(n):
    for lam in partitions_of(n):
        assert conjugate(conjugate(lam)) == lam


def test_rank_and_crank_examples():
    assert rank((4,)) == 3
    assert rank((1, 1, 1, 1)) == -3
    assert crank((4,)) == 4
    assert crank((2, 1, 1)) == -2
    assert crank((1, 1, 1, 1)) == -4
    assert crank((3, 1)) == 0
    with pytest.raises(ValueError):
        crank(())
    with pytest.raises(ValueError):
        rank(())


def test_rank_crank_conjugate_symmetry():
    # rank(conjugate) = -rank; crank table is symmetric in m.
    for n in range(1, 11):
        for lam in partitions_of(n):
            assert rank(conjugate(lam)) == -rank(lam)
    for n in range(2, 21):
        table = crank_counts(n)
        for m in table.support():
            assert table[m] == table[-m]


def test_crank_counts_n1_convention():
    assert crank_counts(1).counts == CRANK_TABLE_ONE


def test_crank_counts_match_direct_enumeration():
    for n in range(2, 16):
        direct = {}
        for lam in partitions_of(n):
            c = crank(lam)
            direct[c] = direct.get(c, 0) + 1
        assert crank_counts(n).counts == direct


def test_count_tables_sum_to_pn():
    for n in range(2, 31):
        assert crank_counts(n).total() == partition_count(n)
        assert rank_counts(n).total() == partition_count(n)


def test_count_table_serialization_round_trip():
    table = crank_counts(6)
    assert CountTable.from_json(table.to_json()) == table
    parsed = json.loads(table.to_json())
    assert parsed["n"] == 6
    lines = table.to_csv().strip().splitlines()
    assert lines[0] == "m,count"
    assert len(lines) == len(table.support()) + 1


def test_gen_binomial_negative_and_positive():
    assert gen_binomial(5, 2) == 10
    assert gen_binomial(-1, 4) == 1
    assert gen_binomial(-2, 4) == 5
    assert gen_binomial(3, 0) == 1
    assert gen_binomial(2, 5) == 0
    with pytest.raises(ValueError):
        gen_binomial(3, -1)


@given(st.integers(-30, 30), st.integers(0, 8))
def test_gen_binomial_pascal_recurrence(a, b):
    if b >= 1:
        assert gen_binomial(a, b) == gen_binomial(a - 1, b) + gen_binomial(a - 1, b - 1)


def test_moment_known_values():
    # mu_2(5) = 35; spt(n) = mu_2(n) - eta_2(n).
    assert crank_moment(2, 5) == 35
    spt = {1: 1, 2: 3, 3: 5, 4: 10, 5: 14, 6: 26, 7: 35, 8: 57, 9: 80, 10: 119}
    for n, value in spt.items():
        assert crank_moment(2, n) - rank_moment(2, n) == value


def test_odd_moments_vanish():
    for k in (1, 3, 5, 7):
        for n in range(1, 21):
            assert crank_moment(k, n) == 0
            assert rank_moment(k, n) == 0
