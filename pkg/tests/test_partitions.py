from itertools import combinations_with_replacement

import pytest

from trigsums.partitions import (
    PartitionMultiplicities,
    enumerate_partitions,
    format_partition_table,
    multinomial_factor,
    partition_count,
)


def test_k5_rows_in_order():
    assert [str(p) for p in enumerate_partitions(5)] == [
        "{5}", "{4,1}", "{3,2}", "{3,1,1}", "{2,2,1}", "{2,1,1,1}", "{1,1,1,1,1}",
    ]
    assert [str(p) for p in enumerate_partitions(1)] == ["{1}"]


def _brute_partitions(k):
    out = set()
    for n in range(1, k + 1):
        for combo in combinations_with_replacement(range(1, k + 1), n):
            if sum(combo) == k:
                out.add(tuple(sorted(combo, reverse=True)))
    return out


@pytest.mark.parametrize("k", range(1, 11))
def test_enumeration_matches_brute_force(k):
    got = [p.parts() for p in enumerate_partitions(k)]
    assert len(got) == len(set(got))
    assert set(got) == _brute_partitions(k)
    for p in enumerate_partitions(k):
        assert sum(i * p.n(i) for i in range(1, k + 1)) == k


def test_counts():
    assert partition_count(0) == 1
    assert partition_count(5) == 7
    assert partition_count(10) == 42
    assert partition_count(40) == 37338
    assert sum(1 for _ in enumerate_partitions(40)) == 37338
    for k in range(1, 25):
        assert partition_count(k) == sum(1 for _ in enumerate_partitions(k))


def test_multinomial():
    assert multinomial_factor(PartitionMultiplicities.from_parts({2: 1, 1: 3})) == 4
    assert multinomial_factor(PartitionMultiplicities.from_parts({5: 1})) == 1
    assert multinomial_factor(PartitionMultiplicities.from_parts({3: 1, 2: 1})) == 2


def test_table_layout():
    lines = format_partition_table(5).splitlines()
    assert lines[0].split() == ["Partition", "n_1", "n_2", "n_3", "n_4", "n_5"]
    assert len(lines) == 8
    assert lines[6].split() == ["{2,1,1,1}", "3", "1"]
