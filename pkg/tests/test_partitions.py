import pytest

from qcrank.partitions import (
    ENUMERATION_CUTOFF,
    combination_series,
    crank,
    enumerate_partitions,
    ones,
    p_count,
    p_pentagonal,
    rank,
    series_from_stats,
    stats,
)


def test_partitions_of_four():
    assert list(enumerate_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(enumerate_partitions(0)) == [()]
    with pytest.raises(ValueError):
        list(enumerate_partitions(-1))


def test_rank_and_crank_examples():
    assert rank((4,)) == 3 and rank((1, 1, 1, 1)) == -3 and rank((2, 2)) == 0
    assert crank((4,)) == 4 and crank((1, 1, 1, 1)) == -4 and crank((3, 1)) == 0
    assert rank(()) == 0 and crank(()) == 0
    assert ones((3, 1, 1)) == 2 and ones((3,)) == 0


def test_crank_ties_not_counted():
    # two ones; the part 2 is not bigger than 2
    assert crank((2, 1, 1)) == -2
    assert crank((3, 1, 1)) == -1


def test_p_count_agrees_with_pentagonal():
    for n in range(ENUMERATION_CUTOFF + 1):
        assert p_count(n) == p_pentagonal(n)
    assert p_count(100) == 190569292


def test_stats_examples():
    assert stats(4, 5, "N")[0] == 1
    t = stats(4, 5, "crank")
    assert t.total() == sum(ones(l) for l in enumerate_partitions(4))
    assert t[-1] == t[4]
    with pytest.raises(ValueError):
        stats(4, 1, "N")
    with pytest.raises(ValueError):
        stats(4, 5, "bogus")


def test_total_ones_two_ways():
    # total ones over all crank classes equals sum_{j>=1} p(n-j)
    for n in range(1, 20):
        assert stats(n, 7, "M_omega").total() == sum(p_count(n - j) for j in range(1, n + 1))


def test_rank_equidistribution_small():
    for n in (4, 9, 14):
        t = stats(n, 5, "N")
        assert len({t[i] for i in range(5)}) == 1


def test_series_helpers():
    s = series_from_stats(5, 0, "N", 10)
    assert s[4] == 1
    c = combination_series(5, {1: 1, 4: -1}, "NT", 10, start=1)
    assert c[0] == 0
