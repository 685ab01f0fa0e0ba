from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from schurkit import (
    Partition,
    PartitionError,
    from_colouring,
    is_symmetric,
    make_partition,
    profile,
    subset_view,
)


def colourings(max_n=40, max_k=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.integers(1, max_k), min_size=n, max_size=n)
    )


def test_make_partition_basic(s2_witness):
    assert s2_witness.n == 4
    assert s2_witness.k == 2
    assert s2_witness.subsets() == [(1, 4), (2, 3)]


def test_make_partition_smallest():
    p = make_partition(1, 1, [{1}])
    assert p.subsets() == [(1,)]


def test_make_partition_gap_reported():
    with pytest.raises(PartitionError, match=r"gap.*3"):
        make_partition(3, 2, [{1}, {2}])


def test_make_partition_overlap_reported():
    with pytest.raises(PartitionError, match=r"more than one.*2"):
        make_partition(3, 2, [{1, 2}, {2, 3}])


def test_make_partition_empty_subset_reported():
    with pytest.raises(PartitionError, match="empty"):
        make_partition(2, 2, [{1, 2}, set()])


def test_make_partition_out_of_range_reported():
    with pytest.raises(PartitionError, match=r"outside.*5"):
        make_partition(4, 2, [{1, 5}, {2, 3}])


def test_make_partition_wrong_count():
    with pytest.raises(PartitionError, match="expected k=3"):
        make_partition(4, 3, [{1, 4}, {2, 3}])


def test_every_colour_must_be_used():
    with pytest.raises(PartitionError, match="empty colour"):
        Partition(n=2, k=3, colour_of=(1, 2))


def test_subset_view(s2_witness):
    assert subset_view(s2_witness, 1).members == (1, 4)
    assert subset_view(s2_witness, 2).members == (2, 3)
    with pytest.raises(PartitionError):
        subset_view(s2_witness, 3)


def test_subset_view_singleton():
    assert subset_view(make_partition(1, 1, [{1}]), 1).members == (1,)


def test_is_symmetric(s2_witness):
    assert is_symmetric(s2_witness)
    assert not is_symmetric(make_partition(2, 2, [{1}, {2}]))
    assert is_symmetric(make_partition(3, 1, [{1, 2, 3}]))


def test_is_symmetric_exceptions():
    # 1 and 4 differ, but excusing position 1 excuses the (1, 4) pair
    p = make_partition(4, 2, [{1, 2, 3}, {4}])
    assert not is_symmetric(p)
    assert is_symmetric(p, exceptions=(1,))
    assert is_symmetric(p, exceptions=(4,))


def test_profile(s2_witness):
    info = profile(s2_witness)
    assert (info.n, info.k) == (4, 2)
    assert info.sizes == (2, 2)
    assert info.symmetric
    assert info.n_mod_16 == 4


def test_profile_singleton():
    info = profile(make_partition(1, 1, [{1}]))
    assert (info.n, info.k, info.sizes, info.symmetric) == (1, 1, (1,), True)


def test_profile_reports_n_mod_16():
    p = from_colouring([1] * 1696)
    assert profile(p).n_mod_16 == 0


@given(colourings())
def test_round_trip_subsets(colours):
    p = from_colouring(colours)
    rebuilt = make_partition(p.n, p.k, [set(s) for s in p.subsets()])
    assert rebuilt == p
    assert sum(len(s) for s in p.subsets()) == p.n


@given(colourings())
def test_symmetry_matches_definitional_scan(colours):
    p = from_colouring(colours)
    expected = all(p.colour(x) == p.colour(p.n + 1 - x) for x in range(1, p.n + 1))
    assert is_symmetric(p) == expected


@given(colourings())
def test_from_colouring_normalizes_labels(colours):
    p = from_colouring(colours)
    seen = []
    for c in p.colour_of:
        if c not in seen:
            seen.append(c)
    assert seen == list(range(1, p.k + 1))
