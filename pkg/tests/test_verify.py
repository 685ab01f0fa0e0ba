from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import naive_count_blocked, naive_triple_scan
from schurkit import (
    count_blocked,
    from_colouring,
    make_partition,
    verify_mod_sum_free,
    verify_schur,
    verify_sum_free,
    verify_symmetric_schur,
)


def test_sum_free_accepts_1_4():
    assert verify_sum_free({1, 4}, 4).valid


def test_sum_free_catches_equal_summands():
    report = verify_sum_free({1, 2}, 2)
    assert not report.valid
    v = report.violations[0]
    assert (v.a, v.b, v.c) == (1, 1, 2)


def test_sum_free_block_5_to_9():
    # all pairwise sums of {5..9} are at least 10, hence outside the set
    assert all(a + b >= 10 for a in range(5, 10) for b in range(5, 10))
    assert verify_sum_free({5, 6, 7, 8, 9}, 13).valid


def test_sum_free_out_of_range():
    with pytest.raises(ValueError, match="outside"):
        verify_sum_free({1, 5}, 4)


def test_schur_accepts_s2(s2_witness):
    assert verify_schur(s2_witness).valid


def test_schur_accepts_order_13():
    p = make_partition(13, 3, [{1, 4, 10, 13}, {2, 3, 11, 12}, {5, 6, 7, 8, 9}])
    assert naive_triple_scan(p) == []
    assert verify_schur(p).valid


def test_schur_violation_carries_colour():
    p = make_partition(3, 2, [{1, 2}, {3}])
    report = verify_schur(p)
    assert not report.valid
    v = report.violations[0]
    assert (v.a, v.b, v.c, v.colour) == (1, 1, 2, 1)


def test_violation_cap_keeps_true_count():
    p = from_colouring([1] * 30)
    report = verify_schur(p, cap=5)
    assert len(report.violations) == 5
    assert report.count == len(naive_triple_scan(p))
    assert report.count > 5


def test_mod_sum_free_singleton():
    assert verify_mod_sum_free({1}, 3).valid


def test_mod_sum_free_wrapped_form():
    report = verify_mod_sum_free({2, 3}, 3)
    assert not report.valid
    v = report.violations[0]
    assert v.wrapped and (v.a, v.b, v.c) == (2, 3, 2)  # 2 + 3 = 2 + 3


def test_mod_sum_free_wrapped_form_m4():
    report = verify_mod_sum_free({1, 4}, 4)
    assert not report.valid
    assert any(v.wrapped and (v.a, v.b, v.c) == (1, 4, 1) for v in report.violations)


def test_mod_sum_free_out_of_range():
    with pytest.raises(ValueError, match="outside"):
        verify_mod_sum_free({5}, 4)


@given(st.integers(2, 30).flatmap(lambda m: st.tuples(st.just(m), st.sets(st.integers(1, m)))))
def test_mod_sum_free_implies_plain(case):
    m, s = case
    if verify_mod_sum_free(s, m).valid and s:
        assert verify_sum_free(s, m).valid


def test_count_blocked_examples():
    assert count_blocked({1: 1}, 2, 1) == 1  # witness 1 + 1 = 2
    assert count_blocked({1: 1, 4: 1}, 3, 1) == 1  # witness 1 + 3 = 4
    assert count_blocked({1: 1}, 3, 1) == 0  # no witness of any shape


def test_count_blocked_rejects_assigned():
    with pytest.raises(ValueError, match="already assigned"):
        count_blocked({2: 1}, 2, 1)


@given(
    st.dictionaries(st.integers(1, 20), st.integers(1, 3), max_size=12),
    st.integers(1, 20),
    st.integers(1, 3),
)
def test_count_blocked_matches_naive(assignment, z, colour):
    if z in assignment:
        return
    assert count_blocked(assignment, z, colour) == naive_count_blocked(assignment, z, colour)


@given(
    st.dictionaries(st.integers(1, 20), st.integers(1, 3), max_size=12),
    st.integers(1, 20),
    st.integers(1, 3),
)
def test_blockage_equals_new_violations_on_extension(assignment, z, colour):
    # the witnesses counted by count_blocked are exactly the violations that
    # appear when z joins the class
    if z in assignment:
        return
    members = sorted(x for x, c in assignment.items() if c == colour)
    before = verify_sum_free(members, 100).count if members else 0
    after = verify_sum_free(members + [z], 100).count
    assert count_blocked(assignment, z, colour) == after - before


@given(st.integers(1, 40).flatmap(lambda n: st.lists(st.integers(1, 4), min_size=n, max_size=n)))
def test_schur_agrees_with_naive_scan(colours):
    p = from_colouring(colours)
    hits = naive_triple_scan(p)
    report = verify_schur(p, cap=10**9)
    assert report.valid == (not hits)
    assert report.count == len(hits)
    assert sorted((v.a, v.b, v.c, v.colour) for v in report.violations) == sorted(hits)


@given(st.integers(1, 33), st.data())
def test_symmetric_partition_fails_when_3_divides_n_plus_1(m, data):
    # with n + 1 = 3m, the position x = m mirrors to 2m = x + x, forcing the
    # monochromatic triple (x, x, 2x) into every symmetric partition
    from schurkit import is_symmetric

    n = 3 * m - 1
    half = data.draw(
        st.lists(st.integers(1, 3), min_size=(n + 1) // 2, max_size=(n + 1) // 2)
    )
    colours = [half[min(x, n + 1 - x) - 1] for x in range(1, n + 1)]
    p = from_colouring(colours)
    assert is_symmetric(p)
    report = verify_schur(p, cap=10**9)
    assert not report.valid
    x = m
    assert any((v.a, v.b, v.c) == (x, x, 2 * x) for v in report.violations)


def test_verify_symmetric_mode():
    p = make_partition(4, 2, [{1, 2, 3}, {4}])
    report = verify_symmetric_schur(p)
    assert report.mode == "symmetric"
    assert not report.valid
    assert (1, 4) in report.asymmetries
    assert verify_symmetric_schur(p, exceptions=(1,)).asymmetries == ()
