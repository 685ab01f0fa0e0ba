from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import naive_triple_scan
from schurkit import (
    PartialPartition,
    SearchConfig,
    SeedContradiction,
    SymmetryImpossibleWarning,
    blockage_snapshot,
    enumerate_schur_partitions,
    exhaustive_max,
    extend,
    extend_parallel,
    frontier_branches,
    is_symmetric,
    make_partition,
    resume,
    seed_prefix,
    seed_symmetric,
    symmetry_obstruction,
    verify_schur,
)


# -- seeding -------------------------------------------------------------------


def test_seed_symmetric_pairs_and_new_colour(s2_witness):
    partial = seed_symmetric(s2_witness, 13)
    assignment = partial.assignment()
    assert assignment[5] == 3  # next integer opens the new colour
    for x, mirror in ((1, 13), (2, 12), (3, 11), (4, 10), (5, 9)):
        assert assignment[x] == assignment[mirror]
    assert sorted(assignment) == [1, 2, 3, 4, 5, 9, 10, 11, 12, 13]


def test_seed_symmetric_can_complete_the_target():
    base = make_partition(1, 1, [{1}])
    partial = seed_symmetric(base, 4)
    assert partial.complete
    p = partial.to_partition()
    assert p.subsets() == [(1, 4), (2, 3)]
    assert verify_schur(p).valid


def test_seed_symmetric_warns_and_contradicts_at_forced_triple(s2_witness):
    # 15 = 3 * 5: seeding 5 into the new colour drags 10 = 15 - 5 along,
    # completing 5 + 5 = 10
    with pytest.warns(SymmetryImpossibleWarning):
        with pytest.raises(SeedContradiction) as exc_info:
            seed_symmetric(s2_witness, 14)
    v = exc_info.value.violation
    assert (v.a, v.b, v.c) == (5, 5, 10)


def test_seed_symmetric_rejects_invalid_base():
    bad = make_partition(3, 2, [{1, 2}, {3}])
    with pytest.raises(Exception, match="invalid"):
        seed_symmetric(bad, 10)


def test_seed_requires_room():
    base = make_partition(4, 2, [{1, 4}, {2, 3}])
    with pytest.raises(ValueError):
        seed_symmetric(base, 4)


def test_symmetry_obstruction():
    assert symmetry_obstruction(14) == 5
    assert symmetry_obstruction(13) is None
    assert symmetry_obstruction(44) == 15
    assert symmetry_obstruction(44, exceptions=(15,)) is None
    assert symmetry_obstruction(44, exceptions=(30,)) is None


# -- extend ---------------------------------------------------------------------


def test_extend_from_s2_seed_reaches_13(s2_witness):
    outcome = extend(seed_symmetric(s2_witness, 13))
    assert outcome.status == "found"
    assert outcome.witness.n == 13 and outcome.witness.k == 3
    assert verify_schur(outcome.witness).valid
    assert is_symmetric(outcome.witness)


def test_extend_symmetric_exhausts_when_3_divides(s2_witness):
    # seeding to 20 passes (the obstruction at 7 is beyond the seed), but no
    # symmetric completion exists
    with pytest.warns(SymmetryImpossibleWarning):
        partial = seed_symmetric(s2_witness, 20)
    outcome = extend(partial)
    assert outcome.status == "exhausted"


def test_extend_seeded_ladder_13_to_40(s3_witness):
    # 41 is not divisible by 3, so the order-40 target admits full symmetry
    outcome = extend(seed_symmetric(s3_witness, 40))
    assert outcome.status == "found"
    w = outcome.witness
    assert (w.n, w.k) == (40, 4)
    assert verify_schur(w).valid
    assert is_symmetric(w)
    assert naive_triple_scan(w) == []


def test_extend_witness_keeps_seed_colours(s3_witness):
    w = extend(seed_symmetric(s3_witness, 40)).witness
    for x in range(1, 14):
        assert w.colour(x) == s3_witness.colour(x)
    assert w.colour(14) == 4


def test_symmetric_witness_is_in_unconstrained_space(s3_witness):
    # symmetry only prunes: the symmetric witness is a valid partition plain
    w = extend(seed_symmetric(s3_witness, 40)).witness
    plain = extend(seed_prefix(s3_witness, 40))
    assert plain.status == "found"
    assert verify_schur(w).valid and verify_schur(plain.witness).valid


def test_near_symmetric_search_finds_order_44():
    # N + 1 = 45 forces the (15, 30) pair apart; with that single exception a
    # 4-colour near-symmetric partition of [1, 44] exists and is found fresh
    partial = PartialPartition(44, 4, symmetric=True, exceptions=(15,))
    outcome = extend(partial)
    assert outcome.status == "found"
    assert verify_schur(outcome.witness).valid
    assert is_symmetric(outcome.witness, exceptions=(15,))
    assert not is_symmetric(outcome.witness)


def test_budget_exceeded_reports_checkpoint():
    outcome = extend(PartialPartition(44, 4), SearchConfig(node_budget=50))
    assert outcome.status == "budget-exceeded"
    assert outcome.stats.nodes == 50
    assert outcome.checkpoint is not None


def test_resume_reaches_the_same_witness():
    config = SearchConfig()
    full = extend(PartialPartition(13, 3), config)
    assert full.status == "found"
    cut = max(1, full.stats.nodes // 2)
    interrupted = extend(PartialPartition(13, 3), SearchConfig(node_budget=cut))
    assert interrupted.status == "budget-exceeded"
    resumed = resume(interrupted.checkpoint, config)
    assert resumed.status == "found"
    assert resumed.witness == full.witness
    assert resumed.stats.nodes + cut == full.stats.nodes


def test_resume_refuses_random_tie_break():
    interrupted = extend(PartialPartition(13, 3), SearchConfig(node_budget=3))
    with pytest.raises(Exception, match="random"):
        resume(interrupted.checkpoint, SearchConfig(tie_break="random"))


def test_determinism_across_runs(s3_witness):
    config = SearchConfig(colour_order="least-blocked", tie_break="random", seed=99)
    runs = [extend(seed_symmetric(s3_witness, 40), config) for _ in range(2)]
    assert runs[0].witness == runs[1].witness
    assert runs[0].stats.nodes == runs[1].stats.nodes
    assert runs[0].stats.attempts == runs[1].stats.attempts
    assert runs[0].stats.max_depth == runs[1].stats.max_depth


def test_variable_and_colour_order_variants_still_verify(s3_witness):
    for variable_order in ("ascending", "most-blocked"):
        for colour_order in ("fixed", "least-blocked"):
            config = SearchConfig(variable_order=variable_order, colour_order=colour_order)
            outcome = extend(seed_symmetric(s3_witness, 40), config)
            assert outcome.status == "found", (variable_order, colour_order)
            assert verify_schur(outcome.witness).valid


# -- exhaustive search ----------------------------------------------------------


def test_exhaustive_small_schur_numbers():
    assert exhaustive_max(1, 10).max_order == 1
    assert exhaustive_max(2, 10).max_order == 4
    result = exhaustive_max(3, 20)
    assert result.max_order == 13
    assert result.proven
    assert verify_schur(result.witness).valid
    assert result.witness.k == 3


def test_exhaustive_witness_at_cap():
    result = exhaustive_max(2, 3)
    assert result.max_order == 3
    assert result.witness.n == 3


def test_exhaustive_respects_budget():
    result = exhaustive_max(3, 20, SearchConfig(node_budget=10))
    assert result.status == "budget-exceeded"
    assert not result.proven


def _canonical(colours):
    relabel = {}
    out = []
    for c in colours:
        if c not in relabel:
            relabel[c] = len(relabel) + 1
        out.append(relabel[c])
    return tuple(out)


def _naive_all_partitions(n, k):
    found = set()
    for colours in itertools.product(range(1, k + 1), repeat=n):
        p_colours = _canonical(colours)
        if p_colours in found:
            continue
        ok = True
        for a in range(1, n + 1):
            for b in range(a, n - a + 1):
                if p_colours[a - 1] == p_colours[b - 1] == p_colours[a + b - 1]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.add(p_colours)
    return found


@pytest.mark.parametrize("k", [2, 3])
def test_search_enumeration_matches_naive_generate_and_test(k):
    for n in range(1, 11):
        naive = _naive_all_partitions(n, k)
        searched = {p.colour_of for p in enumerate_schur_partitions(n, k)}
        assert searched == naive, (n, k)


def test_exactly_three_schur_partitions_of_13():
    assert sum(1 for p in enumerate_schur_partitions(13, 3) if p.k == 3) == 3


# -- blockage table -------------------------------------------------------------


def test_blockage_snapshot_examples():
    partial = PartialPartition(10, 2)
    assert all(v == 0 for v in blockage_snapshot(partial).values())
    partial.assign(1, 1)
    assert blockage_snapshot(partial)[(2, 1)] == 1
    partial = PartialPartition(10, 2)
    partial.assign(1, 1)
    partial.assign(2, 2)
    snap = blockage_snapshot(partial)
    assert snap[(3, 1)] == 0
    assert snap[(4, 2)] == 1  # 2 + 2 = 4


def _auditted(partial):
    snap = blockage_snapshot(partial)
    for (z, c), expected in snap.items():
        assert partial.blocked[c][z] == expected, (z, c)


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 2**32 - 1))
def test_incremental_blockage_matches_snapshot(seed):
    rng = random.Random(seed)
    n = rng.randint(6, 24)
    k = rng.randint(2, 4)
    partial = PartialPartition(n, k)
    placed = []
    for _ in range(30):
        if placed and rng.random() < 0.4:
            partial.unassign(placed.pop(rng.randrange(len(placed))))
        else:
            free = partial.unassigned()
            if not free:
                continue
            z = rng.choice(free)
            c = rng.randint(1, k)
            if partial.blocked[c][z] == 0:
                partial.assign(z, c)
                placed.append(z)
        _auditted(partial)


def test_blockage_consistent_through_paired_placements():
    partial = PartialPartition(21, 3, symmetric=True, exceptions=(4,))
    for z, c in ((1, 1), (2, 2), (4, 3), (6, 1)):
        assert partial.place(z, c)
        _auditted(partial)
    partial.unplace(6)
    partial.unplace(4)
    _auditted(partial)


def test_place_rolls_back_on_mirror_blockage():
    partial = PartialPartition(13, 2, symmetric=True)
    assert partial.place(4, 1)  # also assigns the mirror 10
    before = [row[:] for row in partial.blocked]
    # 12 itself is fine in colour 1, but its mirror 2 completes 2 + 2 = 4
    assert partial.blocked[1][12] == 0
    assert partial.blocked[1][2] > 0
    assert not partial.place(12, 1)
    assert partial.blocked == before
    assert partial.colour_of[12] == 0 and partial.colour_of[2] == 0


# -- frontier splitting -----------------------------------------------------------


def test_frontier_branches_partition_the_space():
    partial = PartialPartition(13, 3)
    branches = frontier_branches(partial)
    assert len(branches) == 1  # canonical first position admits only colour 1
    second = frontier_branches(branches[0])
    assert len(second) == 1  # 1 + 1 = 2 forces a fresh colour for 2
    third = frontier_branches(second[0])
    assert len(third) == 3  # position 3 fits either class or a fresh one


def test_parallel_matches_sequential(s3_witness):
    partial = seed_symmetric(s3_witness, 40)
    sequential = extend(partial)
    parallel = extend_parallel(partial, threads=2)
    assert parallel.status == "found"
    assert parallel.witness == sequential.witness
