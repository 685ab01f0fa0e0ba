"""Shared fixtures and independent oracles the implementation is checked against."""

from __future__ import annotations

import pytest

from schurkit import make_partition


def naive_triple_scan(p) -> list[tuple[int, int, int, int]]:
    """All monochromatic a + b = c triples by direct O(n^2) enumeration."""
    col = p.colour_of
    hits = []
    for a in range(1, p.n + 1):
        for b in range(a, p.n - a + 1):
            if col[a - 1] == col[b - 1] == col[a + b - 1]:
                hits.append((a, b, a + b, col[a - 1]))
    return hits


def naive_count_blocked(assignment: dict[int, int], z: int, colour: int) -> int:
    """Witness count by literal enumeration of the three witness shapes."""
    members = sorted(x for x, c in assignment.items() if c == colour)
    count = 0
    for i, a in enumerate(members):
        for b in members[i:]:
            if a + b == z:
                count += 1
    for a in members:
        if z + a in members:
            count += 1
    if 2 * z in members:
        count += 1
    return count


@pytest.fixture
def s2_witness():
    return make_partition(4, 2, [{1, 4}, {2, 3}])


@pytest.fixture
def s3_witness():
    return make_partition(13, 3, [{1, 4, 7, 10, 13}, {2, 3, 11, 12}, {5, 6, 8, 9}])
