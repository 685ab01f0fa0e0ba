"""Partitions of the integer interval [1, n] into k colour classes.

The central witness object everywhere in this package: a total assignment
of 1..n to colours 1..k in which every colour is used.  Sum-freeness is
deliberately *not* enforced here; that is the verifier's job.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class PartitionError(ValueError):
    """Structurally invalid partition input (overlap, gap, empty class, ...)."""


@dataclass(frozen=True)
class Partition:
    """Immutable partition of [1, n] into colours 1..k.

    ``colour_of[i]`` is the colour of the integer ``i + 1``.
    """

    n: int
    k: int
    colour_of: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 1:
            raise PartitionError(f"n and k must be positive, got n={self.n} k={self.k}")
        if len(self.colour_of) != self.n:
            raise PartitionError(
                f"assignment covers {len(self.colour_of)} integers, expected n={self.n}"
            )
        bad = [c for c in self.colour_of if not 1 <= c <= self.k]
        if bad:
            raise PartitionError(f"colour indices out of [1, {self.k}]: {sorted(set(bad))}")
        unused = set(range(1, self.k + 1)) - set(self.colour_of)
        if unused:
            raise PartitionError(f"empty colour(s): {sorted(unused)}")

    def colour(self, x: int) -> int:
        """Colour of integer x (1-based)."""
        if not 1 <= x <= self.n:
            raise PartitionError(f"{x} outside [1, {self.n}]")
        return self.colour_of[x - 1]

    def members(self, colour: int) -> tuple[int, ...]:
        """Ascending members of one colour class."""
        if not 1 <= colour <= self.k:
            raise PartitionError(f"colour {colour} outside [1, {self.k}]")
        return tuple(x for x in range(1, self.n + 1) if self.colour_of[x - 1] == colour)

    def subsets(self) -> list[tuple[int, ...]]:
        """All colour classes in colour order."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for x, c in enumerate(self.colour_of, start=1):
            out[c - 1].append(x)
        return [tuple(s) for s in out]


@dataclass(frozen=True)
class SubsetView:
    """One colour class: the colour index and its sorted members."""

    colour: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class PartitionProfile:
    """Shape summary of a partition: sizes, extremes, symmetry, n mod 16."""

    n: int
    k: int
    sizes: tuple[int, ...]
    minima: tuple[int, ...]
    maxima: tuple[int, ...]
    symmetric: bool
    n_mod_16: int


def make_partition(n: int, k: int, subsets: Sequence[Iterable[int]]) -> Partition:
    """Build a Partition from k subsets that must tile [1, n] exactly.

    Raises PartitionError naming the offending integers on overlap, gap,
    empty subset, out-of-range member, or wrong subset count.
    """
    if n < 1 or k < 1:
        raise PartitionError(f"n and k must be positive, got n={n} k={k}")
    sets = [sorted(set(s)) for s in subsets]
    if len(sets) != k:
        raise PartitionError(f"got {len(sets)} subsets, expected k={k}")
    empty = [i + 1 for i, s in enumerate(sets) if not s]
    if empty:
        raise PartitionError(f"empty subset(s) at colour(s): {empty}")
    out_of_range = sorted({x for s in sets for x in s if not 1 <= x <= n})
    if out_of_range:
        raise PartitionError(f"members outside [1, {n}]: {out_of_range}")
    colour_of = [0] * n
    overlap = set()
    for i, s in enumerate(sets, start=1):
        for x in s:
            if colour_of[x - 1]:
                overlap.add(x)
            colour_of[x - 1] = i
    if overlap:
        raise PartitionError(f"integers in more than one subset: {sorted(overlap)}")
    gaps = [x for x in range(1, n + 1) if colour_of[x - 1] == 0]
    if gaps:
        raise PartitionError(f"gap: uncovered integer(s) {gaps}")
    return Partition(n=n, k=k, colour_of=tuple(colour_of))


def from_colouring(colours: Sequence[int]) -> Partition:
    """Partition from a raw colour sequence; labels renumbered by first use.

    Accepts any positive labels, e.g. a search assignment where some colour
    indices ended up unused.
    """
    if not colours:
        raise PartitionError("empty colouring")
    relabel: dict[int, int] = {}
    normalized = []
    for c in colours:
        if c not in relabel:
            relabel[c] = len(relabel) + 1
        normalized.append(relabel[c])
    return Partition(n=len(normalized), k=len(relabel), colour_of=tuple(normalized))


def subset_view(p: Partition, colour: int) -> SubsetView:
    """Sorted members of one colour class."""
    return SubsetView(colour=colour, members=p.members(colour))


def is_symmetric(p: Partition, exceptions: Iterable[int] = ()) -> bool:
    """True iff colour(x) == colour(n + 1 - x) for every x not excepted.

    ``exceptions`` lists positions whose mirror pair is allowed to differ;
    each entry excuses both the position and its mirror.
    """
    excused = set()
    for x in exceptions:
        excused.add(x)
        excused.add(p.n + 1 - x)
    return all(
        p.colour_of[x - 1] == p.colour_of[p.n - x]
        for x in range(1, p.n + 1)
        if x not in excused
    )


def profile(p: Partition) -> PartitionProfile:
    """Readout of n, k, per-class sizes and extremes, symmetry, n mod 16."""
    subsets = p.subsets()
    return PartitionProfile(
        n=p.n,
        k=p.k,
        sizes=tuple(len(s) for s in subsets),
        minima=tuple(s[0] for s in subsets),
        maxima=tuple(s[-1] for s in subsets),
        symmetric=is_symmetric(p),
        n_mod_16=p.n % 16,
    )
