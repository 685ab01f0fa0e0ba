"""Backtracking search for sum-free partitions.

Strategy: allocate integers to colours in ascending order (or most-blocked
first), pruning any colour already blocked for the position.  A blockage
is a witness that placing z in colour c would complete a monochromatic
a + b = c triple; the table of blockage counts is maintained incrementally
as positions are assigned and released, and can be audited at any time
against a from-scratch recomputation.

Symmetric mode pairs every position x with its complement N + 1 - x, so
only the lower half of the interval generates branch points.  Individual
positions can be exempted from pairing ("near-symmetric" searches); this
is required whenever N + 1 is divisible by 3, since x = (N + 1)/3 then
satisfies x + x = N + 1 - x and a fully symmetric partition cannot exist.

A seeded search starts from a complete partition of a smaller interval:
the seed keeps its colours, the next integer opens a fresh colour, the
mirror of every seeded position is fixed, and the tree search runs upward
from the seed boundary.
"""

from __future__ import annotations

import random
import time
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .partition import Partition, from_colouring, make_partition
from .verify import (
    Violation,
    blocking_witness,
    count_blocked,
    verify_schur,
    verify_symmetric_schur,
)


class SearchError(Exception):
    """Search-level failure (bad seed, inconsistent checkpoint, ...)."""


class SeedContradiction(SearchError):
    """Seeding already forces a monochromatic triple or a colour conflict."""

    def __init__(self, message: str, violation: Violation | None = None):
        super().__init__(message)
        self.violation = violation


class SymmetryImpossibleWarning(UserWarning):
    """3 divides N + 1: no fully symmetric partition of [1, N] exists."""


VARIABLE_ORDERS = ("ascending", "most-blocked")
COLOUR_ORDERS = ("fixed", "least-blocked")
TIE_BREAKS = ("lowest", "random")


@dataclass
class SearchConfig:
    """Strategy and budget knobs for one search run.

    ``symmetric`` and ``exceptions`` describe how fresh partial partitions
    are built; a seeded or explicitly constructed partial carries its own
    pairing structure and ignores them.  With ``tie_break="lowest"`` and a
    fixed seed every run is fully deterministic.
    """

    symmetric: bool = False
    variable_order: str = "ascending"
    colour_order: str = "fixed"
    node_budget: int | None = None
    time_budget: float | None = None
    tie_break: str = "lowest"
    seed: int = 0
    exceptions: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.variable_order not in VARIABLE_ORDERS:
            raise ValueError(f"variable_order must be one of {VARIABLE_ORDERS}")
        if self.colour_order not in COLOUR_ORDERS:
            raise ValueError(f"colour_order must be one of {COLOUR_ORDERS}")
        if self.tie_break not in TIE_BREAKS:
            raise ValueError(f"tie_break must be one of {TIE_BREAKS}")
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node_budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")


@dataclass
class SearchStats:
    nodes: int = 0
    attempts: int = 0
    max_depth: int = 0
    wall_time: float = 0.0


@dataclass
class SearchOutcome:
    """Result of extend(): status is found | exhausted | budget-exceeded."""

    status: str
    witness: Partition | None
    stats: SearchStats
    checkpoint: "PartialPartition | None" = None


@dataclass
class ExhaustiveResult:
    """Largest order admitting a partition into at most k classes."""

    k: int
    max_order: int
    witness: Partition | None
    proven: bool
    status: str
    stats: SearchStats


class PartialPartition:
    """Mutable in-progress assignment of [1, N] to colours, colour 0 = free.

    Maintains one bitmask per colour class plus the incremental blockage
    table ``blocked[c][z]``.  In symmetric mode every placement through
    :meth:`place` also assigns the complement N + 1 - z, except for
    positions registered in ``exceptions``.
    """

    def __init__(
        self,
        n: int,
        k: int,
        symmetric: bool = False,
        exceptions: Iterable[int] = (),
    ):
        if n < 1 or k < 1:
            raise ValueError(f"n and k must be positive, got n={n} k={k}")
        self.n = n
        self.k = k
        self.symmetric = symmetric
        exc = set()
        for x in exceptions:
            if not 1 <= x <= n:
                raise ValueError(f"exception position {x} outside [1, {n}]")
            exc.add(x)
            exc.add(n + 1 - x)
        self.exceptions = frozenset(exc)
        self.colour_of = [0] * (n + 1)
        self.masks = [0] * (k + 1)
        self.blocked = [[0] * (n + 1) for _ in range(k + 1)]
        self.sizes = [0] * (k + 1)
        self.used_colours = 0
        self.assigned_count = 0
        self.frozen_upto = 0
        self._low = 1

    @classmethod
    def empty(
        cls, n: int, k: int, symmetric: bool = False, exceptions: Iterable[int] = ()
    ) -> "PartialPartition":
        return cls(n, k, symmetric=symmetric, exceptions=exceptions)

    # -- elementary state ---------------------------------------------------

    def mirror(self, x: int) -> int:
        return self.n + 1 - x

    def is_assigned(self, x: int) -> bool:
        return self.colour_of[x] != 0

    @property
    def complete(self) -> bool:
        return self.assigned_count == self.n

    def assignment(self) -> dict[int, int]:
        """Position -> colour mapping for the assigned part."""
        return {x: c for x, c in enumerate(self.colour_of) if x >= 1 and c != 0}

    def unassigned(self) -> list[int]:
        return [x for x in range(1, self.n + 1) if self.colour_of[x] == 0]

    def clone(self) -> "PartialPartition":
        twin = PartialPartition.__new__(PartialPartition)
        twin.n = self.n
        twin.k = self.k
        twin.symmetric = self.symmetric
        twin.exceptions = self.exceptions
        twin.colour_of = self.colour_of[:]
        twin.masks = self.masks[:]
        twin.blocked = [row[:] for row in self.blocked]
        twin.sizes = self.sizes[:]
        twin.used_colours = self.used_colours
        twin.assigned_count = self.assigned_count
        twin.frozen_upto = self.frozen_upto
        twin._low = self._low
        return twin

    # -- low-level assignment with incremental blockage updates -------------

    def assign(self, x: int, c: int) -> None:
        """Place a single position, updating blockage counts for colour c.

        Does not touch the mirror and does not check admissibility; use
        :meth:`place` in search code.
        """
        if self.colour_of[x]:
            raise ValueError(f"{x} already assigned")
        mask = self.masks[c]
        bl = self.blocked[c]
        n = self.n
        rest = mask
        while rest:
            low = rest & -rest
            s = low.bit_length() - 1
            rest ^= low
            t = x + s
            if t <= n:
                bl[t] += 1
            bl[abs(x - s)] += 1
        if 2 * x <= n:
            bl[2 * x] += 1
        if x % 2 == 0:
            bl[x // 2] += 1
        self.masks[c] = mask | (1 << x)
        self.colour_of[x] = c
        self.sizes[c] += 1
        if self.sizes[c] == 1:
            self.used_colours += 1
        self.assigned_count += 1
        if x == self._low:
            while self._low <= n and self.colour_of[self._low]:
                self._low += 1

    def unassign(self, x: int) -> None:
        c = self.colour_of[x]
        if not c:
            raise ValueError(f"{x} is not assigned")
        self.colour_of[x] = 0
        self.masks[c] &= ~(1 << x)
        mask = self.masks[c]
        bl = self.blocked[c]
        n = self.n
        while mask:
            low = mask & -mask
            s = low.bit_length() - 1
            mask ^= low
            t = x + s
            if t <= n:
                bl[t] -= 1
            bl[abs(x - s)] -= 1
        if 2 * x <= n:
            bl[2 * x] -= 1
        if x % 2 == 0:
            bl[x // 2] -= 1
        self.sizes[c] -= 1
        if self.sizes[c] == 0:
            self.used_colours -= 1
        self.assigned_count -= 1
        if x < self._low:
            self._low = x

    # -- search-level placement ----------------------------------------------

    def _pairs_with(self, z: int) -> bool:
        return self.symmetric and z not in self.exceptions and self.mirror(z) != z

    def place(self, z: int, c: int) -> bool:
        """Try to place z (and its mirror when paired) in colour c.

        Returns False and leaves the state unchanged if any blockage or a
        conflicting mirror colour stands in the way.
        """
        if self.blocked[c][z]:
            return False
        self.assign(z, c)
        if self._pairs_with(z):
            m = self.mirror(z)
            if self.colour_of[m]:
                if self.colour_of[m] != c:
                    self.unassign(z)
                    return False
            elif self.blocked[c][m] == 0:
                self.assign(m, c)
            else:
                self.unassign(z)
                return False
        return True

    def unplace(self, z: int) -> None:
        """Inverse of a successful :meth:`place`."""
        if self._pairs_with(z):
            m = self.mirror(z)
            if self.colour_of[m]:
                self.unassign(m)
        self.unassign(z)

    # -- chooser and candidate helpers ----------------------------------------

    def next_position(self, variable_order: str = "ascending") -> int | None:
        if self.assigned_count == self.n:
            return None
        if variable_order == "ascending":
            return self._low if self._low <= self.n else None
        best = None
        best_key = None
        for z in range(1, self.n + 1):
            if self.colour_of[z]:
                continue
            total = sum(self.blocked[c][z] for c in range(1, self.k + 1))
            key = (-total, z)
            if best_key is None or key < best_key:
                best, best_key = z, key
        return best

    def candidate_colours(self, z: int) -> list[int]:
        """Unblocked colours for z, respecting first-use colour order.

        A colour beyond the first unused one is never offered; this breaks
        the symmetry between colour labels without losing any partition up
        to relabelling.  In paired mode the mirror's blockage is pre-checked
        here and re-checked authoritatively by :meth:`place`.
        """
        limit = min(self.k, self.used_colours + 1)
        cands = []
        mirror = self.mirror(z) if self._pairs_with(z) else None
        for c in range(1, limit + 1):
            if self.blocked[c][z]:
                continue
            if mirror is not None and self.colour_of[mirror] == 0 and self.blocked[c][mirror]:
                continue
            cands.append(c)
        return cands

    def new_block_count(self, z: int, c: int) -> int:
        """How many currently admissible positions placing z in c would block."""
        targets = set()
        mask = self.masks[c]
        n = self.n
        while mask:
            low = mask & -mask
            s = low.bit_length() - 1
            mask ^= low
            if z + s <= n:
                targets.add(z + s)
            targets.add(abs(z - s))
        if 2 * z <= n:
            targets.add(2 * z)
        if z % 2 == 0:
            targets.add(z // 2)
        targets.discard(z)
        return sum(
            1
            for t in targets
            if self.colour_of[t] == 0 and self.blocked[c][t] == 0
        )

    def to_partition(self) -> Partition:
        """Complete assignment as an immutable Partition (labels kept)."""
        if not self.complete:
            raise SearchError("assignment is not complete")
        if self.used_colours == self.k:
            return Partition(n=self.n, k=self.k, colour_of=tuple(self.colour_of[1:]))
        return from_colouring(self.colour_of[1:])


def blockage_snapshot(partial: PartialPartition) -> dict[tuple[int, int], int]:
    """From-scratch (z, colour) -> blockage table over unassigned positions.

    Independent of the incremental bookkeeping; used to audit it.
    """
    assignment = partial.assignment()
    return {
        (z, c): count_blocked(assignment, z, c)
        for z in range(1, partial.n + 1)
        if partial.colour_of[z] == 0
        for c in range(1, partial.k + 1)
    }


# -- seeding ------------------------------------------------------------------


def _seed_place(partial: PartialPartition, x: int, c: int) -> None:
    if partial.colour_of[x]:
        if partial.colour_of[x] != c:
            raise SeedContradiction(
                f"position {x} is forced into colour {partial.colour_of[x]} "
                f"by pairing but the seed assigns colour {c}"
            )
        return
    if partial.blocked[c][x]:
        witness = blocking_witness(partial.assignment(), x, c)
        raise SeedContradiction(
            f"seeding {x} -> colour {c} completes the monochromatic triple "
            f"{witness.a} + {witness.b} = {witness.c}",
            violation=witness,
        )
    partial.assign(x, c)
    if partial._pairs_with(x):
        m = partial.mirror(x)
        if partial.colour_of[m]:
            if partial.colour_of[m] != c:
                raise SeedContradiction(
                    f"mirror {m} of {x} already carries colour {partial.colour_of[m]}, "
                    f"seed wants colour {c}"
                )
        elif partial.blocked[c][m]:
            witness = blocking_witness(partial.assignment(), m, c)
            raise SeedContradiction(
                f"mirror {m} of seeded {x} completes the monochromatic triple "
                f"{witness.a} + {witness.b} = {witness.c}",
                violation=witness,
            )
        else:
            partial.assign(m, c)


def symmetry_obstruction(n: int, exceptions: Iterable[int] = ()) -> int | None:
    """The position x with x + x = n + 1 - x, if present and not excepted."""
    if (n + 1) % 3 != 0:
        return None
    x = (n + 1) // 3
    exc = set(exceptions)
    if x in exc or (n + 1 - x) in exc:
        return None
    return x


def seed_symmetric(
    base: Partition, n: int, exceptions: Iterable[int] = ()
) -> PartialPartition:
    """Grow a symmetric partial on [1, n] from a complete smaller partition.

    Every x <= base.n keeps its base colour, base.n + 1 opens a fresh
    colour, and each seeded position drags its complement n + 1 - x into
    the same colour.  Raises SeedContradiction if the seeded structure
    already contains a monochromatic triple.
    """
    if base.n + 1 > n:
        raise ValueError(f"target order {n} must exceed the base order {base.n}")
    report = verify_schur(base)
    if not report.valid:
        v = report.violations[0]
        raise SearchError(
            f"base partition is invalid: {v.a} + {v.b} = {v.c} in colour {v.colour}"
        )
    if symmetry_obstruction(n, exceptions) is not None:
        x = (n + 1) // 3
        warnings.warn(
            f"{n + 1} is divisible by 3: no fully symmetric partition of "
            f"[1, {n}] exists ({x} + {x} = {n + 1 - x}); configure {x} as an "
            "exception for a near-symmetric search",
            SymmetryImpossibleWarning,
            stacklevel=2,
        )
    partial = PartialPartition(n, base.k + 1, symmetric=True, exceptions=exceptions)
    for x in range(1, base.n + 1):
        _seed_place(partial, x, base.colour_of[x - 1])
    _seed_place(partial, base.n + 1, base.k + 1)
    partial.frozen_upto = base.n + 1
    return partial


def seed_prefix(base: Partition, n: int) -> PartialPartition:
    """Non-mirrored variant of :func:`seed_symmetric` (prefix + new colour only)."""
    if base.n + 1 > n:
        raise ValueError(f"target order {n} must exceed the base order {base.n}")
    report = verify_schur(base)
    if not report.valid:
        raise SearchError("base partition is invalid")
    partial = PartialPartition(n, base.k + 1, symmetric=False)
    for x in range(1, base.n + 1):
        _seed_place(partial, x, base.colour_of[x - 1])
    _seed_place(partial, base.n + 1, base.k + 1)
    partial.frozen_upto = base.n + 1
    return partial


# -- the DFS engine -------------------------------------------------------------


class _BudgetStop(Exception):
    pass


class _Frame:
    __slots__ = ("pos", "candidates", "idx", "placed")

    def __init__(self, pos: int, candidates: list[int]):
        self.pos = pos
        self.candidates = candidates
        self.idx = 0
        self.placed = False


class _PrefixTracker:
    """Deepest fully assigned prefix [1, h] seen so far (ascending order only)."""

    __slots__ = ("depth", "snapshot")

    def __init__(self) -> None:
        self.depth = 0
        self.snapshot: tuple[int, ...] = ()

    def update(self, partial: PartialPartition) -> None:
        h = partial._low - 1
        if h > self.depth:
            self.depth = h
            self.snapshot = tuple(partial.colour_of[1 : h + 1])


def _order_candidates(
    partial: PartialPartition,
    pos: int,
    cands: list[int],
    config: SearchConfig,
    rng: random.Random,
) -> list[int]:
    if config.colour_order == "fixed" and config.tie_break == "lowest":
        return cands
    if config.colour_order == "least-blocked":
        scores = {c: partial.new_block_count(pos, c) for c in cands}
    else:
        scores = {c: 0 for c in cands}
    if config.tie_break == "random":
        return sorted(cands, key=lambda c: (scores[c], rng.random()))
    return sorted(cands, key=lambda c: (scores[c], c))


def _open_frame(
    partial: PartialPartition, config: SearchConfig, rng: random.Random
) -> _Frame | None:
    pos = partial.next_position(config.variable_order)
    if pos is None:
        return None
    cands = partial.candidate_colours(pos)
    return _Frame(pos, _order_candidates(partial, pos, cands, config, rng))


def _solutions(
    partial: PartialPartition,
    config: SearchConfig,
    stats: SearchStats,
    stack: list[_Frame] | None = None,
    rng: random.Random | None = None,
    tracker: _PrefixTracker | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield every complete valid colouring reachable from the partial.

    Mutates ``partial`` in place as it walks the tree; at the moment of a
    yield the partial holds the complete assignment.  Raises _BudgetStop
    when a node or time budget runs out, leaving the state at the frontier.
    """
    rng = rng or random.Random(config.seed)
    deadline = (
        time.monotonic() + config.time_budget if config.time_budget is not None else None
    )
    if stack is None:
        first = _open_frame(partial, config, rng)
        if first is None:
            yield tuple(partial.colour_of[1:])
            return
        stack = [first]
    while stack:
        frame = stack[-1]
        if frame.placed:
            partial.unplace(frame.pos)
            frame.placed = False
        if frame.idx >= len(frame.candidates):
            stack.pop()
            continue
        colour = frame.candidates[frame.idx]
        frame.idx += 1
        stats.attempts += 1
        if not partial.place(frame.pos, colour):
            continue
        frame.placed = True
        stats.nodes += 1
        if len(stack) > stats.max_depth:
            stats.max_depth = len(stack)
        if tracker is not None:
            tracker.update(partial)
        if config.node_budget is not None and stats.nodes >= config.node_budget:
            raise _BudgetStop
        if deadline is not None and time.monotonic() >= deadline:
            raise _BudgetStop
        child = _open_frame(partial, config, rng)
        if child is None:
            yield tuple(partial.colour_of[1:])
        else:
            stack.append(child)


def extend(partial: PartialPartition, config: SearchConfig | None = None) -> SearchOutcome:
    """Depth-first completion of a partial partition.

    Works on a clone, so the caller's partial is untouched.  A found
    witness is always re-verified by the independent checker before it is
    returned; in paired mode the mirror condition is re-verified too.
    """
    config = config or SearchConfig()
    work = partial.clone()
    stats = SearchStats()
    start = time.perf_counter()
    try:
        for _ in _solutions(work, config, stats):
            stats.wall_time = time.perf_counter() - start
            witness = work.to_partition()
            _recheck(witness, work)
            return SearchOutcome(status="found", witness=witness, stats=stats)
    except _BudgetStop:
        stats.wall_time = time.perf_counter() - start
        return SearchOutcome(
            status="budget-exceeded", witness=None, stats=stats, checkpoint=work
        )
    stats.wall_time = time.perf_counter() - start
    return SearchOutcome(status="exhausted", witness=None, stats=stats)


def _recheck(witness: Partition, work: PartialPartition) -> None:
    report = verify_schur(witness)
    if not report.valid:
        raise SearchError(
            f"internal error: search produced an invalid partition ({report.count} violations)"
        )
    if work.symmetric:
        sym = verify_symmetric_schur(witness, exceptions=work.exceptions)
        if not sym.valid:
            raise SearchError("internal error: paired search produced an asymmetric witness")


def resume(checkpoint: PartialPartition, config: SearchConfig | None = None) -> SearchOutcome:
    """Continue a budget-interrupted search from a checkpoint.

    Rebuilds the decision stack by replaying the checkpointed choices in
    chooser order, then carries on exploring exactly where the interrupted
    run stopped.  Requires the same config as the original run; random
    tie-breaking is not replayable.
    """
    config = config or SearchConfig()
    if config.tie_break == "random":
        raise SearchError("cannot resume a search that used random tie-breaking")
    work = PartialPartition(
        checkpoint.n,
        checkpoint.k,
        symmetric=checkpoint.symmetric,
        exceptions=checkpoint.exceptions,
    )
    for x in range(1, checkpoint.frozen_upto + 1):
        _seed_place(work, x, checkpoint.colour_of[x])
    work.frozen_upto = checkpoint.frozen_upto
    rng = random.Random(config.seed)
    stats = SearchStats()
    stack: list[_Frame] = []
    while True:
        frame = _open_frame(work, config, rng)
        if frame is None:
            break
        target = checkpoint.colour_of[frame.pos]
        if target == 0:
            stack.append(frame)
            break
        if target not in frame.candidates:
            raise SearchError(
                f"checkpoint is inconsistent: colour {target} is not admissible "
                f"for position {frame.pos} during replay"
            )
        frame.idx = frame.candidates.index(target) + 1
        if not work.place(frame.pos, target):
            raise SearchError("checkpoint is inconsistent: replayed placement failed")
        frame.placed = True
        stack.append(frame)
    if work.colour_of != checkpoint.colour_of:
        raise SearchError("checkpoint replay did not reproduce the recorded assignment")
    start = time.perf_counter()
    try:
        for _ in _solutions(work, config, stats, stack=stack, rng=rng):
            stats.wall_time = time.perf_counter() - start
            witness = work.to_partition()
            _recheck(witness, work)
            return SearchOutcome(status="found", witness=witness, stats=stats)
    except _BudgetStop:
        stats.wall_time = time.perf_counter() - start
        return SearchOutcome(
            status="budget-exceeded", witness=None, stats=stats, checkpoint=work
        )
    stats.wall_time = time.perf_counter() - start
    return SearchOutcome(status="exhausted", witness=None, stats=stats)


# -- exhaustive search and enumeration -----------------------------------------


def exhaustive_max(
    k: int, n_cap: int, config: SearchConfig | None = None
) -> ExhaustiveResult:
    """Largest n <= n_cap admitting a partition of [1, n] into <= k sum-free classes.

    Runs one complete ascending backtrack over [1, n_cap]: every node at
    depth h is a valid colouring of [1, h], so the deepest node reached is
    the answer, and exhausting the tree proves no colouring of [1, n + 1]
    exists.  The witness is padded with singleton splits if it uses fewer
    than k colours.
    """
    config = config or SearchConfig()
    if config.variable_order != "ascending":
        raise ValueError("exhaustive_max requires ascending variable order")
    partial = PartialPartition(n_cap, k)
    stats = SearchStats()
    tracker = _PrefixTracker()
    start = time.perf_counter()
    status = "complete"
    proven = True
    try:
        for _ in _solutions(partial, config, stats, tracker=tracker):
            break  # n_cap itself is attainable; nothing deeper exists
    except _BudgetStop:
        status = "budget-exceeded"
        proven = False
    stats.wall_time = time.perf_counter() - start
    if tracker.depth == 0:
        return ExhaustiveResult(
            k=k, max_order=0, witness=None, proven=proven, status=status, stats=stats
        )
    witness = from_colouring(tracker.snapshot)
    witness = _pad_colours(witness, k)
    report = verify_schur(witness)
    if not report.valid:
        raise SearchError("internal error: exhaustive search produced an invalid witness")
    return ExhaustiveResult(
        k=k,
        max_order=tracker.depth,
        witness=witness,
        proven=proven,
        status=status,
        stats=stats,
    )


def _pad_colours(p: Partition, k: int) -> Partition:
    """Split singletons off the largest classes until k colours are used."""
    if p.k >= k or p.n < k:
        return p
    subsets = [list(s) for s in p.subsets()]
    while len(subsets) < k:
        donor = max(subsets, key=len)
        if len(donor) < 2:
            break
        subsets.append([donor.pop()])
    return make_partition(p.n, len(subsets), subsets)


def enumerate_schur_partitions(
    n: int, max_colours: int, config: SearchConfig | None = None
) -> Iterator[Partition]:
    """All partitions of [1, n] into at most max_colours sum-free classes.

    Each unordered partition appears exactly once (colour labels follow
    first use).
    """
    config = config or SearchConfig()
    partial = PartialPartition(n, max_colours)
    stats = SearchStats()
    for colouring in _solutions(partial, config, stats):
        yield from_colouring(colouring)


# -- frontier-splitting parallel search -----------------------------------------


def frontier_branches(
    partial: PartialPartition, config: SearchConfig | None = None
) -> list[PartialPartition]:
    """Clones of the partial, one per admissible colour of the next position.

    The branches partition the search space below the root node; exploring
    them independently and merging first-found results (in branch order for
    determinism) is equivalent to the sequential search.
    """
    config = config or SearchConfig()
    rng = random.Random(config.seed)
    frame = _open_frame(partial, config, rng)
    if frame is None:
        return []
    branches = []
    for colour in frame.candidates:
        clone = partial.clone()
        if clone.place(frame.pos, colour):
            branches.append(clone)
    return branches


def _run_branch(args: tuple[PartialPartition, SearchConfig]) -> SearchOutcome:
    branch, config = args
    return extend(branch, config)


def extend_parallel(
    partial: PartialPartition,
    config: SearchConfig | None = None,
    threads: int = 1,
    deterministic: bool = True,
) -> SearchOutcome:
    """Frontier-split search over a process pool.

    In deterministic mode results are consumed in canonical branch order,
    so the witness matches the sequential search; in fast mode the first
    branch to finish wins.  Workers share nothing and only report results.
    """
    config = config or SearchConfig()
    if threads <= 1:
        return extend(partial, config)
    branches = frontier_branches(partial, config)
    if not branches:
        return extend(partial, config)
    import multiprocessing as mp

    ctx = mp.get_context("fork")
    merged = SearchStats()
    budget_checkpoint: PartialPartition | None = None
    start = time.perf_counter()
    with ctx.Pool(processes=min(threads, len(branches))) as pool:
        mapper = pool.imap if deterministic else pool.imap_unordered
        for outcome in mapper(_run_branch, [(b, config) for b in branches]):
            merged.nodes += outcome.stats.nodes
            merged.attempts += outcome.stats.attempts
            merged.max_depth = max(merged.max_depth, outcome.stats.max_depth)
            if outcome.status == "found":
                pool.terminate()
                merged.wall_time = time.perf_counter() - start
                return SearchOutcome(
                    status="found", witness=outcome.witness, stats=merged
                )
            if outcome.status == "budget-exceeded" and budget_checkpoint is None:
                budget_checkpoint = outcome.checkpoint
    merged.wall_time = time.perf_counter() - start
    if budget_checkpoint is not None:
        return SearchOutcome(
            status="budget-exceeded",
            witness=None,
            stats=merged,
            checkpoint=budget_checkpoint,
        )
    return SearchOutcome(status="exhausted", witness=None, stats=merged)
