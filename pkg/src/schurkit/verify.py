"""Ground-truth sum-freeness checks.

Everything else in the package is tested against these routines, so they
stay deliberately simple: pair enumeration with bitset membership, no
incremental state.  A set is sum-free when no a <= b in it has a + b in it
(a = b allowed); a partition is valid when every colour class is sum-free.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .partition import Partition

DEFAULT_VIOLATION_CAP = 100


@dataclass(frozen=True)
class Violation:
    """Witness triple a + b = c inside one colour class.

    For modular checks ``wrapped`` marks the form a + b = c + m; plain
    violations always satisfy a + b = c exactly.
    """

    a: int
    b: int
    c: int
    colour: int | None = None
    wrapped: bool = False


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a verification pass.

    ``count`` is the true number of violations even when the stored list is
    truncated at the cap.  ``asymmetries`` is only populated in symmetric
    mode and lists mirror pairs that land in different colours; validity
    requires both lists empty.
    """

    valid: bool
    violations: tuple[Violation, ...]
    count: int
    mode: str
    modulus: int | None = None
    asymmetries: tuple[tuple[int, int], ...] = field(default=())


def _bitmask(members: Iterable[int]) -> int:
    mask = 0
    for x in members:
        mask |= 1 << x
    return mask


def verify_sum_free(
    s: Iterable[int], n: int, cap: int = DEFAULT_VIOLATION_CAP
) -> VerifyReport:
    """Check one set against a + b = c over the integers, a = b allowed."""
    members = sorted(set(s))
    out_of_range = [x for x in members if not 1 <= x <= n]
    if out_of_range:
        raise ValueError(f"members outside [1, {n}]: {out_of_range}")
    violations, count = _sum_violations(members, _bitmask(members), colour=None, cap=cap)
    return VerifyReport(
        valid=count == 0, violations=tuple(violations), count=count, mode="plain"
    )


def _sum_violations(
    members: list[int], mask: int, colour: int | None, cap: int
) -> tuple[list[Violation], int]:
    violations: list[Violation] = []
    count = 0
    top = members[-1] if members else 0
    for i, a in enumerate(members):
        for b in members[i:]:
            c = a + b
            if c > top:
                break
            if (mask >> c) & 1:
                count += 1
                if len(violations) < cap:
                    violations.append(Violation(a=a, b=b, c=c, colour=colour))
    return violations, count


def verify_schur(p: Partition, cap: int = DEFAULT_VIOLATION_CAP) -> VerifyReport:
    """Check every colour class of a partition; violations carry their colour."""
    violations: list[Violation] = []
    count = 0
    for colour, subset in enumerate(p.subsets(), start=1):
        members = list(subset)
        vs, c = _sum_violations(members, _bitmask(members), colour=colour, cap=cap)
        count += c
        violations.extend(vs[: max(0, cap - len(violations))])
    return VerifyReport(
        valid=count == 0, violations=tuple(violations), count=count, mode="plain"
    )


def verify_symmetric_schur(
    p: Partition, exceptions: Iterable[int] = (), cap: int = DEFAULT_VIOLATION_CAP
) -> VerifyReport:
    """Sum-freeness plus the mirror condition colour(x) == colour(n + 1 - x).

    Mirror pairs listed in ``exceptions`` may differ.  Asymmetric pairs are
    reported separately from sum violations.
    """
    base = verify_schur(p, cap=cap)
    excused = set()
    for x in exceptions:
        excused.add(x)
        excused.add(p.n + 1 - x)
    asymmetries = tuple(
        (x, p.n + 1 - x)
        for x in range(1, p.n // 2 + 1)
        if x not in excused and p.colour_of[x - 1] != p.colour_of[p.n - x]
    )
    return VerifyReport(
        valid=base.valid and not asymmetries,
        violations=base.violations,
        count=base.count,
        mode="symmetric",
        asymmetries=asymmetries,
    )


def verify_mod_sum_free(
    s: Iterable[int], m: int, cap: int = DEFAULT_VIOLATION_CAP
) -> VerifyReport:
    """Check r1 + r2 = r3 and r1 + r2 = r3 + m over residues in [1, m].

    The wrapped form is what makes a class safe to repeat with period m;
    it strictly implies plain sum-freeness on [1, m].
    """
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    members = sorted(set(s))
    out_of_range = [x for x in members if not 1 <= x <= m]
    if out_of_range:
        raise ValueError(f"members outside [1, {m}]: {out_of_range}")
    mask = _bitmask(members)
    violations: list[Violation] = []
    count = 0
    for i, r1 in enumerate(members):
        for r2 in members[i:]:
            total = r1 + r2
            if total <= m and (mask >> total) & 1:
                count += 1
                if len(violations) < cap:
                    violations.append(Violation(a=r1, b=r2, c=total))
            wrapped = total - m
            if wrapped >= 1 and (mask >> wrapped) & 1:
                count += 1
                if len(violations) < cap:
                    violations.append(Violation(a=r1, b=r2, c=wrapped, wrapped=True))
    return VerifyReport(
        valid=count == 0,
        violations=tuple(violations),
        count=count,
        mode="modular",
        modulus=m,
    )


def count_blocked(assignment: Mapping[int, int], z: int, colour: int) -> int:
    """Number of distinct witnesses that placing z in ``colour`` would create.

    Witnesses, over the members of that colour class:
      pairs a <= b with a + b = z; elements a with z + a also in the class;
      plus one if 2z is in the class.  Zero means z is admissible.
    """
    if z in assignment:
        raise ValueError(f"{z} is already assigned")
    members = {x for x, c in assignment.items() if c == colour}
    count = 0
    for a in members:
        b = z - a
        if b >= a and b in members:
            count += 1
        if z + a in members:
            count += 1
    if 2 * z in members:
        count += 1
    return count


def blocking_witness(
    assignment: Mapping[int, int], z: int, colour: int
) -> Violation | None:
    """One concrete triple explaining why z cannot take ``colour``, if any."""
    members = {x for x, c in assignment.items() if c == colour}
    for a in sorted(members):
        b = z - a
        if b >= a and b in members:
            return Violation(a=a, b=b, c=z, colour=colour)
        if z + a in members:
            return Violation(a=min(a, z), b=max(a, z), c=z + a, colour=colour)
    if 2 * z in members:
        return Violation(a=z, b=z, c=2 * z, colour=colour)
    return None
