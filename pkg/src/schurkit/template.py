"""Composition templates: multiply a partition's order by m, plus an offset.

A template is a partition of [1, m] into a designated *template class* T
and ordinary classes C_1..C_{t-1} such that

  * every C_j is sum-free modulo m (no r1 + r2 = r3 or r3 + m within C_j),
  * T is sum-free over the plain integers (sums may wrap past m),
  * the offset is min(T) - 1, so no position below min(T) belongs to T.

Composing with an inner partition of [1, n] into k sum-free classes tiles
[1, m*n + offset] with blocks of width m: residue r of block x inherits
ordinary colour j when r is in C_j, and the inner colour of x when r is in
T.  The wrapped-sum condition on the C_j kills every monochromatic triple
inside an ordinary colour; a triple inside an inherited colour either has
r1 + r2 = r3 within T (excluded) or reduces to x1 + x2 = x3 in the inner
partition (excluded).  The output therefore has k + t - 1 sum-free classes
of order m*n + offset, and every composition is re-verified anyway.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .partition import Partition, PartitionError, make_partition
from .verify import VerifyReport, Violation, verify_mod_sum_free, verify_schur, verify_sum_free


class CompositionError(Exception):
    """Composition produced (or was fed) an invalid partition."""


@dataclass(frozen=True)
class Template:
    """Validated composition template; ``offset`` is derived, never stored freely."""

    order: int
    template_class: frozenset[int]
    ordinary_classes: tuple[frozenset[int], ...]
    offset: int

    @property
    def n_classes(self) -> int:
        return 1 + len(self.ordinary_classes)


@dataclass(frozen=True)
class TemplateFailure:
    """One violated template condition with concrete witnesses."""

    condition: str
    witnesses: tuple[Violation, ...]


@dataclass(frozen=True)
class TemplateValidation:
    """All failed conditions at once, or the validated Template."""

    ok: bool
    template: Template | None
    failures: tuple[TemplateFailure, ...]


@dataclass(frozen=True)
class CompositionCertificate:
    template_order: int
    template_classes: int
    offset: int
    inner_order: int
    inner_colours: int
    order: int
    colours: int
    report: VerifyReport


def validate_template(
    order: int,
    n_classes: int,
    template_class: Iterable[int],
    ordinary_classes: Iterable[Iterable[int]],
) -> TemplateValidation:
    """Check the template conditions, reporting every failure with witnesses.

    Structural problems (classes not tiling [1, order], empty class, wrong
    class count) raise PartitionError; condition failures are returned.
    """
    t_class = sorted(set(template_class))
    ordinary = [sorted(set(c)) for c in ordinary_classes]
    if n_classes != len(ordinary) + 1:
        raise PartitionError(
            f"declared {n_classes} classes but got 1 + {len(ordinary)}"
        )
    # tiling, emptiness and range checks ride on the partition constructor
    make_partition(order, n_classes, [t_class] + ordinary)
    failures: list[TemplateFailure] = []
    plain = verify_sum_free(t_class, order)
    if not plain.valid:
        failures.append(
            TemplateFailure(condition="template-class-not-sum-free", witnesses=plain.violations)
        )
    for j, cls in enumerate(ordinary, start=1):
        mod = verify_mod_sum_free(cls, order)
        if not mod.valid:
            failures.append(
                TemplateFailure(
                    condition=f"ordinary-class-{j}-not-mod-sum-free",
                    witnesses=mod.violations,
                )
            )
    if failures:
        return TemplateValidation(ok=False, template=None, failures=tuple(failures))
    tpl = Template(
        order=order,
        template_class=frozenset(t_class),
        ordinary_classes=tuple(frozenset(c) for c in ordinary),
        offset=min(t_class) - 1,
    )
    return TemplateValidation(ok=True, template=tpl, failures=())


def compose(
    tpl: Template, inner: Partition, offset: int | None = None
) -> tuple[Partition, CompositionCertificate]:
    """Blow up an inner partition through the template.

    Output order is tpl.order * inner.n + offset with inner.k + t - 1
    colours: ordinary classes first, inherited inner colours after.  An
    ``offset`` smaller than the template's own may be passed to truncate
    the tail.  The output is re-verified; failure here means a broken
    validity condition, not bad input, and raises CompositionError.
    """
    report = verify_schur(inner)
    if not report.valid:
        v = report.violations[0]
        raise CompositionError(
            f"inner partition is invalid: {v.a} + {v.b} = {v.c} in colour {v.colour}"
        )
    if offset is None:
        offset = tpl.offset
    elif not 0 <= offset <= tpl.offset:
        raise CompositionError(
            f"offset {offset} outside [0, {tpl.offset}] derived from the template"
        )
    m = tpl.order
    t = tpl.n_classes
    n = inner.n
    order = m * n + offset
    colour_of = [0] * order
    ordinary_of_residue = {}
    for j, cls in enumerate(tpl.ordinary_classes, start=1):
        for r in cls:
            ordinary_of_residue[r] = j
    for y in range(1, order + 1):
        x, r = divmod(y - 1, m)
        r += 1
        if r in tpl.template_class:
            colour_of[y - 1] = (t - 1) + inner.colour_of[x]
        else:
            colour_of[y - 1] = ordinary_of_residue[r]
    out = Partition(n=order, k=inner.k + t - 1, colour_of=tuple(colour_of))
    out_report = verify_schur(out)
    if not out_report.valid:
        v = out_report.violations[0]
        raise CompositionError(
            "composed partition failed verification (validity-condition bug): "
            f"{v.a} + {v.b} = {v.c} in colour {v.colour}, "
            f"{out_report.count} violation(s) total"
        )
    cert = CompositionCertificate(
        template_order=m,
        template_classes=t,
        offset=offset,
        inner_order=n,
        inner_colours=inner.k,
        order=order,
        colours=out.k,
        report=out_report,
    )
    return out, cert


def iterate(
    tpl: Template, base: Partition, rounds: int
) -> list[tuple[Partition, CompositionCertificate]]:
    """Feed each composition back in as the next inner partition."""
    if rounds < 1:
        raise ValueError(f"rounds must be >= 1, got {rounds}")
    chain: list[tuple[Partition, CompositionCertificate]] = []
    current = base
    for _ in range(rounds):
        current, cert = compose(tpl, current)
        chain.append((current, cert))
    return chain


# -- template enumeration and search ---------------------------------------------


class _TemplateBudget:
    __slots__ = ("limit", "spent")

    def __init__(self, limit: int | None):
        self.limit = limit
        self.spent = 0

    def spend(self) -> bool:
        self.spent += 1
        return self.limit is not None and self.spent > self.limit


class _TemplateBudgetStop(Exception):
    pass


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _ordinary_admits(cls: int, r: int, m: int) -> bool:
    """Can r join this mod-m sum-free class?  Members are all below r."""
    for s in _iter_bits(cls):
        if (cls >> (r - s)) & 1:
            return False
    full = cls | (1 << r)
    for s in _iter_bits(full):
        u = r + s - m
        if u >= 1 and (full >> u) & 1:
            return False
    return True


def _template_admits(cls: int, r: int) -> bool:
    """Can r join the plainly sum-free template class?  Members below r."""
    for s in _iter_bits(cls):
        if (cls >> (r - s)) & 1:
            return False
    return True


def enumerate_templates(
    order: int, n_classes: int, budget: _TemplateBudget | None = None
) -> Iterator[Template]:
    """All valid templates of exactly this order and class count.

    Ordinary classes are interchangeable, so they are produced in
    first-use order; the template class is distinguished.  Each candidate
    assignment is re-validated through :func:`validate_template` before it
    is yielded.
    """
    if n_classes < 2:
        raise ValueError(f"need at least 2 classes, got {n_classes}")
    if order < 1:
        return
    budget = budget or _TemplateBudget(None)
    t_mask = 0
    ordinary = [0] * (n_classes - 1)
    used = 0

    def empties_left(r: int) -> int:
        need = (n_classes - 1 - used) + (0 if t_mask else 1)
        return (order - r + 1) - need

    def walk(r: int) -> Iterator[Template]:
        nonlocal t_mask, used
        if r > order:
            if t_mask and used == n_classes - 1:
                validation = validate_template(
                    order,
                    n_classes,
                    set(_iter_bits(t_mask)),
                    [set(_iter_bits(c)) for c in ordinary],
                )
                if not validation.ok:  # incremental pruning missed a case
                    raise AssertionError(
                        f"enumeration produced an invalid template: {validation.failures}"
                    )
                yield validation.template
            return
        if empties_left(r) < 0:
            return
        if budget.spend():
            raise _TemplateBudgetStop
        if _template_admits(t_mask, r):
            t_mask |= 1 << r
            yield from walk(r + 1)
            t_mask &= ~(1 << r)
        limit = min(used + 1, n_classes - 1)
        for j in range(limit):
            if _ordinary_admits(ordinary[j], r, order):
                fresh = ordinary[j] == 0
                ordinary[j] |= 1 << r
                if fresh:
                    used += 1
                yield from walk(r + 1)
                ordinary[j] &= ~(1 << r)
                if fresh:
                    used -= 1

    yield from walk(1)


@dataclass(frozen=True)
class TemplateSearchResult:
    status: str  # found | exhausted | budget-exceeded
    template: Template | None
    orders_exhausted: tuple[int, ...]
    nodes: int


def template_search(
    n_classes: int, max_order: int, node_budget: int | None = None
) -> TemplateSearchResult:
    """Best template with this many classes: maximal order, then maximal offset.

    Scans orders downward from ``max_order``, enumerating each exhaustively,
    and returns the first order that admits a template, preferring the
    largest offset (ties broken by lexicographically smallest template
    class).  Orders proven empty along the way are reported.
    """
    if n_classes < 2:
        raise ValueError(f"need at least 2 classes, got {n_classes}")
    if max_order < 1:
        raise ValueError(f"max_order must be >= 1, got {max_order}")
    budget = _TemplateBudget(node_budget)
    exhausted: list[int] = []
    for order in range(max_order, 0, -1):
        best: Template | None = None
        try:
            for tpl in enumerate_templates(order, n_classes, budget=budget):
                if best is None or _preference(tpl) < _preference(best):
                    best = tpl
        except _TemplateBudgetStop:
            return TemplateSearchResult(
                status="budget-exceeded",
                template=best,
                orders_exhausted=tuple(exhausted),
                nodes=budget.spent,
            )
        if best is not None:
            return TemplateSearchResult(
                status="found",
                template=best,
                orders_exhausted=tuple(exhausted),
                nodes=budget.spent,
            )
        exhausted.append(order)
    return TemplateSearchResult(
        status="exhausted",
        template=None,
        orders_exhausted=tuple(exhausted),
        nodes=budget.spent,
    )


def _preference(tpl: Template) -> tuple:
    return (-tpl.offset, tuple(sorted(tpl.template_class)))


def all_templates_up_to(max_order: int) -> Iterator[Template]:
    """Every valid template of any class count with order <= max_order."""
    for order in range(1, max_order + 1):
        for n_classes in range(2, order + 1):
            yield from enumerate_templates(order, n_classes)
