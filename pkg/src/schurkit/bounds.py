"""Provenance-tracked ledger of lower bounds for S(k) and R_k(3).

Facts enter the ledger three ways: literals quoted from the literature,
machine-verified witness partitions, and recurrence rules of the shape
S(k + t - 1) >= m * S(k) + offset contributed by composition templates.
``best_bounds`` chains everything by dynamic programming, keeping the full
derivation of each entry.  Ramsey bounds ride on R_r(3) >= S(r) + 2, via
the correspondence between sum-free partitions of [1, n] and triangle-free
colourings of the complete graph on n + 2 vertices in which edge colours
depend only on vertex distance.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Union

from .template import Template
from .verify import verify_schur

# Previous best published lower bound for lim R_r(3)^(1/r), kept only for
# comparison output (Xu, Xie, Exoo, Radziszowski 2004).
PRIOR_GROWTH_BOUND = 3.199


class LedgerError(ValueError):
    """Rejected fact, rule, or registry line."""


@dataclass(frozen=True)
class RecurrenceRule:
    """S(k + classes - 1) >= factor * S(k) + offset."""

    factor: int
    classes: int
    offset: int
    source: str = ""

    def __post_init__(self) -> None:
        if self.factor < 1:
            raise LedgerError(f"factor must be >= 1, got {self.factor}")
        if self.classes < 2:
            raise LedgerError(f"classes must be >= 2, got {self.classes}")
        if not 0 <= self.offset < self.factor:
            raise LedgerError(
                f"offset must satisfy 0 <= offset < factor, got {self.offset}"
            )

    @property
    def added_colours(self) -> int:
        return self.classes - 1

    def apply(self, value: int) -> int:
        return self.factor * value + self.offset

    def growth(self) -> float:
        return self.factor ** (1.0 / self.added_colours)


@dataclass(frozen=True)
class Provenance:
    kind: str  # literal | witness | recurrence | ramsey
    detail: str = ""
    rule: RecurrenceRule | None = None
    from_k: int | None = None

    def describe(self) -> str:
        if self.kind == "recurrence":
            return f"{self.rule.factor}*S({self.from_k})+{self.rule.offset}"
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class BoundFact:
    k: int
    value: int
    provenance: Provenance

    def __post_init__(self) -> None:
        if self.k < 1 or self.value < 1:
            raise LedgerError(f"k and value must be >= 1, got k={self.k} value={self.value}")
        p = self.provenance
        if p.kind == "recurrence":
            if p.rule is None or p.from_k is None:
                raise LedgerError("recurrence provenance needs a rule and a source k")
            if self.k != p.from_k + p.rule.added_colours:
                raise LedgerError(
                    f"rule adds {p.rule.added_colours} colours but k went "
                    f"{p.from_k} -> {self.k}"
                )


def rule_from_template(tpl: Template, source: str = "") -> RecurrenceRule:
    """Recurrence contributed by a validated template."""
    return RecurrenceRule(
        factor=tpl.order,
        classes=tpl.n_classes,
        offset=tpl.offset,
        source=source or f"validated template of order {tpl.order}",
    )


class BoundLedger:
    """Registered facts and rules plus the DP that chains them.

    Mutable; treat one instance as owned by one thread and share only the
    values it hands out.
    """

    def __init__(self, seed_base_case: bool = True):
        self.literals: dict[int, BoundFact] = {}
        self.witnesses: dict[int, BoundFact] = {}
        self.rules: list[RecurrenceRule] = []
        if seed_base_case:
            self.register_literal(1, 1, "S(1) = 1: the singleton {1} and nothing longer")

    def register(self, item: Union[BoundFact, RecurrenceRule]) -> None:
        if isinstance(item, RecurrenceRule):
            self.register_rule(item)
        elif isinstance(item, BoundFact):
            if item.provenance.kind == "literal":
                self._keep_best(self.literals, item)
            elif item.provenance.kind == "witness":
                raise LedgerError(
                    "witness facts must come through register_witness for verification"
                )
            else:
                raise LedgerError(f"cannot register a {item.provenance.kind} fact directly")
        else:
            raise LedgerError(f"cannot register {type(item).__name__}")

    def register_literal(self, k: int, value: int, citation: str) -> BoundFact:
        fact = BoundFact(k=k, value=value, provenance=Provenance("literal", citation))
        self._keep_best(self.literals, fact)
        return fact

    def register_witness(self, k: int, value: int, path: str | Path) -> BoundFact:
        """Witness-backed fact: the partition file must check out on ingestion."""
        from .formats import read_partition

        p = read_partition(path)
        if p.k != k or p.n != value:
            raise LedgerError(
                f"witness file has n={p.n} k={p.k}, claimed n={value} k={k}"
            )
        report = verify_schur(p)
        if not report.valid:
            v = report.violations[0]
            raise LedgerError(
                f"witness file fails verification: {v.a} + {v.b} = {v.c} "
                f"in colour {v.colour} ({report.count} violation(s))"
            )
        fact = BoundFact(k=k, value=value, provenance=Provenance("witness", str(path)))
        self._keep_best(self.witnesses, fact)
        return fact

    def register_rule(self, rule: RecurrenceRule) -> None:
        if rule not in self.rules:
            self.rules.append(rule)

    @staticmethod
    def _keep_best(table: dict[int, BoundFact], fact: BoundFact) -> None:
        held = table.get(fact.k)
        if held is None or fact.value > held.value:
            table[fact.k] = fact

    # -- derived quantities --------------------------------------------------

    def best_bounds(self, k_max: int) -> dict[int, BoundFact]:
        """Best derivable bound for each k up to k_max, with provenance chains.

        For every k the maximum over registered witnesses, literals, and
        rule applications m * S(k') + offset; ties prefer witnesses, then
        literals, then rules in registration order.  Entirely deterministic.
        """
        best: dict[int, BoundFact] = {}
        for k in range(1, k_max + 1):
            candidates: list[BoundFact] = []
            if k in self.witnesses:
                candidates.append(self.witnesses[k])
            if k in self.literals:
                candidates.append(self.literals[k])
            for rule in self.rules:
                source_k = k - rule.added_colours
                if source_k >= 1 and source_k in best:
                    candidates.append(
                        BoundFact(
                            k=k,
                            value=rule.apply(best[source_k].value),
                            provenance=Provenance(
                                "recurrence", rule.source, rule=rule, from_k=source_k
                            ),
                        )
                    )
            if candidates:
                best[k] = max(candidates, key=lambda f: f.value)
        return best

    def provenance_chain(self, fact: BoundFact, table: dict[int, BoundFact]) -> list[BoundFact]:
        """The fact and every ancestor it was derived from, root first."""
        chain = [fact]
        while chain[-1].provenance.kind == "recurrence":
            chain.append(table[chain[-1].provenance.from_k])
        chain.reverse()
        return chain

    def ramsey_bound(self, r: int, k_max: int | None = None) -> BoundFact:
        """R_r(3) >= S(r) + 2 on top of the best derivable S(r)."""
        table = self.best_bounds(k_max or r)
        if r not in table:
            raise LedgerError(f"no bound derivable for S({r})")
        base = table[r]
        return BoundFact(
            k=r,
            value=base.value + 2,
            provenance=Provenance(
                "ramsey", f"S({r}) + 2, S({r}) >= {base.value} by {base.provenance.describe()}"
            ),
        )

    def growth_constant(self) -> tuple[float, RecurrenceRule]:
        return growth_constant(self.rules)


def growth_constant(rules: Iterable[RecurrenceRule]) -> tuple[float, RecurrenceRule]:
    """max over rules of factor^(1/(classes - 1)), with the achieving rule.

    Chaining one rule forever multiplies the order by its factor every
    added_colours steps, so the per-colour growth rate of the derived
    R_r(3) bounds approaches exactly this root.
    """
    rules = list(rules)
    if not rules:
        raise LedgerError("growth constant needs at least one rule")
    best = max(rules, key=lambda r: (r.growth(), -r.classes))
    return best.growth(), best


# -- registry files ----------------------------------------------------------------


def parse_registry_line(line: str, base_dir: Path | None = None) -> Union[BoundFact, RecurrenceRule, None]:
    """One registry line -> item, or None for blanks and comments.

    Grammar: ``literal k value citation...`` | ``rule m t offset source...``
    | ``witness k value path``.  Witness paths resolve against base_dir.
    """
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    tokens = stripped.split()
    kind = tokens[0]
    try:
        if kind == "literal":
            k, value = int(tokens[1]), int(tokens[2])
            return BoundFact(k=k, value=value, provenance=Provenance("literal", " ".join(tokens[3:])))
        if kind == "rule":
            m, t, offset = int(tokens[1]), int(tokens[2]), int(tokens[3])
            return RecurrenceRule(factor=m, classes=t, offset=offset, source=" ".join(tokens[4:]))
        if kind == "witness":
            k, value = int(tokens[1]), int(tokens[2])
            path = Path(" ".join(tokens[3:]))
            if base_dir is not None and not path.is_absolute():
                path = base_dir / path
            return BoundFact(k=k, value=value, provenance=Provenance("witness", str(path)))
    except (IndexError, ValueError) as exc:
        raise LedgerError(f"malformed registry line: {line!r} ({exc})") from exc
    raise LedgerError(f"unknown registry entry type {kind!r} in line {line!r}")


def load_registry_text(text: str, base_dir: Path | None = None) -> BoundLedger:
    ledger = BoundLedger()
    for line in text.splitlines():
        item = parse_registry_line(line, base_dir=base_dir)
        if item is None:
            continue
        if isinstance(item, RecurrenceRule):
            ledger.register_rule(item)
        elif item.provenance.kind == "witness":
            ledger.register_witness(item.k, item.value, item.provenance.detail)
        else:
            ledger.register(item)
    return ledger


def load_registry(path: str | Path) -> BoundLedger:
    path = Path(path)
    return load_registry_text(path.read_text(), base_dir=path.parent)


def default_registry() -> BoundLedger:
    """The registry shipped with the package: the known rules and literals."""
    text = resources.files("schurkit").joinpath("data/default.reg").read_text()
    return load_registry_text(text)


def format_registry(ledger: BoundLedger) -> str:
    """Registry text that reloads to an equivalent ledger."""
    lines = ["# bound registry"]
    for rule in ledger.rules:
        lines.append(f"rule {rule.factor} {rule.classes} {rule.offset} {rule.source}".rstrip())
    for k in sorted(ledger.literals):
        fact = ledger.literals[k]
        lines.append(f"literal {fact.k} {fact.value} {fact.provenance.detail}".rstrip())
    for k in sorted(ledger.witnesses):
        fact = ledger.witnesses[k]
        lines.append(f"witness {fact.k} {fact.value} {fact.provenance.detail}")
    return "\n".join(lines) + "\n"


def format_bounds_table(ledger: BoundLedger, k_max: int, ramsey: bool = True) -> str:
    """Aligned table of the best bounds with a provenance column."""
    table = ledger.best_bounds(k_max)
    rows = []
    for k in range(1, k_max + 1):
        if k in table:
            fact = table[k]
            value = str(fact.value)
            prov = fact.provenance.describe()
            r_val = str(fact.value + 2) if ramsey else ""
        else:
            value, prov, r_val = "?", "not derivable from the registry", "?"
        rows.append((str(k), value, r_val, prov))
    headers = ("k", "S(k) >=", "R_k(3) >=", "provenance") if ramsey else ("k", "S(k) >=", "provenance")
    if not ramsey:
        rows = [(r[0], r[1], r[3]) for r in rows]
    widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(headers)]
    def fmt(row):
        return "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
    return "\n".join([fmt(headers)] + [fmt(r) for r in rows]) + "\n"
