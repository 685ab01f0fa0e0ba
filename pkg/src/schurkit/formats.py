"""Text formats: partitions, templates, and search checkpoints.

Canonical partition format:
  line 1: ``n k`` (two base-10 integers);
  lines 2..k+1: members of colour i, ascending, space-separated;
  ``#`` lines are comments, blank lines are skipped.

A template file is a partition of [1, m] plus a header comment naming the
template class: ``# template colour = <index>``.

A checkpoint extends the partition header with a ``partial`` flag; body
lines gain a leading colour index so empty classes survive the round trip,
with colour 0 holding the unassigned positions.  Structured comments carry
the pairing mode, exceptions, and the frozen seed boundary.
"""

from __future__ import annotations

from pathlib import Path

from .partition import Partition, make_partition
from .search import PartialPartition
from .template import TemplateValidation, validate_template
from .verify import verify_sum_free


class FormatError(ValueError):
    """Malformed file content."""


def _significant_lines(text: str) -> list[str]:
    return [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]


def _parse_ints(line: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError as exc:
        raise FormatError(f"non-integer token in {what}: {line!r}") from exc


def parse_partition(text: str) -> Partition:
    lines = _significant_lines(text)
    if not lines:
        raise FormatError("empty partition file")
    header = _parse_ints(lines[0], "header")
    if len(header) != 2:
        raise FormatError(f"header must be 'n k', got {lines[0]!r}")
    n, k = header
    if len(lines) - 1 != k:
        raise FormatError(f"expected {k} subset lines, found {len(lines) - 1}")
    subsets = [_parse_ints(line, "subset line") for line in lines[1:]]
    try:
        return make_partition(n, k, subsets)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_partition(p: Partition, comments: tuple[str, ...] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{p.n} {p.k}")
    for subset in p.subsets():
        lines.append(" ".join(str(x) for x in subset))
    return "\n".join(lines) + "\n"


def read_partition(path: str | Path) -> Partition:
    return parse_partition(Path(path).read_text())


def write_partition(path: str | Path, p: Partition, comments: tuple[str, ...] = ()) -> None:
    Path(path).write_text(format_partition(p, comments))


# -- templates --------------------------------------------------------------------


def parse_template(text: str) -> TemplateValidation:
    """Parse and validate a template file; condition failures are returned, not raised."""
    template_colour = None
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("#") and "template colour" in stripped:
            _, _, value = stripped.partition("=")
            try:
                template_colour = int(value.strip())
            except ValueError as exc:
                raise FormatError(f"bad template colour header: {stripped!r}") from exc
    if template_colour is None:
        raise FormatError("missing '# template colour = <index>' header")
    p = parse_partition(text)
    if not 1 <= template_colour <= p.k:
        raise FormatError(
            f"template colour {template_colour} outside [1, {p.k}]"
        )
    subsets = p.subsets()
    template_class = subsets[template_colour - 1]
    ordinary = [s for i, s in enumerate(subsets, start=1) if i != template_colour]
    return validate_template(p.n, p.k, template_class, ordinary)


def format_template(tpl) -> str:
    """Template file with the template class written as colour 1."""
    lines = [
        "# template colour = 1",
        f"{tpl.order} {tpl.n_classes}",
        " ".join(str(x) for x in sorted(tpl.template_class)),
    ]
    for cls in tpl.ordinary_classes:
        lines.append(" ".join(str(x) for x in sorted(cls)))
    return "\n".join(lines) + "\n"


def read_template(path: str | Path) -> TemplateValidation:
    return parse_template(Path(path).read_text())


def write_template(path: str | Path, tpl) -> None:
    Path(path).write_text(format_template(tpl))


# -- checkpoints --------------------------------------------------------------------


def format_checkpoint(partial: PartialPartition) -> str:
    lines = [f"{partial.n} {partial.k} partial"]
    if partial.symmetric:
        lines.append("# symmetric")
    if partial.exceptions:
        lines.append("# exceptions " + " ".join(str(x) for x in sorted(partial.exceptions)))
    lines.append(f"# frozen {partial.frozen_upto}")
    classes: list[list[int]] = [[] for _ in range(partial.k + 1)]
    for x in range(1, partial.n + 1):
        classes[partial.colour_of[x]].append(x)
    for colour in range(0, partial.k + 1):
        lines.append(" ".join([str(colour)] + [str(x) for x in classes[colour]]))
    return "\n".join(lines) + "\n"


def parse_checkpoint(text: str) -> PartialPartition:
    symmetric = False
    exceptions: list[int] = []
    frozen = 0
    for line in text.splitlines():
        stripped = line.strip()
        if stripped == "# symmetric":
            symmetric = True
        elif stripped.startswith("# exceptions"):
            exceptions = _parse_ints(stripped.removeprefix("# exceptions"), "exceptions")
        elif stripped.startswith("# frozen"):
            values = _parse_ints(stripped.removeprefix("# frozen"), "frozen marker")
            if len(values) != 1:
                raise FormatError(f"bad frozen marker: {stripped!r}")
            frozen = values[0]
    lines = _significant_lines(text)
    if not lines:
        raise FormatError("empty checkpoint file")
    header = lines[0].split()
    if len(header) != 3 or header[2] != "partial":
        raise FormatError(f"checkpoint header must be 'n k partial', got {lines[0]!r}")
    n, k = _parse_ints(" ".join(header[:2]), "header")
    if len(lines) - 1 != k + 1:
        raise FormatError(f"expected {k + 1} colour lines, found {len(lines) - 1}")
    partial = PartialPartition(n, k, symmetric=symmetric, exceptions=exceptions)
    partial.frozen_upto = frozen
    seen: set[int] = set()
    for line in lines[1:]:
        values = _parse_ints(line, "colour line")
        colour, members = values[0], values[1:]
        if not 0 <= colour <= k:
            raise FormatError(f"colour {colour} outside [0, {k}]")
        for x in members:
            if not 1 <= x <= n:
                raise FormatError(f"position {x} outside [1, {n}]")
            if x in seen:
                raise FormatError(f"position {x} listed twice")
            seen.add(x)
            if colour:
                partial.assign(x, colour)
    if len(seen) != n:
        missing = sorted(set(range(1, n + 1)) - seen)
        raise FormatError(f"positions not listed: {missing[:10]}")
    for colour in range(1, k + 1):
        members = [x for x in range(1, n + 1) if partial.colour_of[x] == colour]
        if members and not verify_sum_free(members, n).valid:
            raise FormatError(f"checkpoint colour {colour} contains a violation")
    if not 0 <= frozen <= n:
        raise FormatError(f"frozen boundary {frozen} outside [0, {n}]")
    return partial


def read_checkpoint(path: str | Path) -> PartialPartition:
    return parse_checkpoint(Path(path).read_text())


def write_checkpoint(path: str | Path, partial: PartialPartition) -> None:
    Path(path).write_text(format_checkpoint(partial))
