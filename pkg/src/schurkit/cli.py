"""Command-line surface: verify, profile, search, compose, template ops, bounds.

Machine-readable results go to stdout (partition/template text with ``#``
status comments, so output can be piped straight into a file and read
back); progress and timing go to stderr.  Exit codes: 0 success, 1
violations / rejection / exhausted search, 2 malformed input, 3 budget
exceeded (with a checkpoint written for searches).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bounds as bounds_mod
from . import formats
from .partition import PartitionError, profile as profile_partition
from .search import (
    PartialPartition,
    SearchConfig,
    SearchError,
    SeedContradiction,
    extend,
    extend_parallel,
    resume,
    seed_prefix,
    seed_symmetric,
    symmetry_obstruction,
)
from .template import CompositionError, compose, iterate, template_search
from .verify import verify_schur, verify_symmetric_schur

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MALFORMED = 2
EXIT_BUDGET = 3


def _parse_positions(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad position list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurkit",
        description="Sum-free partition tools: verify, search, compose, track bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="check a partition file for sum-freeness")
    p_verify.add_argument("file")
    p_verify.add_argument("--cap", type=int, default=100, help="max violations to list")
    p_verify.add_argument(
        "--require-symmetric", action="store_true", help="also require mirror symmetry"
    )
    p_verify.add_argument(
        "--exceptions", type=_parse_positions, default=(), help="positions excused from symmetry"
    )

    p_profile = sub.add_parser("profile", help="shape summary of a partition file")
    p_profile.add_argument("file")

    p_search = sub.add_parser("search", help="backtracking search for a partition")
    p_search.add_argument("--target", type=int, help="order of the partition sought")
    p_search.add_argument("--seed", help="base partition file to grow from")
    p_search.add_argument("--colours", type=int, help="colour count for a fresh search")
    p_search.add_argument("--symmetric", action="store_true")
    p_search.add_argument("--exceptions", type=_parse_positions, default=())
    p_search.add_argument("--variable-order", choices=("ascending", "most-blocked"), default="ascending")
    p_search.add_argument("--colour-order", choices=("fixed", "least-blocked"), default="fixed")
    p_search.add_argument("--tie-break", choices=("lowest", "random"), default="lowest")
    p_search.add_argument("--tie-seed", type=int, default=0, help="seed for random tie-breaks")
    p_search.add_argument("--node-budget", type=int)
    p_search.add_argument("--time-budget", type=float, help="seconds")
    p_search.add_argument("--threads", type=int, default=1)
    p_search.add_argument("--mode", choices=("deterministic", "fast"), default="deterministic")
    p_search.add_argument("-o", "--output", help="write the witness here")
    p_search.add_argument("--checkpoint", help="checkpoint path on budget exhaustion")
    p_search.add_argument("--resume", help="resume from this checkpoint file")

    p_compose = sub.add_parser("compose", help="blow up a partition through a template")
    p_compose.add_argument("--template", required=True)
    p_compose.add_argument("--inner", required=True)
    p_compose.add_argument("--rounds", type=int, default=1)
    p_compose.add_argument("-o", "--output")

    p_tv = sub.add_parser("template-validate", help="check template conditions")
    p_tv.add_argument("file")

    p_ts = sub.add_parser("template-search", help="find the best template")
    p_ts.add_argument("--classes", type=int, required=True)
    p_ts.add_argument("--max-order", type=int, required=True)
    p_ts.add_argument("--node-budget", type=int)
    p_ts.add_argument("-o", "--output")

    p_bounds = sub.add_parser("bounds", help="best derivable lower bounds")
    p_bounds.add_argument("--max-k", type=int, default=8)
    p_bounds.add_argument("--registry", default="default", help="registry file, or 'default'")
    p_bounds.add_argument("--no-ramsey", action="store_true")
    p_bounds.add_argument("--growth", action="store_true", help="also print the growth constant")

    return parser


def _read_partition_or_die(path: str):
    try:
        return formats.read_partition(path)
    except FileNotFoundError:
        print(f"error: no such file: {path}", file=sys.stderr)
        raise SystemExit(EXIT_MALFORMED)
    except (formats.FormatError, PartitionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_MALFORMED)


def cmd_verify(args) -> int:
    p = _read_partition_or_die(args.file)
    if args.require_symmetric:
        report = verify_symmetric_schur(p, exceptions=args.exceptions, cap=args.cap)
    else:
        report = verify_schur(p, cap=args.cap)
    if report.valid:
        print(f"valid Schur partition, n={p.n} k={p.k}")
        return EXIT_OK
    if report.count:
        shown = "" if report.count <= len(report.violations) else f" (showing {len(report.violations)})"
        print(f"INVALID: {report.count} violation(s){shown}")
        for v in report.violations:
            print(f"  {v.a} + {v.b} = {v.c} in colour {v.colour}")
    for x, m in report.asymmetries:
        print(f"  asymmetric pair: {x} and {m} in different colours")
    return EXIT_INVALID


def cmd_profile(args) -> int:
    p = _read_partition_or_die(args.file)
    info = profile_partition(p)
    print(f"n = {info.n}")
    print(f"k = {info.k}")
    print(f"sizes = {' '.join(str(s) for s in info.sizes)}")
    print(f"minima = {' '.join(str(s) for s in info.minima)}")
    print(f"maxima = {' '.join(str(s) for s in info.maxima)}")
    print(f"symmetric = {'yes' if info.symmetric else 'no'}")
    print(f"n mod 16 = {info.n_mod_16}")
    return EXIT_OK


def _build_search_config(args) -> SearchConfig:
    return SearchConfig(
        symmetric=args.symmetric,
        variable_order=args.variable_order,
        colour_order=args.colour_order,
        node_budget=args.node_budget,
        time_budget=args.time_budget,
        tie_break=args.tie_break,
        seed=args.tie_seed,
        exceptions=args.exceptions,
    )


def cmd_search(args) -> int:
    config = _build_search_config(args)
    if args.resume:
        try:
            checkpoint = formats.read_checkpoint(args.resume)
            outcome = resume(checkpoint, config)
        except (formats.FormatError, SearchError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_MALFORMED
        return _finish_search(args, outcome)
    if args.target is None:
        print("error: --target is required unless resuming", file=sys.stderr)
        return EXIT_MALFORMED
    if (args.seed is None) == (args.colours is None):
        print("error: exactly one of --seed or --colours is required", file=sys.stderr)
        return EXIT_MALFORMED
    if args.symmetric:
        blocked_at = symmetry_obstruction(args.target, args.exceptions)
        if blocked_at is not None:
            print(
                f"warning: {args.target + 1} is divisible by 3; no fully symmetric "
                f"partition of [1, {args.target}] exists "
                f"({blocked_at} + {blocked_at} = {args.target + 1 - blocked_at})",
                file=sys.stderr,
            )
    try:
        if args.seed is not None:
            base = _read_partition_or_die(args.seed)
            import warnings as _warnings

            with _warnings.catch_warnings():
                _warnings.simplefilter("ignore")  # already printed above
                if args.symmetric:
                    partial = seed_symmetric(base, args.target, exceptions=args.exceptions)
                else:
                    partial = seed_prefix(base, args.target)
        else:
            partial = PartialPartition(
                args.target, args.colours, symmetric=args.symmetric, exceptions=args.exceptions
            )
    except SeedContradiction as exc:
        print(f"seed contradiction: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (SearchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    if args.threads > 1:
        outcome = extend_parallel(
            partial, config, threads=args.threads, deterministic=args.mode == "deterministic"
        )
    else:
        outcome = extend(partial, config)
    return _finish_search(args, outcome)


def _finish_search(args, outcome) -> int:
    stats = outcome.stats
    print(
        f"search: {stats.nodes} nodes, depth {stats.max_depth}, {stats.wall_time:.3f}s",
        file=sys.stderr,
    )
    if outcome.status == "found":
        w = outcome.witness
        text = formats.format_partition(w)
        print(f"# found n={w.n} k={w.k} nodes={stats.nodes} depth={stats.max_depth}")
        sys.stdout.write(text)
        if args.output:
            formats.write_partition(args.output, w)
        return EXIT_OK
    if outcome.status == "exhausted":
        print(f"# exhausted nodes={stats.nodes} depth={stats.max_depth}")
        return EXIT_INVALID
    path = args.checkpoint or "schurkit.checkpoint"
    formats.write_checkpoint(path, outcome.checkpoint)
    print(f"# budget-exceeded nodes={stats.nodes} depth={stats.max_depth} checkpoint={path}")
    return EXIT_BUDGET


def _read_template_or_die(path: str):
    try:
        validation = formats.read_template(path)
    except FileNotFoundError:
        print(f"error: no such file: {path}", file=sys.stderr)
        raise SystemExit(EXIT_MALFORMED)
    except (formats.FormatError, PartitionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_MALFORMED)
    if not validation.ok:
        print("template rejected:", file=sys.stderr)
        for failure in validation.failures:
            print(f"  {failure.condition}", file=sys.stderr)
            for v in failure.witnesses[:5]:
                form = f"{v.a} + {v.b} = {v.c}" + (" (wrapped)" if v.wrapped else "")
                print(f"    {form}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)
    return validation.template


def cmd_compose(args) -> int:
    tpl = _read_template_or_die(args.template)
    inner = _read_partition_or_die(args.inner)
    if args.rounds < 1:
        print("error: --rounds must be >= 1", file=sys.stderr)
        return EXIT_MALFORMED
    try:
        chain = iterate(tpl, inner, args.rounds)
    except (CompositionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    for i, (p, cert) in enumerate(chain, start=1):
        print(f"# round {i}: order {cert.order} = {cert.template_order} * {cert.inner_order} + {cert.offset}")
        print(f"# round {i}: colours {cert.colours} = {cert.inner_colours} + {cert.template_classes} - 1")
        print(f"# round {i}: verified {'valid' if cert.report.valid else 'INVALID'}")
    final, _ = chain[-1]
    sys.stdout.write(formats.format_partition(final))
    if args.output:
        formats.write_partition(args.output, final)
    return EXIT_OK


def cmd_template_validate(args) -> int:
    tpl = _read_template_or_die(args.file)
    print(
        f"valid template: order {tpl.order}, classes {tpl.n_classes}, offset {tpl.offset}"
    )
    print(f"template class: {' '.join(str(x) for x in sorted(tpl.template_class))}")
    return EXIT_OK


def cmd_template_search(args) -> int:
    try:
        result = template_search(args.classes, args.max_order, node_budget=args.node_budget)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    if result.template is None:
        print(f"# {result.status}: no template up to order {args.max_order}")
        return EXIT_BUDGET if result.status == "budget-exceeded" else EXIT_INVALID
    tpl = result.template
    print(f"# {result.status}: order {tpl.order}, offset {tpl.offset}, nodes {result.nodes}")
    if result.orders_exhausted:
        print(f"# orders proven empty: {' '.join(str(m) for m in result.orders_exhausted)}")
    sys.stdout.write(formats.format_template(tpl))
    if args.output:
        formats.write_template(args.output, tpl)
    return EXIT_OK if result.status == "found" else EXIT_BUDGET


def cmd_bounds(args) -> int:
    try:
        if args.registry == "default":
            ledger = bounds_mod.default_registry()
        else:
            ledger = bounds_mod.load_registry(args.registry)
    except FileNotFoundError:
        print(f"error: no such file: {args.registry}", file=sys.stderr)
        return EXIT_MALFORMED
    except (bounds_mod.LedgerError, formats.FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    sys.stdout.write(bounds_mod.format_bounds_table(ledger, args.max_k, ramsey=not args.no_ramsey))
    if args.growth:
        value, rule = ledger.growth_constant()
        print(
            f"growth constant: {value:.6f} via rule ({rule.factor}, {rule.classes}, {rule.offset});"
            f" prior published bound {bounds_mod.PRIOR_GROWTH_BOUND}"
        )
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "verify": cmd_verify,
        "profile": cmd_profile,
        "search": cmd_search,
        "compose": cmd_compose,
        "template-validate": cmd_template_validate,
        "template-search": cmd_template_search,
        "bounds": cmd_bounds,
    }
    try:
        return handlers[args.command](args)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
