"""Command-line interface.

Exit codes: 0 success (or predicate true), 1 predicate false, 2 parse or
validation error, 3 infeasible argument (a cap exceeded without --force).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import counting, floorplan, gentree, lowerbound
from .perm import Permutation, decompose, is_baxter, is_simple


def _perm_from_args(args: argparse.Namespace) -> Permutation:
    if getattr(args, "file", None):
        text = Path(args.file).read_text()
    else:
        text = args.perm
        if text is None:
            raise ValueError("a permutation is required (inline or via --file)")
    return Permutation.parse(text)


def _floorplan_from_file(path: str) -> floorplan.MosaicFloorplan:
    return floorplan.parse_floorplan(Path(path).read_text())


def _cmd_check(args) -> int:
    p = _perm_from_args(args)
    if args.kind == "baxter":
        ok = is_baxter(p)
    elif args.kind == "simple":
        ok = is_simple(p)
    elif args.kind == "ihrd":
        ok = gentree.is_ihrd(p)
    else:
        if args.k is None:
            raise ValueError("check hrd requires --k")
        ok = gentree.is_hrd(p, args.k)
    print("true" if ok else "false")
    return 0 if ok else 1


def _cmd_decompose(args) -> int:
    d = decompose(_perm_from_args(args))
    print(f"skeleton {d.skeleton}")
    for child in d.children:
        print(f"child {child}")
    return 0


def _cmd_tree(args) -> int:
    p = _perm_from_args(args)
    if not is_baxter(p):
        print(f"no order-{args.k} tree: not a Baxter permutation")
        return 1
    tree = gentree.tree_of_perm(p, args.k)
    if tree is None:
        print(f"no order-{args.k} tree: a skeleton exceeds length {args.k}")
        return 1
    print(gentree.format_tree(tree))
    return 0


def _cmd_fp2bp(args) -> int:
    print(floorplan.fp2bp(_floorplan_from_file(args.floorplan)))
    return 0


def _cmd_bp2fp(args) -> int:
    f = floorplan.bp2fp(_perm_from_args(args))
    sys.stdout.write(floorplan.format_floorplan(f))
    return 0


def _cmd_render(args) -> int:
    sys.stdout.write(floorplan.render(_floorplan_from_file(args.floorplan)))
    return 0


def _cmd_count(args) -> int:
    if args.literal:
        if args.k != 5:
            raise ValueError("--literal evaluates the order-5 recurrence; use --k 5")
        print(counting.count_hrd_literal(args.n))
    elif args.oracle:
        print(counting.oracle_count(args.k, args.n, force=args.force))
    else:
        table = counting.ensure_table(args.k, args.n, use_memo=not args.no_memo, force=args.force)
        print(table.t[args.n])
    return 0


def _cmd_sequence(args) -> int:
    table = counting.ensure_table(args.k, args.max, use_memo=not args.no_memo, force=args.force)
    counts = table.counts()[: args.max]
    if args.csv:
        for n, c in enumerate(counts, 1):
            print(f"{n},{c}")
    else:
        for c in counts:
            print(c)
    return 0


def _cmd_census(args) -> int:
    census = counting.census_simple_baxter(args.len, with_list=args.list, force=args.force)
    print(census.count)
    if args.list:
        for p in census.perms:
            print(p)
    return 0


def _cmd_lowerbound(args) -> int:
    if args.seed is not None:
        seed = Permutation.parse(args.seed)
    else:
        perms = counting.census_simple_baxter(args.k, with_list=True, force=args.force).perms
        if not perms:
            raise ValueError(f"no irreducible seed of length {args.k} exists")
        seed = perms[0]
    report = lowerbound.insertion_family(args.k, args.n, seed, all_sites=args.all_sites)
    print(lowerbound.format_report(report))
    ok = report.all_baxter and report.all_hrd_k and report.none_hrd_below
    return 0 if ok else 1


def _cmd_grow_ihrd(args) -> int:
    grown = lowerbound.grow_ihrd(_floorplan_from_file(args.floorplan))
    sys.stdout.write(floorplan.format_floorplan(grown))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hrd",
        description="Hierarchical rectangular dissections: predicates, bijections, counting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_perm_arg(sp):
        sp.add_argument("perm", nargs="?", help="permutation, e.g. '4 1 3 5 2' or '41352' (n <= 9)")
        sp.add_argument("--file", help="read the permutation from a file instead")

    sp = sub.add_parser("check", help="evaluate a predicate; exit 0 iff true")
    sp.add_argument("kind", choices=["baxter", "simple", "ihrd", "hrd"])
    add_perm_arg(sp)
    sp.add_argument("--k", type=int, help="order (required for hrd)")
    sp.set_defaults(func=_cmd_check)

    sp = sub.add_parser("decompose", help="canonical substitution decomposition")
    add_perm_arg(sp)
    sp.set_defaults(func=_cmd_decompose)

    sp = sub.add_parser("tree", help="print the skewed generating tree of order k")
    add_perm_arg(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=_cmd_tree)

    sp = sub.add_parser("fp2bp", help="label permutation of a floorplan file")
    sp.add_argument("floorplan")
    sp.set_defaults(func=_cmd_fp2bp)

    sp = sub.add_parser("bp2fp", help="floorplan of a Baxter permutation")
    add_perm_arg(sp)
    sp.set_defaults(func=_cmd_bp2fp)

    sp = sub.add_parser("render", help="ASCII rendering of a floorplan file")
    sp.add_argument("floorplan")
    sp.set_defaults(func=_cmd_render)

    sp = sub.add_parser("count", help="number of order-k dissections with n rooms")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--literal", action="store_true", help="order-5 recurrence, direct summation")
    group.add_argument("--fast", action="store_true", help="convolution table (default)")
    group.add_argument("--oracle", action="store_true", help="exhaustive scan (n <= 9 without --force)")
    sp.add_argument("--no-memo", action="store_true", help="do not read or write the persistent table")
    sp.add_argument("--force", action="store_true", help="override exhaustive-scan caps")
    sp.set_defaults(func=_cmd_count)

    sp = sub.add_parser("sequence", help="counts for n = 1..max")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--max", type=int, required=True)
    sp.add_argument("--csv", action="store_true", help="emit 'n,count' rows")
    sp.add_argument("--no-memo", action="store_true")
    sp.add_argument("--force", action="store_true")
    sp.set_defaults(func=_cmd_sequence)

    sp = sub.add_parser("census", help="simple Baxter permutations of one length")
    sp.add_argument("--len", type=int, required=True)
    sp.add_argument("--list", action="store_true", help="also print the permutations")
    sp.add_argument("--force", action="store_true", help="override the census cap")
    sp.set_defaults(func=_cmd_census)

    sp = sub.add_parser("lowerbound", help="insertion family report for a seed")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", help="irreducible seed (default: first census entry of length k)")
    sp.add_argument("--all-sites", action="store_true", help="branch over all safe sites, not the canonical three")
    sp.add_argument("--force", action="store_true")
    sp.set_defaults(func=_cmd_lowerbound)

    sp = sub.add_parser("grow-ihrd", help="grow an irreducible floorplan by two rooms")
    sp.add_argument("floorplan")
    sp.set_defaults(func=_cmd_grow_ihrd)

    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        if extra:
            # allow the permutation to follow options, quoted or not:
            # `check hrd --k 4 41352` and `check baxter 2 4 1 3` both work
            if hasattr(args, "perm") and all(not tok.startswith("-") for tok in extra):
                tokens = ([args.perm] if args.perm else []) + extra
                args.perm = " ".join(tokens)
            else:
                parser.error(f"unrecognized arguments: {' '.join(extra)}")
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except counting.CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
