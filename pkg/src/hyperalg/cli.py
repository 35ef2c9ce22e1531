"""Batch command-line front-end.

Every subcommand reads TSV files, runs one operation, and writes triple
TSV (or a property report) to stdout.  Exit codes: 0 success, 1 usage
error, 2 data/format error, 3 a checked law failed to hold.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import database, dnn, graph, semilink
from .array import ALL, key_rank
from .errors import AlgebraError, FormatError
from .sampling import (
    overlapping_set,
    random_array,
    random_keys,
    random_permutation_pattern,
    random_value,
)
from .semiring import SEMIRING_NAMES, make_semiring
from .tsv import format_key, format_triples, parse_key, read_triples_file


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hyperalg",
        description="Hypersparse associative-array algebra over TSV files.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("ingest", help="normalize a table or triple file to triple TSV")
    src = q.add_mutually_exclusive_group(required=True)
    src.add_argument("--table", help="header+rows table TSV (set-valued)")
    src.add_argument("--triples", help="triple TSV")
    q.add_argument("--semiring", default="plus.times", choices=SEMIRING_NAMES,
                   help="value domain for --triples (default: plus.times)")
    q.set_defaults(func=_cmd_ingest)

    q = sub.add_parser("select", help="single-condition select over a table")
    q.add_argument("--table", required=True)
    q.add_argument("--where", required=True, metavar="COL=VALUE")
    q.add_argument("--cols", required=True, help="comma-separated output columns")
    q.add_argument("--engine", default="direct", choices=("direct", "semilink"))
    q.set_defaults(func=_cmd_select)

    q = sub.add_parser("adjacency", help="project incidence arrays to an adjacency array")
    q.add_argument("--eout", required=True)
    q.add_argument("--ein", required=True)
    q.add_argument("--semiring", default="plus.times", choices=SEMIRING_NAMES)
    q.set_defaults(func=_cmd_adjacency)

    q = sub.add_parser("bfs", help="breadth-first search over a triple-TSV graph")
    q.add_argument("--graph", required=True)
    q.add_argument("--seed", required=True, metavar="KEY[,KEY...]")
    q.add_argument("--max-depth", type=int, default=None)
    q.set_defaults(func=_cmd_bfs)

    q = sub.add_parser("infer", help="sparse ReLU network inference")
    q.add_argument("--layers", required=True, help="comma-separated weight files")
    q.add_argument("--biases", required=True, help="comma-separated bias files")
    q.add_argument("--input", required=True)
    q.add_argument("--mode", default="standard", choices=("standard", "semiring"))
    q.add_argument("--space-delim", action="store_true",
                   help="accept space-separated triples on input")
    q.set_defaults(func=_cmd_infer)

    q = sub.add_parser("check-properties", help="run the coupled-operation law suite")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--trials", type=int, default=200)
    q.set_defaults(func=_cmd_check)

    return p


def _cmd_ingest(args, out) -> int:
    if args.table is not None:
        with open(args.table, encoding="utf-8") as f:
            table = database.ingest_tsv(f)
        out.write(database.export_tsv(table.array))
    else:
        a = read_triples_file(args.triples, make_semiring(args.semiring))
        out.write(format_triples(a))
    return 0


def _cmd_select(args, out) -> int:
    if "=" not in args.where:
        print("error: --where expects COL=VALUE", file=sys.stderr)
        return 1
    col, _, value = args.where.partition("=")
    cols = [parse_key(c) for c in args.cols.split(",") if c]
    with open(args.table, encoding="utf-8") as f:
        table = database.ingest_tsv(f)
    engine = database.select_direct if args.engine == "direct" else database.select_semilink
    result = engine(table, cols, parse_key(col), frozenset({value}))
    out.write(database.export_tsv(result))
    return 0


def _cmd_adjacency(args, out) -> int:
    s = make_semiring(args.semiring)
    inc = graph.IncidencePair(
        e_out=read_triples_file(args.eout, s),
        e_in=read_triples_file(args.ein, s),
    )
    out.write(format_triples(graph.adjacency(inc)))
    return 0


def _cmd_bfs(args, out) -> int:
    a = read_triples_file(args.graph, make_semiring("plus.times"))
    seeds = [parse_key(k) for k in args.seed.split(",") if k]
    result = graph.bfs(a, seeds, args.max_depth)
    for v in sorted(result.levels, key=key_rank):
        out.write(f"{format_key(v)}\t{graph.LEVEL_KEY}\t{result.levels[v]}\n")
    return 0


def _cmd_infer(args, out) -> int:
    net = dnn.load_network(
        args.layers.split(","), args.biases.split(","), space_delim=args.space_delim
    )
    y0 = read_triples_file(
        args.input, make_semiring("plus.times"), space_delim=args.space_delim
    )
    out.write(format_triples(dnn.infer(net, y0, args.mode)))
    return 0


def _cmd_check(args, out) -> int:
    violations = _property_suite(args.seed, args.trials, out)
    if violations:
        out.write(f"FAIL: {violations} violated trial(s)\n")
        return 3
    out.write(f"all properties hold ({args.trials} trials each, seed {args.seed})\n")
    return 0


def _property_suite(seed: int, trials: int, out) -> int:
    """Run each law checker over seeded random inputs; returns violation count."""
    rng = random.Random(seed)
    semirings = [make_semiring(n) for n in SEMIRING_NAMES]
    checks = {
        "identity_interplay": _trial_identity_interplay,
        "permutation_identity": _trial_permutation_identity,
        "perm_distributivity": _trial_perm_distributivity,
        "hybrid_associativity": _trial_hybrid_associativity,
        "annihilation": _trial_annihilation,
    }
    total_bad = 0
    for name, trial in checks.items():
        bad = 0
        for i in range(trials):
            s = semirings[i % len(semirings)]
            report = trial(rng, s, i)
            if not report.holds:
                bad += 1
        status = "OK" if bad == 0 else f"{bad} VIOLATIONS"
        out.write(f"{name}: {status} ({trials} trials)\n")
        total_bad += bad
    return total_bad


def _trial_identity_interplay(rng, s, _i):
    return semilink.check_identity_interplay(s, random_keys(rng, rng.randint(1, 8)))


def _perm_arrays(rng, s, n):
    rows, cols = random_permutation_pattern(rng, s, n)
    a1 = {}
    a2 = {}
    for r, c in zip(rows, cols):
        v1 = random_value(rng, s, nonzero=True)
        if s.domain == "set":
            v2 = overlapping_set(rng, v1)
        else:
            v2 = random_value(rng, s, nonzero=True)
        a1[(r, c)] = v1
        a2[(r, c)] = v2
    from .array import build

    return (
        build([(r, c, v) for (r, c), v in a1.items()], s),
        build([(r, c, v) for (r, c), v in a2.items()], s),
    )


def _trial_permutation_identity(rng, s, _i):
    a, _ = _perm_arrays(rng, s, rng.randint(1, 8))
    return semilink.check_permutation_identity(a)


def _trial_perm_distributivity(rng, s, _i):
    a1, a2 = _perm_arrays(rng, s, rng.randint(1, 4))
    join = a1.col_keys()
    b = random_array(rng, s, join, random_keys(rng, 3), rng.randint(1, 6))
    c = random_array(rng, s, join, random_keys(rng, 3), rng.randint(1, 6))
    return semilink.check_perm_distributivity(a1, a2, b, c)


def _trial_hybrid_associativity(rng, s, i):
    from .array import identity, ones

    b = random_array(rng, s, random_keys(rng, 3), random_keys(rng, 3), rng.randint(1, 6))
    if i % 2 == 0:
        c = identity(b.col_keys() + random_keys(rng, 2, pool=50), s)
        a = random_array(rng, s, b.row_keys(), b.col_keys(), rng.randint(1, 6))
    else:
        c = random_array(rng, s, b.col_keys(), random_keys(rng, 3), rng.randint(1, 6))
        bc = b.array_mult(c)
        needed_cols = sorted(set(b.col_keys()) | set(bc.col_keys()), key=key_rank)
        a = ones(b.row_keys(), needed_cols, s)
    return semilink.check_hybrid_associativity(a, b, c)


def _trial_annihilation(rng, s, i):
    # pools guaranteed pairwise disjoint; condition index rotates over the
    # three left-form and four right-form disjointness cases
    pool = lambda tag: [f"{tag}{j}" for j in range(6)]
    shared = pool("s")
    rows_a, cols_a = shared[:], shared[:]
    rows_b, cols_b = shared[:], shared[:]
    rows_c, cols_c = shared[:], shared[:]
    cond = i % 7
    if cond in (0, 3):
        rows_b = pool("x")  # row(A) disjoint row(B)
    elif cond == 1:
        cols_c = pool("x")  # col(A) disjoint col(C)
    elif cond in (2, 6):
        rows_c = pool("x")  # col(B) disjoint row(C)
    elif cond == 4:
        cols_b = pool("x")  # col(A) disjoint col(B)
    elif cond == 5:
        rows_c = pool("y")
        cols_a = pool("z")  # col(A) disjoint row(C)
    a = random_array(rng, s, rows_a, cols_a, rng.randint(1, 5))
    b = random_array(rng, s, rows_b, cols_b, rng.randint(1, 5))
    c = random_array(rng, s, rows_c, cols_c, rng.randint(1, 5))
    return semilink.check_annihilation(a, b, c)


def run(argv: list[str], out=None) -> int:
    """Execute one CLI invocation; returns the process exit code."""
    out = sys.stdout if out is None else out
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 1
    try:
        return args.func(args, out)
    except FileNotFoundError as e:
        print(f"error: cannot read {e.filename}", file=sys.stderr)
        return 2
    except AlgebraError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
