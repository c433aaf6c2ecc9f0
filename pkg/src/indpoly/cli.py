"""Command-line surface: build lifts from tree files, certify them,
query matroid oracles, detect 1-sums, evaluate the leaf-size bound and
run rectangle covers.

Exit codes are a stable contract: 0 success / certified, 1 failure
(including parse and validation errors), 2 enumeration cap exceeded.
Every command is deterministic given its flags; randomness is always
behind an explicit seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import gf2
from .decomp import (DecompError, build_ef, find_1sums, g_bound, node_matroid,
                     parse_tree_file, validate)
from .extform import ExtendedFormulation
from .lpfile import write_lp
from .matroid import BinaryMatroid, MatroidError
from .rational import ONE, Rational, rat_str
from .verify import (VerifyError, certify_equality, greedy_cross_check,
                     rectangle_cover, validity_of_exchange_claim)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CAP = 2


def _load_matroid(path: str) -> BinaryMatroid:
    with open(path) as fh:
        return BinaryMatroid.from_matrix(gf2.parse_matrix(fh.read()))


def _inject_fault(ef: ExtendedFormulation) -> ExtendedFormulation:
    """Testing hook: tighten the first inequality's right-hand side by
    one half, so a correct build no longer certifies."""
    if not ef.inequalities:
        return ef
    row, sense, rhs = ef.inequalities[0]
    delta = -ONE / 2 if sense == "<=" else ONE / 2
    ineqs = ((row, sense, Rational(rhs) + delta),) + ef.inequalities[1:]
    return ExtendedFormulation(ef.variables, ineqs, ef.equations)


def _prepare_tree(args):
    """Parse + validate + build; shared by build and certify."""
    node = parse_tree_file(args.tree)
    report = validate(node)
    for warning in report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if not report.ok:
        for error in report.errors:
            print(f"error: {error}", file=sys.stderr)
        raise DecompError("tree validation failed")
    ef = build_ef(node, cap=args.cap)
    if args.inject_fault:
        ef = _inject_fault(ef)
    return node, ef


def cmd_build(args) -> int:
    node, ef = _prepare_tree(args)
    n_ineq, n_eq, n_var = ef.size()
    n_elem = len(ef.projected_labels)
    ratio = rat_str(Rational(n_ineq, n_elem * n_elem)) if n_elem else "n/a"
    summary = (f"inequalities={n_ineq} equations={n_eq} variables={n_var} "
               f"elements={n_elem} ratio={ratio}")
    if args.format == "json":
        print(json.dumps({"inequalities": n_ineq, "equations": n_eq,
                          "variables": n_var, "elements": n_elem,
                          "ratio": ratio}, sort_keys=True))
    else:
        print(summary)
    text = write_lp(ef, comment=f"built from {args.tree}\n{summary}")
    out = args.output
    if out is None:
        out = args.tree.rsplit(".", 1)[0] + ".lp"
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_certify(args) -> int:
    node, ef = _prepare_tree(args)
    matroid = node_matroid(node)
    if matroid.size > args.cap:
        print(f"error: ground set of size {matroid.size} exceeds cap "
              f"{args.cap}", file=sys.stderr)
        return EXIT_CAP
    report = certify_equality(ef, matroid, cap=args.cap)
    ok = report.overall
    if args.trials:
        greedy = greedy_cross_check(ef, matroid, trials=args.trials,
                                    seed=args.seed)
        ok = ok and greedy.ok
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        print(report.summary())
        if args.trials:
            print(f"greedy cross-check: {args.trials} trials, "
                  f"{len(greedy.mismatches)} mismatches")
    print(f"certification {'PASS' if ok else 'FAIL'} "
          f"({report.seconds:.2f}s)", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_matroid(args) -> int:
    matroid = _load_matroid(args.matrix)
    subset = args.elements
    for e in subset:
        matroid.index_of(e)  # surface unknown labels as errors
    if args.query == "rank":
        target = subset if subset else matroid.elements
        print(matroid.rank_of(target))
    elif args.query == "indep":
        print("independent" if matroid.is_independent(subset) else "dependent")
    else:  # enum
        sets = matroid.independent_sets(args.cap)
        print(len(sets))
        for s in sets:
            print("{" + ",".join(sorted(s)) + "}")
    return EXIT_OK


def cmd_find_1sums(args) -> int:
    with open(args.matrix) as fh:
        mat = gf2.parse_matrix(fh.read())
    blocks = find_1sums(mat)
    print(len(blocks))
    for rows, cols in blocks:
        print(f"rows={','.join(map(str, rows)) or '-'} "
              f"cols={','.join(map(str, cols)) or '-'}")
    return EXIT_OK


def cmd_gbound(args) -> int:
    print(g_bound(args.n))
    return EXIT_OK


def cmd_rectcover(args) -> int:
    matroid = _load_matroid(args.matrix)
    rects, report = rectangle_cover(matroid, cap=args.cap)
    claim_ok, counterexample = validity_of_exchange_claim(matroid, cap=args.cap)
    coverage = (100.0 * report.covered / report.total) if report.total else 100.0
    print(f"rectangles={report.num_rectangles} bound={report.count_bound} "
          f"valid={report.valid} coverage={coverage:.0f}% "
          f"({report.covered}/{report.total}) exchange_claim={claim_ok}")
    return EXIT_OK if report.ok and claim_ok else EXIT_FAIL


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indpoly",
        description="Quadratic-size lifts for independence polytopes of "
                    "regular matroids, with exact certification.",
        epilog="JSON reports carry a schema_version field (currently 1) "
               "with elements, vertex/rank/nonnegativity check lists, "
               "counts and the overall verdict.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, cap_default=12):
        p.add_argument("--cap", type=int, default=cap_default,
                       help="enumeration cap on ground-set size")

    p = sub.add_parser("build", help="build the lift of a tree file and "
                                     "export it as an LP file")
    p.add_argument("tree")
    p.add_argument("-o", "--output", help="LP output path ('-' for stdout; "
                                          "default: tree path with .lp)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--inject-fault", action="store_true",
                   help="testing hook: perturb one coefficient")
    add_common(p, cap_default=20)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("certify", help="exactly certify a tree file's lift")
    p.add_argument("tree")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--inject-fault", action="store_true",
                   help="testing hook: perturb one coefficient")
    p.add_argument("--trials", type=int, default=0,
                   help="additional random-objective greedy cross-checks")
    p.add_argument("--seed", type=int, default=0)
    add_common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("matroid", help="query a matrix file's matroid")
    p.add_argument("matrix")
    p.add_argument("query", choices=("rank", "indep", "enum"))
    p.add_argument("elements", nargs="*")
    add_common(p, cap_default=20)
    p.set_defaults(func=cmd_matroid)

    p = sub.add_parser("find-1sums", help="block structure of a matrix's "
                                          "bipartite nonzero pattern")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_find_1sums)

    p = sub.add_parser("gbound", help="worst-case total leaf size over "
                                      "decomposition trees of n elements")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_gbound)

    p = sub.add_parser("rectcover", help="quadratic rectangle cover of a "
                                         "matrix file's matroid")
    p.add_argument("matrix")
    add_common(p, cap_default=8)
    p.set_defaults(func=cmd_rectcover)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cap", 1) <= 0:
        print("error: --cap must be positive", file=sys.stderr)
        return EXIT_FAIL
    try:
        return args.func(args)
    except (DecompError, MatroidError, VerifyError, OSError, ValueError) as exc:
        message = str(exc)
        print(f"error: {message}", file=sys.stderr)
        return EXIT_CAP if "exceeds cap" in message else EXIT_FAIL


def main_entry():  # console-script wrapper
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
