"""Command-line front end.

Subcommands: verify (mtt|pft|main|rank2|iota), lie (dim|basis|closure),
conjectures, sdet (eval|symbolic|coeff-graph), enumerate
(trees|3trees|4graphs).  Reports are emitted as text, JSON or CSV.
Exit codes: 0 all hard assertions pass, 1 verification failure, 2 bad
usage, 3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from fractions import Fraction
from itertools import permutations as iter_permutations

from . import graphs, sdet as sdet_mod, verify as verify_mod, wedge_rep
from .exactmath import ExactMatrix, rational
from .group_algebra import GroupAlgebraElement
from .lie_generators import all_kappas, lie_closure
from .perm import Permutation

RESOURCE_ERRORS = (graphs.ResourceLimitError, sdet_mod.ResourceLimitError,
                   wedge_rep.ResourceLimitError)


class WeightConflictError(ValueError):
    """Two entries of a weight file disagree after symmetry closure."""


def load_weights(path: str):
    """Weight tables from JSON with symmetry closure applied.

    Schema: {"pairs": [[i, j, "w"]], "triples": [[i, j, k, "w"]],
    "quads": [[i, j, k, l, "w1", "w2"]]}.  Pair weights are symmetric;
    triple weights change sign under odd index permutations and are stored
    on ascending triples; quad weights are stored per ascending 4-subset
    as the pair (w1, w2) for the two generator variants.
    """
    with open(path) as handle:
        raw = json.load(handle)
    pairs = {}
    for i, j, w in raw.get("pairs", ()):
        key = tuple(sorted((i, j)))
        value = rational(w)
        if key in pairs and pairs[key] != value:
            raise WeightConflictError("pair %r given twice" % (key,))
        pairs[key] = value
    triples = {}
    for i, j, k, w in raw.get("triples", ()):
        key = tuple(sorted((i, j, k)))
        sign = Permutation(_relabel((i, j, k))).sign()
        value = rational(w) * sign
        if key in triples and triples[key] != value:
            raise WeightConflictError("triple %r given inconsistently"
                                      % (key,))
        triples[key] = value
    quads = {}
    for i, j, k, l, w1, w2 in raw.get("quads", ()):
        key = tuple(sorted((i, j, k, l)))
        if (i, j, k, l) != key:
            raise WeightConflictError(
                "quad %r must be given in ascending order" % ((i, j, k, l),))
        value = (rational(w1), rational(w2))
        if key in quads and quads[key] != value:
            raise WeightConflictError("quad %r given twice" % (key,))
        quads[key] = value
    return {"pairs": pairs, "triples": triples, "quads": quads}


def _relabel(indices):
    """Images of the permutation sorting 1..len onto the given order."""
    order = sorted(range(len(indices)), key=lambda p: indices[p])
    images = [0] * len(indices)
    for rank, pos in enumerate(order):
        images[pos] = rank + 1
    return images


def _quad_weight_table(n, quads):
    out = {}
    for key, (w1, w2) in quads.items():
        out[(key, "T1")] = w1
        out[(key, "T2")] = w2
    # missing quads default to zero weight
    from itertools import combinations
    for q in combinations(range(1, n + 1), 4):
        out.setdefault((q, "T1"), Fraction(0))
        out.setdefault((q, "T2"), Fraction(0))
    return out


def _emit(records, fmt, out):
    if fmt == "json":
        text = json.dumps(records, indent=2, default=str)
    elif fmt == "csv":
        buf = io.StringIO()
        keys = sorted({k for r in records for k in r})
        writer = csv.DictWriter(buf, fieldnames=keys)
        writer.writeheader()
        for r in records:
            writer.writerow({k: r.get(k, "") for k in keys})
        text = buf.getvalue().rstrip("\n")
    else:
        lines = []
        for r in records:
            lines.append(" ".join("%s=%s" % (k, r[k]) for k in sorted(r)))
        text = "\n".join(lines)
    if out:
        with open(out, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _report_records(reports):
    return [r.to_json_obj() for r in reports]


# -- verify --------------------------------------------------------------


def _run_verify(args) -> int:
    reports = []
    seeds = [args.seed + t for t in range(args.trials)]
    tables = load_weights(args.weights) if args.weights else None
    for seed in seeds:
        if args.target == "mtt":
            weights = tables["pairs"] if tables else None
            reports.append(verify_mod.verify_mtt(
                args.n, weights=weights, seed=seed,
                symbolic=args.symbolic))
        elif args.target == "pft":
            weights = tables["triples"] if tables else None
            reports.append(verify_mod.verify_pft(
                args.n, weights=weights, seed=seed,
                symbolic=args.symbolic))
        elif args.target == "main":
            weights = (_quad_weight_table(args.n, tables["quads"])
                       if tables else None)
            reports.append(verify_mod.verify_main(
                args.n, weights=weights, seed=seed))
        elif args.target == "iota":
            reports.append(verify_mod.verify_iota(
                args.n, trials=3, seed=seed))
        elif args.target == "rank2":
            for quad in iter_permutations(range(1, args.n + 1), 4):
                reports.append(verify_mod.verify_rank2(*quad, n=args.n))
            break
        if tables:
            break
    for r in reports:
        # rank2 reports carry full matrices; keep the output light
        r.lhs, r.rhs = str(r.lhs)[:200], str(r.rhs)[:200]
    _emit(_report_records(reports), args.format, args.out)
    return 0 if all(r.status != "FAIL" for r in reports) else 1


# -- lie -----------------------------------------------------------------


def _run_lie(args) -> int:
    space = wedge_rep.lie_space(args.n, max_n=_bound(args, 6))
    if args.target == "dim":
        print(space.dim)
        return 0
    if args.target == "basis":
        records = [json.loads(b.to_json()) for b in space.basis]
        _emit(records, args.format, args.out)
        return 0
    closure = lie_closure(all_kappas(args.n), args.n,
                          max_n=_bound(args, 6))
    records = [json.loads(b.to_json()) for b in closure]
    _emit(records, args.format, args.out)
    return 0


def _run_conjectures(args) -> int:
    report = verify_mod.conjecture_report(args.n, results_dir=args.out_dir)
    _emit(_report_records([report]), args.format, args.out)
    return 0 if report.status != "FAIL" else 1


# -- sdet ----------------------------------------------------------------


def _read_matrix(text) -> ExactMatrix:
    data = json.loads(text)
    return ExactMatrix([[rational(v) for v in row] for row in data])


def _run_sdet(args) -> int:
    if args.target == "coeff-graph":
        edges = json.loads(args.edges)
        result = sdet_mod.monomial_coefficient([tuple(e) for e in edges])
        _emit([{"coefficient": result.coefficient,
                "cycle_count": result.cycle_count,
                "cycles": [list(c) for c in result.cycles]}],
              args.format, args.out)
        return 0
    A = _read_matrix(args.matrix_a)
    B = _read_matrix(args.matrix_b)
    if args.target == "symbolic":
        value = sdet_mod.sdet_via_coeff(A, B)
    else:
        value = sdet_mod.sdet(A, B)
    _emit([{"sdet": str(value)}], args.format, args.out)
    return 0


# -- enumerate -----------------------------------------------------------


def _run_enumerate(args) -> int:
    if args.target == "trees":
        records = [{"n": t.n, "edges": [list(e) for e in t.edges]}
                   for t in graphs.enumerate_trees(args.n)]
    elif args.target == "3trees":
        bound = 10 if args.allow_heavy else graphs.THREE_TREE_EDGE_BOUND
        records = [{"n": g.n,
                    "triangles": [list(t) for t in g.triangles],
                    "delta": graphs.delta_sign(g)}
                   for g in graphs.enumerate_three_trees(
                       args.m, edge_bound=bound)]
    else:
        records = [{"n": g.n,
                    "edges": [[list(q), v] for q, v in g.edges]}
                   for g in graphs.enumerate_four_graphs(args.r, args.n)]
    _emit(records, args.format, args.out)
    return 0


def _bound(args, default: int) -> int:
    if getattr(args, "allow_heavy", False):
        sys.stderr.write("warning: resource bounds lifted\n")
        return 99
    return default


# -- argument parsing ----------------------------------------------------


def _add_common(parser):
    parser.add_argument("--format", choices=("text", "json", "csv"),
                        default="text")
    parser.add_argument("--out", default=None)
    parser.add_argument("--allow-heavy", action="store_true")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker pool size (runs are deterministic "
                             "regardless)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lie-elements",
        description="Exact verification of Lie-element identities in the "
                    "group algebra of the symmetric group.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verifier")
    p.add_argument("target", choices=("mtt", "pft", "main", "rank2", "iota"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--weights", default=None)
    p.add_argument("--symbolic", action="store_true")
    _add_common(p)
    p.set_defaults(func=_run_verify)

    p = sub.add_parser("lie", help="Lie space / closure computations")
    p.add_argument("target", choices=("dim", "basis", "closure"))
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_run_lie)

    p = sub.add_parser("conjectures", help="dimension reports")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out-dir", default=None,
                   help="directory for golden report persistence")
    _add_common(p)
    p.set_defaults(func=_run_conjectures)

    p = sub.add_parser("sdet", help="shuffle determinant computations")
    p.add_argument("target", choices=("eval", "symbolic", "coeff-graph"))
    p.add_argument("--matrix-a", default=None,
                   help="JSON array of rational-string rows")
    p.add_argument("--matrix-b", default=None)
    p.add_argument("--edges", default=None,
                   help="JSON list of directed edges for coeff-graph")
    _add_common(p)
    p.set_defaults(func=_run_sdet)

    p = sub.add_parser("enumerate", help="graph enumerations")
    p.add_argument("target", choices=("trees", "3trees", "4graphs"))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=_run_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate(args, parser)
        return args.func(args)
    except RESOURCE_ERRORS as exc:
        sys.stderr.write("resource bound exceeded: %s\n" % exc)
        return 3
    except (WeightConflictError, json.JSONDecodeError, OSError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


def _validate(args, parser):
    if args.command == "sdet":
        if args.target == "coeff-graph" and not args.edges:
            parser.error("coeff-graph needs --edges")
        if args.target != "coeff-graph" and not (args.matrix_a
                                                 and args.matrix_b):
            parser.error("sdet %s needs --matrix-a and --matrix-b"
                         % args.target)
    if args.command == "enumerate":
        if args.target == "trees" and args.n is None:
            parser.error("enumerate trees needs --n")
        if args.target == "3trees" and args.m is None:
            parser.error("enumerate 3trees needs --m")
        if args.target == "4graphs" and (args.n is None or args.r is None):
            parser.error("enumerate 4graphs needs --n and --r")


if __name__ == "__main__":
    sys.exit(main())
