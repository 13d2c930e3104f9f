"""Command-line interface.

    setchroma urns --k 2 --nmax 3
    setchroma urns --grid 7 9
    setchroma graph --graph path.txt --k 2
    setchroma alpha --weights 1,2,1 --nmax 3
    setchroma mode --weights 1,4,6,4,1
    setchroma gain --probe K3 --edge 1,2 --k 2
    setchroma verify --max-n 5 --max-k 3 --seed 0

Every command prints tab-separated text by default, or one JSON object with
``--format json``. Counts above 2^53 are written as JSON strings.
"""

import argparse
import json
import logging
import os
import sys
import time

from . import chromafn, gaingraph, genfunc, verify
from .combinatorics import binomial_row
from .graph import SimpleGraph, named_graph, parse_graph

log = logging.getLogger("setchroma")

JSON_SAFE = 2**53


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _edge(text: str) -> tuple[int, int]:
    parts = _int_list(text)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected an edge 'u,v', got {text!r}")
    return parts[0], parts[1]


def load_graph(source: str) -> SimpleGraph:
    """A path to an edge-list file, or a built-in name such as K3 or P4."""
    if os.path.exists(source):
        with open(source, encoding="utf-8") as f:
            return parse_graph(f.read())
    return named_graph(source)


def _json_value(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x) if abs(x) > JSON_SAFE else x
    if isinstance(x, dict):
        return {k: _json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_value(v) for v in x]
    return str(x)


def emit(args, outputs: dict, rows: list[list]) -> None:
    """Write the result as JSON or as TSV rows."""
    if args.format == "json":
        report = {"command": args.command, "inputs": _inputs(args), "outputs": outputs}
        print(json.dumps(_json_value(report), sort_keys=True))
    else:
        for row in rows:
            print("\t".join(str(x) for x in row))


def _inputs(args) -> dict:
    skip = {"command", "format", "func", "verbose"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def cmd_urns(args) -> int:
    if args.grid is not None:
        k_max, n_max = args.grid
        grid = genfunc.urn_grid(k_max, n_max)
        rows = [["n\\k", *range(k_max + 1)]]
        rows += [[n, *row] for n, row in enumerate(grid)]
        emit(args, {"grid": grid}, rows)
        return 0
    if args.k is None or args.nmax is None:
        raise UsageError("urns needs --k and --nmax, or --grid K N")
    values = genfunc.urn_counts(args.k, args.nmax)
    emit(args, {"values": values}, [values])
    return 0


def cmd_graph(args) -> int:
    g = load_graph(args.graph)
    if args.blocks is not None:
        value = chromafn.partitioned_set_chromatic(g, args.blocks)
    else:
        if args.k is None:
            raise UsageError("graph needs --k (or --blocks)")
        value = chromafn.set_chromatic(g, args.k)
    emit(args, {"n": g.n, "edges": g.sorted_edges(), "value": value}, [[value]])
    return 0


def cmd_alpha(args) -> int:
    if args.graph is not None:
        g = load_graph(args.graph)
        value = chromafn.weighted_chromatic(g, args.weights)
        emit(args, {"n": g.n, "edges": g.sorted_edges(), "value": value}, [[value]])
        return 0
    n_max = args.nmax if args.nmax is not None else len(args.weights)
    values = genfunc.weighted_injective_counts(args.weights, n_max)
    emit(args, {"values": values}, [values])
    return 0


def cmd_mode(args) -> int:
    if args.weights is not None:
        weights = args.weights
    elif args.k is not None:
        weights = binomial_row(args.k)
    else:
        raise UsageError("mode needs --weights or --k")
    est = genfunc.darroch_mode_estimate(weights)
    coeffs = list(genfunc.product_linear_factors(weights))
    argmax = genfunc.argmax_indices(coeffs)
    contains = all(m in est.candidates for m in argmax)
    outputs = {
        "M": str(est.M),
        "candidates": list(est.candidates),
        "coefficients": coeffs,
        "argmax": argmax,
        "contains_argmax": contains,
    }
    rows = [
        ["M", est.M],
        ["candidates", *est.candidates],
        ["coefficients", *coeffs],
        ["argmax", *argmax],
        ["contains_argmax", str(contains).lower()],
    ]
    emit(args, outputs, rows)
    return 0


def cmd_gain(args) -> int:
    chosen = [x is not None for x in (args.gain, args.expand, args.probe)]
    if sum(chosen) != 1:
        raise UsageError("gain needs exactly one of --gain FILE, --expand GRAPH, --probe GRAPH")
    if args.probe is not None:
        if args.edge is None or args.k is None:
            raise UsageError("--probe needs --edge U,V and --k")
        g = load_graph(args.probe)
        rep = gaingraph.deletion_contraction_probe(g, args.edge, args.k)
        outputs = {"lhs": rep.lhs, "deleted": rep.deleted, "contracted": rep.contracted,
                   "rhs": rep.rhs, "holds": rep.holds}
        rows = [["lhs", rep.lhs], ["deleted", rep.deleted], ["contracted", rep.contracted],
                ["rhs", rep.rhs], ["holds", str(rep.holds).lower()]]
        emit(args, outputs, rows)
        return 0
    if args.expand is not None:
        if args.k is None:
            raise UsageError("--expand needs --k")
        phi = gaingraph.sk_expansion(load_graph(args.expand), args.k)
        if args.emit:
            sys.stdout.write(gaingraph.format_gain_graph(phi))
            return 0
    else:
        with open(args.gain, encoding="utf-8") as f:
            phi = gaingraph.parse_gain_graph(f.read())
        if args.k is not None and args.k != phi.k:
            raise UsageError(f"--k {args.k} does not match the file's k = {phi.k}")
    value = gaingraph.count_proper_set_colorings(phi)
    emit(args, {"n": phi.n, "k": phi.k, "edges": len(phi.edges), "value": value}, [[value]])
    return 0


def cmd_verify(args) -> int:
    results = verify.run_all(args.max_n, args.max_k, args.seed)
    ok = all(r.passed for r in results)
    outputs = {
        "passed": ok,
        "checks": [
            {"name": r.name, "checked": r.checked, "passed": r.passed,
             "mismatches": [[repr(m[0]), m[1], m[2]] for m in r.mismatches]}
            for r in results
        ],
    }
    rows = []
    for r in results:
        rows.append(["PASS" if r.passed else "FAIL", r.name, r.checked, len(r.mismatches)])
        for label, got, expected in r.mismatches[:10]:
            rows.append(["", repr(label), got, expected])
    rows.append(["ALL PASS" if ok else "FAILED"])
    emit(args, outputs, rows)
    return 0 if ok else 1


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="setchroma", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log timing to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=["tsv", "json"], default="tsv")
        p.set_defaults(func=func)
        return p

    p = add("urns", cmd_urns, "urn counts chi_n(k)")
    p.add_argument("--k", type=_nonneg)
    p.add_argument("--nmax", type=_nonneg)
    p.add_argument("--grid", type=_nonneg, nargs=2, metavar=("K", "N"),
                   help="table with rows n = 0..N and columns k = 0..K")

    p = add("graph", cmd_graph, "set-coloring count of a graph")
    p.add_argument("--graph", required=True, help="edge-list file or K<n>/P<n>/C<n>/E<n>")
    p.add_argument("--k", type=_nonneg)
    p.add_argument("--blocks", type=_int_list, help="block sizes s0,s1,... of a partitioned color set")

    p = add("alpha", cmd_alpha, "weighted counts for a weight sequence")
    p.add_argument("--weights", type=_int_list, required=True)
    p.add_argument("--nmax", type=_nonneg)
    p.add_argument("--graph")

    p = add("mode", cmd_mode, "largest-coefficient estimate for prod (1 + a_j t)")
    p.add_argument("--weights", type=_int_list)
    p.add_argument("--k", type=_nonneg, help="use the binomial row C(k, .) as weights")

    p = add("gain", cmd_gain, "permutation gain graphs")
    p.add_argument("--gain", help="gain-graph file")
    p.add_argument("--expand", metavar="GRAPH", help="count colorings of the S_k-expansion")
    p.add_argument("--emit", action="store_true", help="with --expand, print the expansion")
    p.add_argument("--probe", metavar="GRAPH", help="deletion-contraction probe")
    p.add_argument("--edge", type=_edge)
    p.add_argument("--k", type=_nonneg)

    p = add("verify", cmd_verify, "oracle cross-check sweeps")
    p.add_argument("--max-n", type=_nonneg, default=5)
    p.add_argument("--max-k", type=_nonneg, default=3)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    start = time.perf_counter()
    try:
        status = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"setchroma: error: {exc}", file=sys.stderr)
        return 2
    log.info("%s finished in %.3f s", args.command, time.perf_counter() - start)
    return status


if __name__ == "__main__":
    sys.exit(main())
