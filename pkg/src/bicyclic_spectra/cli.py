"""Command-line entry points for the verification campaigns.

Subcommands mirror the campaign API: `tables`, `extremal`, `kelmans`,
`theorem41`, `enumerate`, `spectral`.  Reports are printed as JSON (optionally
written to files, with CSV alongside); the exit code is 0 exactly when every
asserted case passed.  Thread count is taken from BICYCLIC_SPECTRA_THREADS.
"""

from __future__ import annotations

import argparse
import json
import sys

from .enumeration import canonical_form, enumerate_bicyclic, enumerate_with_max_degree
from .graphs import Graph, GraphError, graph6_decode, graph6_encode, make_infinity, make_theta
from .graphs import graph_g1, graph_g2, graph_g3, graph_g4
from .spectral import build_matrix, full_spectrum, spectral_radius
from .verify import VerificationReport, run_table, verify_extremal, verify_kelmans, verify_theorem41
from .weights import parse_weight


def _parse_range(text: str) -> list[int]:
    """'6..9' or '7' -> list of integers."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise argparse.ArgumentTypeError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _parse_weights(text: str):
    return [parse_weight(tok) for tok in text.split(",") if tok.strip()]


def parse_graph_argument(text: str) -> Graph:
    """Named graphs ('G1:10', 'B:3,1,3', 'P:2,1,2') or a raw graph6 string."""
    head, _, rest = text.partition(":")
    named = {"G1": graph_g1, "G2": graph_g2, "G3": graph_g3, "G4": graph_g4}
    if head in named:
        return named[head](int(rest))
    if head in ("B", "infinity"):
        p, l, q = (int(x) for x in rest.split(","))
        return make_infinity(p, l, q)
    if head in ("P", "theta"):
        p, l, q = (int(x) for x in rest.split(","))
        return make_theta(p, l, q)
    try:
        return graph6_decode(text)
    except GraphError as exc:
        raise argparse.ArgumentTypeError(
            f"not a named graph or graph6 string: {text!r} ({exc})") from exc


def _emit(report: VerificationReport, args) -> int:
    payload = report.to_json()
    if args.json_out:
        with open(args.json_out, "w") as fh:
            fh.write(payload + "\n")
    if args.csv_out:
        with open(args.csv_out, "w") as fh:
            fh.write(report.to_csv())
    print(payload)
    return 0 if report.ok else 1


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="bicyclic-spectra",
                                 description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    def add_outputs(p):
        p.add_argument("--json", dest="json_out", default=None, help="write JSON report here")
        p.add_argument("--csv", dest="csv_out", default=None, help="write CSV report here")

    p_tables = sub.add_parser("tables", help="recompute a published table")
    p_tables.add_argument("table", choices=["appendix_n6", "appendix_n7", "extended_table1"])
    add_outputs(p_tables)

    p_ext = sub.add_parser("extremal", help="extremal-graph campaigns")
    p_ext.add_argument("--n", required=True, type=_parse_range, help="order range A..B")
    p_ext.add_argument("--f", required=True, type=_parse_weights,
                       help="comma-separated weight specs, e.g. zagreb1,forgotten")
    p_ext.add_argument("--rank", choices=["1", "2"], default="1")
    p_ext.add_argument("--mode", choices=["exhaustive", "candidate"], default="exhaustive")
    add_outputs(p_ext)

    p_kel = sub.add_parser("kelmans", help="randomized monotonicity campaign")
    p_kel.add_argument("--samples", type=int, required=True)
    p_kel.add_argument("--seed", type=int, required=True)
    p_kel.add_argument("--f", required=True, type=_parse_weights)
    p_kel.add_argument("--n", type=_parse_range, default=list(range(4, 9)))
    add_outputs(p_kel)

    p_t41 = sub.add_parser("theorem41", help="extended-index inequality chain")
    p_t41.add_argument("--n", required=True, type=_parse_range)
    add_outputs(p_t41)

    p_enum = sub.add_parser("enumerate", help="bicyclic classes at one order")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--max-degree", type=int, default=None)
    p_enum.add_argument("--method", choices=["constructive", "edge_subset"],
                        default="constructive")
    p_enum.add_argument("--graph6", action="store_true",
                        help="stream one graph6 line per class before the summary")

    p_spec = sub.add_parser("spectral", help="spectral radius of A_f(G)")
    p_spec.add_argument("--graph", type=parse_graph_argument, required=True)
    p_spec.add_argument("--f", required=True)
    p_spec.add_argument("--full-spectrum", action="store_true")

    args = ap.parse_args(argv)

    if args.command == "tables":
        return _emit(run_table(args.table), args)
    if args.command == "extremal":
        rank = "first" if args.rank == "1" else "second"
        return _emit(verify_extremal(args.n, args.f, rank=rank, mode=args.mode), args)
    if args.command == "kelmans":
        return _emit(verify_kelmans(args.samples, args.n, args.f, rng_seed=args.seed), args)
    if args.command == "theorem41":
        return _emit(verify_theorem41(args.n), args)
    if args.command == "enumerate":
        if args.max_degree is not None:
            rep = enumerate_with_max_degree(args.n, args.max_degree, args.method)
        else:
            rep = enumerate_bicyclic(args.n, args.method)
        if args.graph6:
            for g in rep.graphs:
                print(graph6_encode(g))
        print(json.dumps({"n": rep.n, "method": rep.method, "count": rep.count}))
        return 0
    if args.command == "spectral":
        f = parse_weight(args.f)
        m = build_matrix(args.graph, f)
        res = spectral_radius(m)
        payload = {
            "graph6": graph6_encode(args.graph),
            "n": args.graph.n,
            "m": args.graph.m,
            "weight": f.label(),
            "rho": res.rho,
            "residual": res.residual,
            "perron": [float(x) for x in res.perron],
            "certificate": canonical_form(args.graph).hex() if args.graph.n <= 16 else None,
        }
        if args.full_spectrum:
            payload["spectrum"] = [float(x) for x in full_spectrum(m)]
        print(json.dumps(payload, indent=2))
        return 0
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
