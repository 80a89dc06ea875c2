"""Command line front end.

Subcommands: compute, profile, verify, sweep, hunt, construct.  Graphs
come in as graph6 lines or as an edge list (first nonblank line the
vertex count, then one "u v" pair per line); the format is sniffed from
the first token.  Exit codes: 0 fine, 1 usage or input trouble, 2 an
internal soundness violation (a proven bound failing, which means a bug
here, not new mathematics).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import check_bound, check_witness_edge_bound, theorem_registry
from .cliques import strong_chromatic_index, strong_clique_number
from .constructions import FAMILIES, make_construction
from .cycles import cycle_profile
from .graph import Graph, build_graph, is_bipartite, max_degree, ore_degree
from .graph6 import format_graph6, parse_graph6
from .search import HuntConfig, hunt, serialize_record, sweep


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 is reserved for soundness here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def parse_input_graphs(text: str) -> list[Graph]:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("no graphs in input")
    first = lines[0].split()
    if len(first) == 1 and first[0].lstrip("+").isdigit():
        n = int(first[0])
        pairs = []
        for line in lines[1:]:
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"edge list line {line!r} is not 'u v'")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(f"edge list line {line!r} is not 'u v'") from None
            pairs.append((u, v))
        return [build_graph(n, pairs)]
    return [parse_graph6(line) for line in lines]


def _single_graph(path: str) -> Graph:
    graphs = parse_input_graphs(_read_text(path))
    if len(graphs) != 1:
        raise ValueError(
            f"expected a single graph, found {len(graphs)}; use the sweep command for batches"
        )
    return graphs[0]


def _witness_text(g: Graph, edge_ids) -> str:
    return " ".join(f"{u}-{v}" for u, v in (g.edges[i] for i in sorted(edge_ids)))


def cmd_compute(args) -> int:
    g = _single_graph(args.graph)
    omega, witness = strong_clique_number(g)
    print(f"omega2' = {omega}")
    if witness.edge_ids:
        print(f"witness: {_witness_text(g, witness.edge_ids)}")
    if args.chi:
        try:
            chi, _ = strong_chromatic_index(g, args.chi_budget)
        except ValueError as exc:
            print(f"chi2' skipped: {exc}")
        else:
            print(f"chi2' = {chi}")
    return 0


def cmd_profile(args) -> int:
    g = _single_graph(args.graph)
    profile = cycle_profile(g, k_max=args.k_max)
    print(f"n = {g.n}, m = {g.m}, delta = {max_degree(g)}")
    if g.m:
        print(f"sigma = {ore_degree(g)}")
    print(f"bipartite: {'yes' if is_bipartite(g) else 'no'}")
    print(f"girth = {profile.girth if profile.girth is not None else 'acyclic'}")
    lengths = profile.cycle_lengths()
    window = f"3..{profile.max_len}"
    print(f"cycle lengths present ({window}): {' '.join(map(str, lengths)) if lengths else 'none'}")
    print(f"longest path order (window {profile.max_len + 1}): {profile.longest_path_order()}")
    return 0


def cmd_verify(args) -> int:
    g = _single_graph(args.graph)
    profile = cycle_profile(g, k_max=args.k_max)
    omega, witness = strong_clique_number(g)
    chi = None
    if args.chi:
        try:
            chi, _ = strong_chromatic_index(g, args.chi_budget)
        except ValueError as exc:
            print(f"chi2' skipped: {exc}")
    print(f"omega2' = {omega}")
    if chi is not None:
        print(f"chi2' = {chi}")
    bad_theorem = False
    for inst in theorem_registry(args.k_max):
        value = omega if inst.spec.target == "omega2" else chi
        if value is None:
            continue
        c = check_bound(g, inst, value, profile=profile, k_max=args.k_max)
        if not c.applicable:
            continue
        flags = "holds" if c.holds else "VIOLATED"
        if c.tight:
            flags += ", tight"
        print(f"{inst.label}: {flags}, {value} <= {c.bound_value}")
        if not c.holds:
            if inst.spec.kind == "theorem":
                bad_theorem = True
            else:
                print(f"CANDIDATE COUNTEREXAMPLE for {inst.label}: {format_graph6(g)}")
    l8 = check_witness_edge_bound(g, witness.edge_ids)
    if l8.applicable:
        flags = "holds" if l8.holds else "VIOLATED"
        if l8.tight:
            flags += ", tight"
        print(f"L8: {flags}, {l8.value} <= {l8.bound_value}")
        if not l8.holds:
            bad_theorem = True
    if bad_theorem:
        print("soundness violation: a proven bound failed; this is a bug", file=sys.stderr)
        return 2
    return 0


def cmd_sweep(args) -> int:
    graphs = parse_input_graphs(_read_text(args.input))
    out = sys.stdout if args.out == "-" else open(args.out, "w", encoding="ascii")
    try:
        report = sweep(
            graphs,
            k_max=args.k_max,
            include_chi=args.chi,
            chi_budget=args.chi_budget,
            tight_cap=args.tight_cap,
            workers=args.workers,
            record_sink=lambda rec: print(serialize_record(rec), file=out),
        )
        summary = {"summary": report.as_dict()}
        print(json.dumps(summary, sort_keys=True, separators=(",", ":")), file=out)
    finally:
        if out is not sys.stdout:
            out.close()
    applicable = sum(p["applicable"] for p in report.per_spec.values())
    print(
        f"swept {report.graphs} graphs, {applicable} applicable checks, "
        f"{len(report.theorem_violations)} theorem violations, "
        f"{len(report.conjecture_counterexamples)} conjecture counterexamples",
        file=sys.stderr,
    )
    if report.theorem_violations:
        print("soundness violation: proven bounds failed; this is a bug", file=sys.stderr)
        return 2
    return 0


def _parse_params(pairs: list[str]) -> dict[str, int]:
    params = {}
    for pair in pairs:
        if "=" not in pair:
            raise ValueError(f"parameter {pair!r} is not key=value")
        key, _, raw = pair.partition("=")
        try:
            params[key.strip()] = int(raw)
        except ValueError:
            raise ValueError(f"parameter {pair!r} needs an integer value") from None
    return params


def _parse_start(token: str) -> Graph:
    if token.startswith("@"):
        graphs = parse_input_graphs(_read_text(token[1:]))
        if len(graphs) != 1:
            raise ValueError("start file must hold exactly one graph")
        return graphs[0]
    if ":" in token:
        family, _, rest = token.partition(":")
        params = _parse_params(rest.split(",")) if rest else {}
        g, _ = make_construction(family, params)
        return g
    return parse_graph6(token)


def cmd_hunt(args) -> int:
    initial = _parse_start(args.start) if args.start else None
    forbidden = None
    if args.forbid:
        forbidden = tuple(int(x) for x in args.forbid.split(","))
    config = HuntConfig(
        target=args.target,
        k=args.k,
        n=args.n,
        delta_cap=args.delta_cap,
        seed=args.seed,
        max_steps=args.max_steps,
        restarts=args.restarts,
        sideways_limit=args.sideways,
        bipartite=args.bipartite,
        forbidden_cycles=forbidden,
        initial=initial,
    )
    result = hunt(config)
    print(json.dumps(result.as_dict(), sort_keys=True, separators=(",", ":")))
    if result.gap > 0:
        print(
            f"COUNTEREXAMPLE CANDIDATE: gap {result.gap} for {result.target_label} "
            f"at {result.best_graph6}",
            file=sys.stderr,
        )
    return 0


def cmd_construct(args) -> int:
    g, spec = make_construction(args.family, _parse_params(args.params))
    print(format_graph6(g))
    print(
        json.dumps(
            {
                "family": spec.family,
                "parameters": spec.parameters,
                "expected_strong_clique": spec.expected_strong_clique,
                "expected_max_degree": spec.expected_max_degree,
                "n": g.n,
                "m": g.m,
            },
            sort_keys=True,
            separators=(",", ":"),
        )
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="strongclique",
        description="Exact strong clique computations with forbidden cycle lengths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_arg(p):
        p.add_argument("graph", help="input file ('-' for stdin): graph6 or edge list")

    p = sub.add_parser("compute", help="strong clique number (and optionally chi) of one graph")
    add_graph_arg(p)
    p.add_argument("--chi", action="store_true", help="also compute the strong chromatic index")
    p.add_argument("--chi-budget", type=int, default=24, help="edge budget for chi (default 24)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("profile", help="cycle/path census of one graph")
    add_graph_arg(p)
    p.add_argument("--k-max", type=int, default=5, help="parameter window (default 5)")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("verify", help="evaluate every applicable bound on one graph")
    add_graph_arg(p)
    p.add_argument("--k-max", type=int, default=5)
    p.add_argument("--chi", action="store_true", help="include chi-target conjectures")
    p.add_argument("--chi-budget", type=int, default=24)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="verify bounds over a batch of graphs, JSONL out")
    p.add_argument("input", help="input file ('-' for stdin)")
    p.add_argument("--k-max", type=int, default=5)
    p.add_argument("--chi", action="store_true")
    p.add_argument("--chi-budget", type=int, default=24)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--tight-cap", type=int, default=100, help="tight examples kept per entry")
    p.add_argument("--out", default="-", help="JSONL destination (default stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("hunt", help="seeded randomized search for bound violations")
    p.add_argument("--target", default="CONJ4", help="registry id, e.g. CONJ4 or CONJ5")
    p.add_argument("--k", type=int, default=2, help="parameter for parametrized targets")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--delta-cap", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-steps", type=int, default=1000, help="per restart")
    p.add_argument("--restarts", type=int, default=4)
    p.add_argument("--sideways", type=int, default=20)
    p.add_argument(
        "--bipartite",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="force the bipartite constraint on or off (default: from the target)",
    )
    p.add_argument("--forbid", help="comma list of forbidden cycle lengths (default: from target)")
    p.add_argument(
        "--start",
        help="initial state: graph6, family:key=val,... or @file (default: random)",
    )
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("construct", help="emit an extremal family member")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*", help="key=value integers, e.g. q=3 delta=4")
    p.set_defaults(func=cmd_construct)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal soundness violation: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
