"""Command-line front end.

Exit status: 0 on success, 1 on domain/precondition/capability errors,
2 on parse and usage errors. Rational options are written "p/q" or as
integers; floats are rejected. All rationals in the output are printed
exactly.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from .errors import CapabilityError, ParseError
from .graph import (
    BipartiteGraph,
    check_expansion,
    expansion_profile,
    find_bounds_violation,
    find_partition_violation,
)
from .instances import (
    FORMATS,
    GenSpec,
    figure1,
    parse_graph,
    random_right_regular,
    serialize_graph,
)
from .mindist import (
    PruningParams,
    distance_lower_bound,
    min_distance_kernel,
    min_distance_pruned,
    min_distance_subset,
)

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def rational(text: str) -> Fraction:
    """Parse "p/q" or an integer string; anything else (floats included) is
    a usage error."""
    if not _RATIONAL_RE.match(text):
        raise argparse.ArgumentTypeError(
            f"expected an exact rational 'p/q' or integer, got {text!r} "
            "(floats are rejected)"
        )
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise argparse.ArgumentTypeError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def load_graph(source: str, fmt: str) -> BipartiteGraph:
    if source == "figure1":
        return figure1()
    return parse_graph(Path(source).read_text(), fmt)


def _print_record(record: dict) -> None:
    print(json.dumps(record, sort_keys=True))


def _witness_lines(result, m: int) -> list[str]:
    rec = result.to_record(m)
    lines = [f"method: {rec['method']}"]
    if rec["threshold"] is not None:
        lines.append(f"threshold: {rec['threshold']}")
    lines.append(f"distance: {rec['distance']}")
    if rec["witness"] is not None:
        lines.append("witness (indices): " + " ".join(map(str, rec["witness"]["indices"])))
        lines.append("witness (labels): " + " ".join(map(str, rec["witness"]["labels"])))
    lines.append(f"examined: {rec['examined']}")
    return lines


def cmd_mindist(args) -> int:
    graph = load_graph(args.graph, args.format)
    if args.method == "kernel":
        result = min_distance_kernel(graph.biadjacency())
    elif args.method == "subset":
        result = min_distance_subset(graph)
    else:
        if args.gamma is None or args.epsilon is None:
            args.parser.error("--method pruned requires --gamma and --epsilon")
        params = PruningParams.certify(graph, args.gamma, args.epsilon)
        result = min_distance_pruned(graph, params)
    if args.json:
        _print_record(result.to_record(graph.m))
    else:
        for line in _witness_lines(result, graph.m):
            print(line)
    return 0


def cmd_verify(args) -> int:
    graph = load_graph(args.graph, args.format)
    cert = check_expansion(graph, args.gamma, args.alpha)
    if args.json:
        _print_record(cert.to_record())
        return 0
    print("verified" if cert.verified else "not verified")
    print(f"graph: m={graph.m} n={graph.n} d={graph.d}")
    print(f"gamma: {cert.gamma}  alpha: {cert.alpha}")
    if cert.violation is not None:
        v = cert.violation.to_record(graph.m)
        print(
            "violation: subset "
            + " ".join(map(str, v["indices"]))
            + f" (labels {' '.join(map(str, v['labels']))})"
            + f" has {v['neighbors']} neighbors, needs at least {v['required']}"
        )
    return 0


def cmd_profile(args) -> int:
    graph = load_graph(args.graph, args.format)
    if args.max_size is not None:
        s_max = args.max_size
    elif args.gamma is not None:
        s_max = min(graph.n, int(args.gamma * graph.n))
    else:
        s_max = graph.n
    profile = expansion_profile(graph, s_max)
    best = profile.best_alpha(args.gamma) if args.gamma is not None else None
    if args.json:
        record = profile.to_record()
        record["gamma"] = None if args.gamma is None else str(args.gamma)
        record["best_alpha"] = None if best is None else str(best)
        _print_record(record)
        return 0
    for size in range(1, profile.s_max + 1):
        print(f"min_neighbors[{size}] = {profile.min_at(size)}")
    if args.gamma is not None:
        print(f"best_alpha({args.gamma}) = {best}")
    return 0


def cmd_bound(args) -> int:
    value = distance_lower_bound(args.gamma, args.epsilon, args.n)
    if args.json:
        _print_record(
            {
                "gamma": str(args.gamma),
                "epsilon": str(args.epsilon),
                "n": args.n,
                "bound": str(value),
            }
        )
    else:
        print(value)
    return 0


def cmd_gen(args) -> int:
    spec = GenSpec(m=args.m, n=args.n, d=args.d, seed=args.seed)
    graph = random_right_regular(spec)
    sys.stdout.write(serialize_graph(graph, args.format))
    return 0


def cmd_lemmas(args) -> int:
    graph = load_graph(args.graph, args.format)
    alpha = 1 - args.epsilon
    cert = check_expansion(graph, args.gamma, alpha)
    if not cert.verified:
        v = cert.violation.to_record(graph.m)
        print(
            f"error: graph is not a (gamma={args.gamma}, alpha={alpha}) expander: "
            f"subset {' '.join(map(str, v['indices']))} "
            f"(labels {' '.join(map(str, v['labels']))}) has {v['neighbors']} "
            f"neighbors, needs at least {v['required']}",
            file=sys.stderr,
        )
        return 1
    bounds = find_bounds_violation(graph, args.gamma, args.epsilon)
    partition = find_partition_violation(graph)
    if args.json:
        _print_record(
            {
                "certificate": cert.to_record(),
                "bounds": bounds.to_record(graph.m),
                "partition": partition.to_record(),
            }
        )
    else:
        print(f"certificate: verified (gamma={cert.gamma}, alpha={cert.alpha})")
        if bounds.violation is None:
            print(
                f"odd-neighborhood bounds: all hold "
                f"({bounds.subsets_checked} subsets up to size {bounds.size_cap})"
            )
        else:
            subset, lower, odd, nbhd = bounds.violation
            print(
                f"odd-neighborhood bounds: VIOLATED by subset "
                f"{' '.join(map(str, subset.indices))}: "
                f"{lower} <= {odd} <= {nbhd} fails"
            )
        if partition.violation is None:
            print(
                f"partition property: all hold ({partition.empty_odd_found} "
                f"empty-odd subsets, {partition.partitions_checked} bipartitions)"
            )
        else:
            subset, part_a, odd_a, odd_b = partition.violation
            print(
                f"partition property: VIOLATED by subset "
                f"{' '.join(map(str, subset.indices))} split at "
                f"{' '.join(map(str, part_a.indices))}"
            )
    if bounds.violation is not None or partition.violation is not None:
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expandercodes",
        description=(
            "Expander codes from bipartite graphs: exact minimum distance, "
            "expansion certificates, and exhaustive structural checks."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_args(p):
        p.add_argument(
            "graph",
            help="path to a graph file, or 'figure1' for the built-in demo instance",
        )
        p.add_argument("--format", choices=FORMATS, default="edge-list")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("mindist", help="exact minimum distance of the graph's code")
    add_graph_args(p)
    p.add_argument("--method", choices=("subset", "kernel", "pruned"), default="subset")
    p.add_argument("--gamma", type=rational, help="expansion fraction (pruned method)")
    p.add_argument("--epsilon", type=rational, help="expansion slack (pruned method)")
    p.set_defaults(func=cmd_mindist, parser=p)

    p = sub.add_parser("verify", help="certify the expansion inequality exhaustively")
    add_graph_args(p)
    p.add_argument("--gamma", type=rational, required=True)
    p.add_argument("--alpha", type=rational, required=True)
    p.set_defaults(func=cmd_verify, parser=p)

    p = sub.add_parser("profile", help="exact min |N(S)| per subset size")
    add_graph_args(p)
    p.add_argument("--max-size", type=int, help="largest subset size to profile")
    p.add_argument("--gamma", type=rational, help="also report the best alpha at gamma")
    p.set_defaults(func=cmd_profile, parser=p)

    p = sub.add_parser("bound", help="certified distance lower bound 2(1-eps)*gamma*n")
    p.add_argument("--gamma", type=rational, required=True)
    p.add_argument("--epsilon", type=rational, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bound, parser=p)

    p = sub.add_parser("gen", help="seeded random right-regular graph to stdout")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="edge-list")
    p.set_defaults(func=cmd_gen, parser=p)

    p = sub.add_parser(
        "lemmas",
        help="exhaustively check the odd-neighborhood bounds and the partition property",
    )
    add_graph_args(p)
    p.add_argument("--gamma", type=rational, required=True)
    p.add_argument("--epsilon", type=rational, required=True)
    p.set_defaults(func=cmd_lemmas, parser=p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError, TypeError, CapabilityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
