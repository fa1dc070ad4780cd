"""Command-line front end.

Every subcommand delegates to one library operation and writes deterministic
plain-text, JSON, DOT, or CSV to stdout (fixed sort orders everywhere, no
terminal colour, so NO_COLOR needs no special handling).  Exit codes:
0 = yes/success, 1 = no or domain failure, 2 = usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from .combinat import parse_dim_vector, subset_str
from .freeprod import (
    build_one_quiver,
    component_count,
    is_iss_smooth,
    iss_dim,
    one_quiver_euler_closed,
    orbit_count,
    orbit_representatives,
    parse_characters,
    rep2_census,
    simple_alpha_report,
    treelike_census,
)
from .localquiver import (
    degeneration_graph,
    enumerate_settings,
    graph_json_obj,
    local_quiver,
    setting_json_obj,
    smooth_point,
)
from .quiver import Quiver, support


def format_matrix(m: np.ndarray) -> str:
    if m.size == 0:
        return ""
    width = max(len(str(int(x))) for x in m.flat)
    return "\n".join(" ".join(str(int(x)).rjust(width) for x in row) for row in m)


def quiver_dot(q: Quiver, labels: list[str], name: str = "quiver") -> str:
    lines = [f"digraph {name} {{"]
    for i, label in enumerate(labels):
        lines.append(f'  v{i} [label="{label}"];')
    for i in range(q.v):
        for j in range(q.v):
            k = int(q.arrows[i, j])
            if k:
                lines.append(f'  v{i} -> v{j} [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_dot(g) -> str:
    lines = ["digraph degeneration {", "  rankdir=TB;", "  node [shape=box, style=filled];"]
    for i, s in enumerate(g.nodes):
        colour = "palegreen" if smooth_point(s) else "lightpink"
        lines.append(f'  n{i} [label="{s.id()}", fillcolor="{colour}"];')
    for i, j in g.edges:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _setting_text(s) -> str:
    qs = local_quiver(s)
    reduced = support(qs.quiver, qs.dims)
    out = [f"{s.id()}  sum_k={s.k_total}  smooth={'yes' if smooth_point(s) else 'no'}"]
    out.append("  dims: " + ",".join(str(d) for d in reduced.dims))
    matrix = format_matrix(reduced.quiver.arrows)
    out.extend("  " + row for row in matrix.split("\n") if matrix)
    return "\n".join(out)


def cmd_components(args) -> int:
    count = component_count(args.n, args.m)
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        if args.orbits:
            writer.writerow(["alpha"])
            for rep in orbit_representatives(args.n, args.m):
                writer.writerow([str(rep)])
        else:
            writer.writerow(["n", "m", "components"])
            writer.writerow([args.n, args.m, count])
        return 0
    print(count)
    if args.orbits:
        print(orbit_count(args.n, args.m))
        for rep in orbit_representatives(args.n, args.m):
            print(str(rep))
    return 0


def cmd_one_quiver(args) -> int:
    q = build_one_quiver(args.n)
    if args.format == "matrix":
        print(format_matrix(one_quiver_euler_closed(args.n)))
    elif args.format == "json":
        print(json.dumps(q.to_json_obj(), indent=2))
    else:
        labels = [subset_str(a) for a in range(q.v)]
        sys.stdout.write(quiver_dot(q, labels, name="one_quiver"))
    return 0


def cmd_graph(args) -> int:
    g = degeneration_graph(args.n, args.m)
    if args.format == "json":
        print(json.dumps(graph_json_obj(g), indent=2))
    elif args.format == "dot":
        sys.stdout.write(graph_dot(g))
    else:
        print(f"degeneration graph n={g.n} m={g.m}: {len(g.nodes)} nodes, {len(g.edges)} edges")
        for s in g.nodes:
            print(_setting_text(s))
        for i, j in g.edges:
            print(f"{g.nodes[i].id()} -> {g.nodes[j].id()}")
    return 0


def cmd_local(args) -> int:
    settings = enumerate_settings(args.n, args.m)
    if args.young:
        try:
            shape = tuple(sorted((int(x) for x in args.young.split(",")), reverse=True))
        except ValueError:
            raise ValueError(f"--young wants comma-separated row lengths, got {args.young!r}")
        if sum(shape) != args.n:
            raise ValueError(f"diagram {args.young!r} does not partition n={args.n}")
        settings = [s for s in settings if s.sizes == shape]
    if args.format == "json":
        print(json.dumps([setting_json_obj(s) for s in settings], indent=2))
    else:
        for s in settings:
            print(_setting_text(s))
        print(f"settings: {len(settings)}")
    return 0


def cmd_simple(args) -> int:
    alpha = parse_dim_vector(args.alpha)
    verdict, lines = simple_alpha_report(alpha)
    for line in lines:
        print(line)
    print(f"simple: {'yes' if verdict else 'no'}")
    return 0 if verdict else 1


def cmd_iss_dim(args) -> int:
    print(iss_dim(parse_dim_vector(args.alpha)))
    return 0


def cmd_smooth_component(args) -> int:
    alpha = parse_dim_vector(args.alpha)
    verdict = is_iss_smooth(alpha)
    mixed = sum(1 for p, q in alpha.pairs if p and q)
    print(f"alpha = {alpha}: {mixed} mixed pair(s) after flips (smooth needs <= 2)")
    print(f"smooth: {'yes' if verdict else 'no'}")
    return 0 if verdict else 1


def cmd_rep2(args) -> int:
    rows = rep2_census(args.n)
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["A", "B", "k", "rep_dim", "quot_dim", "singularities"])
        for r in rows:
            writer.writerow(
                [subset_str(r.a_mask), subset_str(r.b_mask), r.k, r.rep_dim, r.quot_dim, r.singularities]
            )
        return 0
    print("A\tB\tk\trep_dim\tquot_dim\tsingularities\tlocal_type")
    total = 0
    for r in rows:
        total += 1
        print(
            f"{subset_str(r.a_mask)}\t{subset_str(r.b_mask)}\t{r.k}\t{r.rep_dim}"
            f"\t{r.quot_dim}\t{r.singularities}\t{r.local_type or '-'}"
        )
    print(f"total components: {total}")
    return 0


def cmd_treelike(args) -> int:
    counts = treelike_census(args.n)
    for label, count in counts.items():
        print(f"type {label}: {count} instances")
    print(f"distinct types: {len(counts)}")
    return 0


def cmd_canon(args) -> int:
    chars = parse_characters(args.chars, args.n)
    canonical = chars.canonical()
    print(str(canonical))
    print(f"alpha: {canonical.dim_vector()}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="z2quiver",
        description="Exact computations for representation components of free products of order-2 groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("components", help="component and orbit census at level m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--orbits", action="store_true", help="also list orbit representatives")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("one-quiver", help="the quiver on the 2^n characters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["matrix", "dot", "json"], default="matrix")
    p.set_defaults(func=cmd_one_quiver)

    p = sub.add_parser("graph", help="degeneration graph of local settings")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("local", help="list local settings and their quivers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--young", help="restrict to one diagram, e.g. 3,3,3")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_local)

    p = sub.add_parser("simple", help="simplicity of a dimension vector (exit 0 = simple)")
    p.add_argument("--alpha", required=True, help="e.g. 2,1;2,1;2,1 or (4,0)*2;2,2;2,2")
    p.set_defaults(func=cmd_simple)

    p = sub.add_parser("iss-dim", help="dimension of the moduli of semisimples")
    p.add_argument("--alpha", required=True)
    p.set_defaults(func=cmd_iss_dim)

    p = sub.add_parser("smooth-component", help="smoothness of a component's moduli (exit 0 = smooth)")
    p.add_argument("--alpha", required=True)
    p.set_defaults(func=cmd_smooth_component)

    p = sub.add_parser("rep2", help="census of level-2 components")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=cmd_rep2)

    p = sub.add_parser("treelike", help="census of tree-like character subquivers")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_treelike)

    p = sub.add_parser("canon", help="chain normal form of a character sum")
    p.add_argument("--chars", required=True, help="e.g. '{1}+{2}' or '{}^2+{1,2,3}'")
    p.add_argument("--n", type=int, help="ground-set size (default: largest element)")
    p.set_defaults(func=cmd_canon)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
