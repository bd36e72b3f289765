"""Command-line interface.

Subcommands: eval, reduce, solve, hamilton, verify-lemmas, svg.
Exit codes: 0 success/found, 1 decided-none, 2 budget-exhausted,
3 usage/parse/I-O error.  Timings go to stderr so stdout stays
deterministic.
"""

import argparse
import json
import math
import sys
from typing import Optional

from . import reduction, solvers
from .gridgraph import hamilton_path, is_hamilton_path
from .instancefile import (
    Instance,
    ParseError,
    parse_instance,
    serialize_instance,
)
from .model import (
    InvalidTreeError,
    interference,
    max_interference,
    radii_from_tree,
    symmetric_comm_graph,
)
from .svg import render_svg

EXIT_OK = 0
EXIT_NONE = 1
EXIT_BUDGET = 2
EXIT_ERROR = 3


class CliError(Exception):
    pass


def _load(path: str) -> Instance:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_instance(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    except ParseError as exc:
        raise CliError(f"{path}: {exc}") from None


def _write_out(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise CliError(f"cannot write {out}: {exc}") from None


def _parse_duration(text: str) -> float:
    t = text.strip()
    factor = 1.0
    if t.endswith("ms"):
        t, factor = t[:-2], 0.001
    elif t.endswith("s"):
        t = t[:-1]
    elif t.endswith("m"):
        t, factor = t[:-1], 60.0
    try:
        value = float(t) * factor
    except ValueError:
        raise CliError(f"bad duration {text!r}") from None
    if value < 0:
        raise CliError("duration must be nonnegative")
    return value


def _budget(args: argparse.Namespace) -> solvers.SearchBudget:
    time_limit = (
        _parse_duration(args.time_limit) if args.time_limit else None
    )
    return solvers.SearchBudget(args.max_trees, time_limit, args.seed)


def _require_points(inst: Instance) -> None:
    if inst.kind != "points":
        raise CliError("this command needs a points instance")


def _require_grid(inst: Instance) -> None:
    if inst.kind != "grid":
        raise CliError("this command needs a grid instance")


def cmd_eval(args: argparse.Namespace) -> int:
    inst = _load(args.instance)
    _require_points(inst)
    if inst.tree is None:
        raise CliError("instance has no tree block to evaluate")
    nodes = inst.nodes
    assert nodes is not None
    try:
        radii = radii_from_tree(nodes, inst.tree)
    except InvalidTreeError as exc:
        raise CliError(f"invalid tree: {exc}") from None
    profile = interference(nodes, radii)
    comm = symmetric_comm_graph(nodes, radii)
    if args.json:
        print(
            json.dumps(
                {
                    "counts": list(profile.counts),
                    "max_interference": profile.max,
                    "sq_radii": list(radii),
                    "comm_graph_edges": sorted(map(list, comm)),
                },
                sort_keys=True,
            )
        )
        return EXIT_OK
    for i, (p, r, c) in enumerate(zip(nodes.nodes, radii, profile.counts)):
        approx = math.sqrt(r) / 4
        print(
            f"node {i} at ({p.x},{p.y}): sq_radius={r} "
            f"(~{approx:.4f} grid units, approximate) interference={c}"
        )
    print(f"max interference: {profile.max}")
    print(f"symmetric communication graph edges: {len(comm)}")
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    inst = _load(args.instance)
    _require_grid(inst)
    assert inst.grid is not None
    try:
        gs = reduction.build_gadgets(inst.grid)
    except reduction.ReductionError as exc:
        raise CliError(str(exc)) from None
    _write_out(
        serialize_instance(Instance("points", nodes=gs.nodes)), args.out
    )
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    inst = _load(args.instance)
    _require_points(inst)
    nodes = inst.nodes
    assert nodes is not None
    budget = _budget(args)

    if args.k is not None:
        outcome = solvers.decide_interference_le(nodes, args.k, budget)
        if isinstance(outcome, solvers.SpanningTree):
            mi = max_interference(nodes, outcome)
            report = {"outcome": "found", "max_interference": mi,
                      "edges": [list(e) for e in outcome.edges]}
            if args.json:
                print(json.dumps(report, sort_keys=True))
            else:
                print(f"found tree with max interference {mi} <= {args.k}")
            if args.out:
                _write_out(
                    serialize_instance(
                        Instance("points", nodes=nodes, tree=outcome)
                    ),
                    args.out,
                )
            return EXIT_OK
        if outcome is None:
            print(json.dumps({"outcome": "none"}) if args.json else "none")
            return EXIT_NONE
        print(
            json.dumps({"outcome": "budget-exhausted"})
            if args.json
            else "budget-exhausted"
        )
        return EXIT_BUDGET

    if args.mode == "exhaustive":
        result = solvers.minmax_exhaustive(nodes)
    elif args.mode == "bnb":
        result = solvers.minmax_bnb(nodes, budget)
    else:
        result = solvers.local_search(nodes, solvers.emst_tree(nodes), budget)

    if args.json:
        print(
            json.dumps(
                {
                    "objective": result.objective,
                    "certified": result.certified,
                    "edges": [list(e) for e in result.tree.edges],
                    "trees_examined": result.stats.trees_examined,
                    "nodes_pruned": result.stats.nodes_pruned,
                },
                sort_keys=True,
            )
        )
    else:
        cert = "certified" if result.certified else "not certified"
        print(f"objective: {result.objective} ({cert})")
        print(f"tree edges: {list(result.tree.edges)}")
    print(f"elapsed: {result.stats.elapsed:.3f}s", file=sys.stderr)
    if args.out:
        _write_out(
            serialize_instance(
                Instance("points", nodes=nodes, tree=result.tree)
            ),
            args.out,
        )
    return EXIT_OK if result.certified else EXIT_BUDGET


def cmd_hamilton(args: argparse.Namespace) -> int:
    inst = _load(args.instance)
    _require_grid(inst)
    assert inst.grid is not None
    path = hamilton_path(inst.grid)
    if path is None:
        print("none")
        return EXIT_NONE
    if not is_hamilton_path(inst.grid, path):
        raise CliError("internal error: oracle returned an invalid path")
    print(" -> ".join(f"({a},{b})" for a, b in path))
    return EXIT_OK


def cmd_verify_lemmas(args: argparse.Namespace) -> int:
    inst = _load(args.instance)
    _require_grid(inst)
    g = inst.grid
    assert g is not None
    budget = _budget(args)

    path = hamilton_path(g)
    try:
        gs = reduction.build_gadgets(g)
    except reduction.ReductionError as exc:
        raise CliError(str(exc)) from None

    if path is None:
        print("hamilton path: none")
        print("lemma 1/3 steps skipped (no Hamilton path)")
        outcome = solvers.decide_interference_le(gs.nodes, 3, budget)
        if outcome is solvers.BUDGET_EXHAUSTED:
            print("decision solver: budget exhausted")
            return EXIT_BUDGET
        if outcome is None:
            print("decision solver confirms: no tree with interference <= 3")
            return EXIT_OK
        print("FAIL theorem: decision solver found a tree but no "
              "Hamilton path exists")
        return EXIT_ERROR

    print(f"hamilton path: {' -> '.join(str(v) for v in path)}")
    tree = reduction.tree_from_hamilton_path(gs, path)
    mi = max_interference(gs.nodes, tree)
    if mi != 3:
        print(f"FAIL lemma 1: constructed tree has max interference {mi}")
        return EXIT_ERROR
    print("lemma 1: constructed tree has max interference 3")

    if reduction.cross_gadget_violations(gs, tree):
        print("FAIL lemma 2: constructed tree has cross-gadget edges")
        return EXIT_ERROR
    bad = _lemma2_perturbations_ok(gs, tree)
    if bad is not None:
        print(f"FAIL lemma 2: perturbed tree {bad} stays below "
              "interference 4 yet joins non-adjacent gadgets")
        return EXIT_ERROR
    print("lemma 2: every cross-gadget perturbation either reaches "
          "interference >= 4 or joins grid-adjacent gadgets")

    try:
        back = reduction.hamilton_from_tree(gs, tree)
    except reduction.LemmaViolation as exc:
        print(f"FAIL lemma 3: {exc}")
        return EXIT_ERROR
    if not is_hamilton_path(g, back):
        print("FAIL lemma 3: extracted sequence is not a Hamilton path")
        return EXIT_ERROR
    print("lemma 3: tree contracts back to a Hamilton path")
    return EXIT_OK


def _lemma2_perturbations_ok(gs, tree):
    """Check every partner-edge swap against the cross-gadget argument.

    A swap must either push some node to interference >= 4 or join two
    grid-adjacent gadgets (parallel perpendicular satellites sit at
    exactly unit distance; such an edge still contracts to a grid
    edge).  Returns None on success, else the offending perturbation.
    """
    from .model import SpanningTree

    n = len(gs.nodes)
    ann = gs.nodes.annotations
    for drop in tree.edges:
        if not gs.is_partner_edge(drop):
            continue
        rest = tuple(e for e in tree.edges if e != drop)
        side = _component_sides(n, rest, drop[0])
        for i in range(n):
            for j in range(i + 1, n):
                if side[i] == side[j]:
                    continue
                if gs.owner(i) == gs.owner(j):
                    continue
                if ann[i].partner == j:
                    continue
                cand = SpanningTree(rest + ((i, j),))
                if max_interference(gs.nodes, cand) >= 4:
                    continue
                (ua, ub), (va, vb) = gs.owner(i), gs.owner(j)
                if abs(ua - va) + abs(ub - vb) != 1:
                    return (drop, (i, j))
    return None


def _component_sides(n, edges, start):
    adj = {v: [] for v in range(n)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    side = [False] * n
    side[start] = True
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if not side[w]:
                side[w] = True
                stack.append(w)
    return side


def cmd_svg(args: argparse.Namespace) -> int:
    inst = _load(args.instance)
    _require_points(inst)
    assert inst.nodes is not None
    tree = None if args.no_tree else inst.tree
    doc = render_svg(inst.nodes, tree, draw_disks=not args.no_disks)
    _write_out(doc, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quietnet",
        description="Min-max interference spanning trees: evaluation, "
        "reduction gadgets, exact and heuristic solvers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_budget_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--max-trees", type=int, default=None)
        p.add_argument("--time-limit", default=None,
                       help="e.g. 5, 5s, 500ms, 2m")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("eval", help="evaluate interference of a tree")
    p.add_argument("instance")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("reduce", help="grid graph -> gadget node set")
    p.add_argument("instance")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("solve", help="min-max interference spanning tree")
    p.add_argument("instance")
    p.add_argument("--mode", choices=("exhaustive", "bnb", "heuristic"),
                   default="bnb")
    p.add_argument("--k", type=int, default=None,
                   help="decide: tree with interference <= k?")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", default=None)
    add_budget_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("hamilton", help="Hamilton path of a grid graph")
    p.add_argument("instance")
    p.set_defaults(func=cmd_hamilton)

    p = sub.add_parser("verify-lemmas",
                       help="run the full reduction chain on a grid graph")
    p.add_argument("instance")
    add_budget_flags(p)
    p.set_defaults(func=cmd_verify_lemmas)

    p = sub.add_parser("svg", help="render nodes, tree, and disks")
    p.add_argument("instance")
    p.add_argument("--out", default=None)
    p.add_argument("--no-tree", action="store_true")
    p.add_argument("--no-disks", action="store_true")
    p.set_defaults(func=cmd_svg)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
