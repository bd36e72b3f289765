"""Acceptance suite: one test per criterion, one pass/fail line each.

Run with `pytest -s tests/test_acceptance.py` to see the lines as they
print.  Criterion 2 asserts the universal cross-gadget claim exactly as
stated; see the failure message for the counterexample it uncovers.
"""

import itertools
import random
import time

from quietnet.geometry import Point, in_closed_disk, sq_dist
from quietnet.family import bundled_family
from quietnet.gridgraph import GridGraph, hamilton_path, is_hamilton_path
from quietnet.instancefile import Instance, parse_instance, serialize_instance
from quietnet.model import (
    NodeSet,
    SpanningTree,
    interference,
    max_interference,
    radii_from_forest,
    radii_from_tree,
    symmetric_comm_graph,
    tree_violation,
)
from quietnet.reduction import build_gadgets, hamilton_from_tree, tree_from_hamilton_path
from quietnet.solvers import (
    BUDGET_EXHAUSTED,
    SearchBudget,
    decide_interference_le,
    minmax_bnb,
    minmax_exhaustive,
)
from quietnet.svg import render_svg

from conftest import random_node_set


def _report(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[{status}] {name}{suffix}")


def _family_with_paths():
    out = []
    for g in bundled_family():
        out.append((g, hamilton_path(g)))
    return out


def test_criterion_1_lemma1_reproduction():
    start = time.monotonic()
    checked = 0
    for g, path in _family_with_paths():
        if path is None:
            continue
        gs = build_gadgets(g)
        tree = tree_from_hamilton_path(gs, path)
        assert max_interference(gs.nodes, tree) == 3, sorted(g.vertices)
        checked += 1
    elapsed = time.monotonic() - start
    ok = elapsed < 10.0
    _report(
        "criterion 1: constructed trees reach max interference exactly 3",
        ok,
        f"{checked} Hamiltonian instances, {elapsed:.1f}s",
    )
    assert ok


def test_criterion_2_cross_gadget_perturbations():
    start = time.monotonic()
    violations = []
    checked = 0
    for g, path in _family_with_paths():
        if path is None:
            continue
        gs = build_gadgets(g)
        tree = tree_from_hamilton_path(gs, path)
        n = len(gs.nodes)
        ann = gs.nodes.annotations
        for drop in tree.edges:
            if ann[drop[0]].partner != drop[1]:
                continue
            rest = tuple(e for e in tree.edges if e != drop)
            side = _sides(n, rest, drop[0])
            for i in range(n):
                for j in range(i + 1, n):
                    if side[i] == side[j]:
                        continue
                    if ann[i].owner == ann[j].owner:
                        continue
                    if ann[i].partner == j:
                        continue
                    checked += 1
                    pert = SpanningTree(rest + ((i, j),))
                    if max_interference(gs.nodes, pert) < 4:
                        violations.append(
                            (sorted(g.vertices), drop, (i, j),
                             gs.nodes.nodes[i], gs.nodes.nodes[j])
                        )
    elapsed = time.monotonic() - start
    ok = not violations and elapsed < 30.0
    _report(
        "criterion 2: every cross-gadget non-partner perturbation "
        "reaches interference >= 4",
        ok,
        f"{checked} perturbations, {len(violations)} below 4, "
        f"{elapsed:.1f}s",
    )
    assert ok, (
        "perturbations with max interference < 4 exist; first: "
        f"{violations[0] if violations else None} -- two satellites of "
        "adjacent gadgets pointing the same perpendicular way sit at "
        "exactly unit distance, and neither radius-1 disk reaches the "
        "foreign center at squared distance 17/16"
    )


def _sides(n, edges, start):
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


def test_criteria_3_and_4_decision_equivalence_and_round_trip():
    budget = SearchBudget(time_limit=60.0)
    start = time.monotonic()
    found = refuted = 0
    for g, path in _family_with_paths():
        gs = build_gadgets(g)
        outcome = decide_interference_le(gs.nodes, 3, budget)
        assert outcome is not BUDGET_EXHAUSTED, sorted(g.vertices)
        if isinstance(outcome, SpanningTree):
            assert path is not None, sorted(g.vertices)
            assert max_interference(gs.nodes, outcome) <= 3
            # Criterion 4: extraction independently verified.
            back = hamilton_from_tree(gs, outcome)
            assert is_hamilton_path(g, back), sorted(g.vertices)
            found += 1
        else:
            assert path is None, sorted(g.vertices)
            refuted += 1
    elapsed = time.monotonic() - start
    _report(
        "criterion 3: tree at k=3 exists iff a Hamilton path exists",
        True,
        f"{found} found, {refuted} refuted, {elapsed:.1f}s",
    )
    _report(
        "criterion 4: every found tree contracts to a verified "
        "Hamilton path",
        True,
        f"{found} round trips",
    )


def test_criterion_5_solver_oracle_equivalence():
    rng = random.Random(0x5EED)
    start = time.monotonic()
    for _ in range(100):
        nodes = random_node_set(rng, rng.choice([4, 5, 6, 7]))
        ex = minmax_exhaustive(nodes)
        bb = minmax_bnb(nodes)
        assert bb.certified
        assert bb.objective == ex.objective, nodes
    elapsed = time.monotonic() - start
    ok = elapsed < 60.0
    _report(
        "criterion 5: branch-and-bound matches the exhaustive oracle",
        ok,
        f"100 random sets, {elapsed:.1f}s",
    )
    assert ok


def _random_tree(rng, n):
    order = list(range(n))
    rng.shuffle(order)
    return SpanningTree(
        tuple((order[i], order[rng.randrange(i)]) for i in range(1, n))
    )


def test_criterion_6_model_invariants():
    rng = random.Random(0xABCDE)
    start = time.monotonic()

    for _ in range(1000):  # tree containment in the comm graph
        nodes = random_node_set(rng, rng.randint(2, 8))
        tree = _random_tree(rng, len(nodes))
        radii = radii_from_tree(nodes, tree)
        assert set(tree.edges) <= symmetric_comm_graph(nodes, radii)

    for _ in range(1000):  # monotonicity under forest extension
        nodes = random_node_set(rng, rng.randint(2, 8))
        edges = list(_random_tree(rng, len(nodes)).edges)
        rng.shuffle(edges)
        cut = rng.randrange(len(edges) + 1)
        r_small = radii_from_forest(nodes, edges[:cut])
        r_big = radii_from_forest(nodes, edges)
        assert all(a <= b for a, b in zip(r_small, r_big))
        c_small = interference(nodes, r_small).counts
        c_big = interference(nodes, r_big).counts
        assert all(a <= b for a, b in zip(c_small, c_big))

    for _ in range(1000):  # translation invariance
        nodes = random_node_set(rng, rng.randint(2, 8))
        tree = _random_tree(rng, len(nodes))
        moved = nodes.translated(rng.randint(-50, 50), rng.randint(-50, 50))
        assert radii_from_tree(nodes, tree) == radii_from_tree(moved, tree)
        assert (
            interference(nodes, radii_from_tree(nodes, tree)).counts
            == interference(moved, radii_from_tree(moved, tree)).counts
        )

    for _ in range(1000):  # closed-disk boundary semantics
        cx, cy = rng.randint(-50, 50), rng.randint(-50, 50)
        center = Point(cx, cy)
        # A partner-style point at squared distance exactly 4.
        dx, dy = rng.choice([(2, 0), (-2, 0), (0, 2), (0, -2)])
        partner = Point(cx + dx, cy + dy)
        assert sq_dist(center, partner) == 4
        assert in_closed_disk(center, 4, partner)
        assert not in_closed_disk(center, 3, partner)

    elapsed = time.monotonic() - start
    ok = elapsed < 30.0
    _report(
        "criterion 6: model invariants hold on 4x1000 randomized cases",
        ok,
        f"{elapsed:.1f}s",
    )
    assert ok


def test_criterion_7_worked_micro_instances():
    collinear = NodeSet((Point(0, 0), Point(4, 0), Point(8, 0)))
    result = minmax_exhaustive(collinear)
    assert result.objective == 2
    assert result.stats.trees_examined == 3

    # Independent subset-enumeration check of the same optimum.
    best = min(
        max_interference(collinear, SpanningTree(combo))
        for combo in itertools.combinations(
            [(0, 1), (0, 2), (1, 2)], 2
        )
        if tree_violation(collinear, SpanningTree(combo)) is None
    )
    assert best == 2

    gs = build_gadgets(GridGraph.from_vertices([(0, 0), (1, 0)]))
    assert minmax_bnb(gs.nodes).objective == 3
    assert decide_interference_le(gs.nodes, 2) is None
    _report(
        "criterion 7: collinear optimum 2, single-edge gadget optimum 3",
        True,
    )


def test_criterion_8_cli_contract(tmp_path, capsys):
    from quietnet.cli import main

    start = time.monotonic()
    g = GridGraph.from_vertices([(0, 0), (1, 0)])
    gs = build_gadgets(g)
    tree = tree_from_hamilton_path(gs, hamilton_path(g))
    inst = Instance("points", nodes=gs.nodes, tree=tree)
    assert parse_instance(serialize_instance(inst)) == inst
    grid_inst = Instance("grid", grid=g)
    assert parse_instance(serialize_instance(grid_inst)) == grid_inst

    p = tmp_path / "inst.txt"
    p.write_text(serialize_instance(inst))
    gp = tmp_path / "grid.txt"
    gp.write_text(serialize_instance(grid_inst))

    assert main(["solve", str(p), "--k", "3"]) == 0
    assert main(["solve", str(p), "--k", "2"]) == 1
    nodes = random_node_set(random.Random(1), 30, span=200)
    bp = tmp_path / "big.txt"
    bp.write_text(serialize_instance(Instance("points", nodes=nodes)))
    assert main(["solve", str(bp), "--k", "29", "--max-trees", "0"]) == 2
    assert main(["eval", str(tmp_path / "missing.txt")]) == 3
    capsys.readouterr()

    svg_a = render_svg(gs.nodes, tree)
    svg_b = render_svg(gs.nodes, tree)
    assert svg_a == svg_b
    elapsed = time.monotonic() - start
    ok = elapsed < 10.0
    _report(
        "criterion 8: serialization round trips, exit codes 0/1/2/3, "
        "byte-stable SVG",
        ok,
        f"{elapsed:.1f}s",
    )
    assert ok
