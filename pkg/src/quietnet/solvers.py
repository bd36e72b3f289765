"""Exact and heuristic solvers for min-max interference spanning trees.

minmax_exhaustive enumerates every spanning tree of the complete graph
and serves as the ground-truth oracle (n <= 9).  decide_interference_le
is a branch-and-bound over edge inclusion/exclusion whose pruning rests
on monotonicity: radii and interference counts only grow as a forest
gains edges, and every node's final radius is at least the distance to
its nearest possible tree neighbor.
"""

import time
from dataclasses import dataclass
from typing import Optional, Union

from .geometry import sq_dist
from .model import (
    Edge,
    NodeSet,
    SpanningTree,
    interference,
    max_interference,
    radii_from_tree,
    validate_tree,
)


class BudgetExhausted:
    """Marker outcome: search limits were hit before a decision."""

    def __repr__(self) -> str:
        return "BUDGET_EXHAUSTED"


BUDGET_EXHAUSTED = BudgetExhausted()

DecisionOutcome = Union[SpanningTree, None, BudgetExhausted]


@dataclass(frozen=True)
class SearchBudget:
    """Limits for a single solver invocation.

    max_trees caps explored search states (complete trees and interior
    branch nodes alike); time_limit is in seconds.
    """

    max_trees: Optional[int] = None
    time_limit: Optional[float] = None
    rng_seed: int = 0

    def __post_init__(self) -> None:
        if self.max_trees is not None and self.max_trees < 0:
            raise ValueError("max_trees must be nonnegative")
        if self.time_limit is not None and self.time_limit < 0:
            raise ValueError("time_limit must be nonnegative")


@dataclass(frozen=True)
class SearchStats:
    trees_examined: int
    nodes_pruned: int
    elapsed: float


@dataclass(frozen=True)
class SolveResult:
    tree: SpanningTree
    objective: int
    stats: SearchStats
    certified: bool = True


def _make_result(
    nodes: NodeSet,
    tree: SpanningTree,
    stats: SearchStats,
    certified: bool = True,
) -> SolveResult:
    # Objective is always recomputed independently of the search.
    return SolveResult(tree, max_interference(nodes, tree), stats, certified)


def _sq_matrix(nodes: NodeSet) -> list[list[int]]:
    pts = nodes.nodes
    return [[sq_dist(p, q) for q in pts] for p in pts]


def _all_edges(n: int) -> list[Edge]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _counts_key(counts) -> tuple[int, ...]:
    return tuple(sorted(counts, reverse=True))


def _profile(dmat, radii, n) -> list[int]:
    counts = [0] * n
    for u in range(n):
        ru = radii[u]
        du = dmat[u]
        for v in range(n):
            if v != u and du[v] <= ru:
                counts[v] += 1
    return counts


class _Timer:
    def __init__(self, budget: Optional[SearchBudget]):
        self.start = time.monotonic()
        self.budget = budget or SearchBudget()
        self.steps = 0

    def step(self) -> bool:
        """Count one search state; True when the budget is exhausted."""
        self.steps += 1
        b = self.budget
        if b.max_trees is not None and self.steps > b.max_trees:
            return True
        if b.time_limit is not None and (self.steps & 0xFF) == 0:
            if time.monotonic() - self.start > b.time_limit:
                return True
        return False

    def over_time(self) -> bool:
        b = self.budget
        return (
            b.time_limit is not None
            and time.monotonic() - self.start > b.time_limit
        )

    def elapsed(self) -> float:
        return time.monotonic() - self.start


def minmax_exhaustive(nodes: NodeSet) -> SolveResult:
    """Ground-truth oracle: evaluate every spanning tree of K_n.

    Tie-break: lexicographically smallest sorted-descending interference
    vector, then lexicographically smallest edge list.
    """
    n = len(nodes)
    if not (2 <= n <= 9):
        raise ValueError(
            f"exhaustive enumeration supports 2 <= n <= 9 (got {n}); "
            "use minmax_bnb for larger sets"
        )
    dmat = _sq_matrix(nodes)
    edges = _all_edges(n)
    m = len(edges)
    start = time.monotonic()

    best_key = None
    best_tree: Optional[tuple[Edge, ...]] = None
    trees_examined = 0

    def feasible(idx: int, parent: list[int]) -> bool:
        # Can the included forest still be completed from edges[idx:]?
        p = parent[:]

        def find(x: int) -> int:
            while p[x] != x:
                p[x] = p[p[x]]
                x = p[x]
            return x

        comps = len({find(v) for v in range(n)})
        for i, j in edges[idx:]:
            ri, rj = find(i), find(j)
            if ri != rj:
                p[ri] = rj
                comps -= 1
                if comps == 1:
                    return True
        return comps == 1

    def rec(idx: int, chosen: list[Edge], parent: list[int]) -> None:
        nonlocal best_key, best_tree, trees_examined
        if len(chosen) == n - 1:
            trees_examined += 1
            radii = [0] * n
            for i, j in chosen:
                d = dmat[i][j]
                if d > radii[i]:
                    radii[i] = d
                if d > radii[j]:
                    radii[j] = d
            counts = _profile(dmat, radii, n)
            key = (max(counts), _counts_key(counts), tuple(chosen))
            if best_key is None or key < best_key:
                best_key = key
                best_tree = tuple(chosen)
            return
        if idx == m or not feasible(idx, parent):
            return
        i, j = edges[idx]

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ri, rj = find(i), find(j)
        if ri != rj:
            child = parent[:]
            child[ri] = rj
            chosen.append((i, j))
            rec(idx + 1, chosen, child)
            chosen.pop()
        rec(idx + 1, chosen, parent)

    rec(0, [], list(range(n)))
    assert best_tree is not None
    stats = SearchStats(trees_examined, 0, time.monotonic() - start)
    return _make_result(nodes, SpanningTree(best_tree), stats)


def _decide(
    nodes: NodeSet, k: int, budget: Optional[SearchBudget]
) -> tuple[DecisionOutcome, SearchStats]:
    n = len(nodes)
    if n < 2:
        raise ValueError("need at least 2 nodes")
    if k < 0:
        raise ValueError("interference threshold must be nonnegative")
    timer = _Timer(budget)
    dmat = _sq_matrix(nodes)

    if k == 0:
        # Any spanning tree makes some leaf's neighbor cover it.
        return None, SearchStats(0, 0, timer.elapsed())

    # Every node's radius is at least the distance to its nearest node,
    # whatever tree is chosen; this floor powers the edge filter, the
    # forced-edge reduction, and the in-search bound.
    floor = [
        min(dmat[v][u] for u in range(n) if u != v) for v in range(n)
    ]

    # Effective radii / counts for the floor alone.  If even the floor
    # profile exceeds k, no spanning tree can stay within k.
    base_counts = _profile(dmat, floor, n)
    if max(base_counts) > k:
        return None, SearchStats(0, 1, timer.elapsed())

    # Per-node neighbor lists sorted by distance, for incremental count
    # updates when an effective radius grows.
    by_dist = [
        sorted((dmat[v][u], u) for u in range(n) if u != v)
        for v in range(n)
    ]

    eff = floor[:]  # current effective radius per node
    counts = base_counts[:]
    violations = 0  # nodes with counts > k

    def grow(v: int, new_radius: int) -> tuple[int, list[int]]:
        """Raise eff[v]; returns (old_radius, nodes newly covered)."""
        nonlocal violations
        old = eff[v]
        touched: list[int] = []
        if new_radius > old:
            for d, u in by_dist[v]:
                if d > new_radius:
                    break
                if d > old:
                    counts[u] += 1
                    if counts[u] == k + 1:
                        violations += 1
                    touched.append(u)
            eff[v] = new_radius
        return old, touched

    def shrink(v: int, old_radius: int, touched: list[int]) -> None:
        nonlocal violations
        for u in touched:
            if counts[u] == k + 1:
                violations -= 1
            counts[u] -= 1
        eff[v] = old_radius

    # Edge filter: drop any edge that on its own (over the floor) would
    # push some node past k.  A tree containing a dropped edge cannot
    # have interference <= k, so the search over the rest is complete.
    candidates: list[Edge] = []
    pruned_edges = 0
    for i, j in _all_edges(n):
        d = dmat[i][j]
        oi, ti = grow(i, d)
        oj, tj = grow(j, d)
        bad = violations > 0
        shrink(j, oj, tj)
        shrink(i, oi, ti)
        if bad:
            pruned_edges += 1
        else:
            candidates.append((i, j))
    candidates.sort(key=lambda e: (dmat[e[0]][e[1]], e))

    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # Forced edges: if d(u,v) equals both endpoints' floors (mutual
    # nearest neighbors), some interference-<=k tree contains the edge
    # whenever any exists: adding it changes no radius, and deleting a
    # non-forced edge of the resulting cycle only shrinks radii.  A
    # spanning forest of such edges is committed up front.
    chosen: list[Edge] = []
    forced_pool: list[Edge] = []
    rest: list[Edge] = []
    for i, j in candidates:
        if dmat[i][j] <= floor[i] and dmat[i][j] <= floor[j]:
            forced_pool.append((i, j))
        else:
            rest.append((i, j))
    for i, j in forced_pool:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            chosen.append((i, j))
            # eff unchanged: d == floor at both ends.
    candidates = rest
    m = len(candidates)

    if len(chosen) == n - 1:
        return (
            SpanningTree(tuple(sorted(chosen))),
            SearchStats(timer.steps, pruned_edges, timer.elapsed()),
        )

    stats_pruned = pruned_edges
    out_of_budget = False

    def feasible(idx: int, par: list[int]) -> bool:
        p = par[:]

        def pfind(x: int) -> int:
            while p[x] != x:
                p[x] = p[p[x]]
                x = p[x]
            return x

        comps = len({pfind(v) for v in range(n)})
        if comps == 1:
            return True
        for i, j in candidates[idx:]:
            ri, rj = pfind(i), pfind(j)
            if ri != rj:
                p[ri] = rj
                comps -= 1
                if comps == 1:
                    return True
        return False

    def rec(idx: int, par: list[int]) -> Optional[tuple[Edge, ...]]:
        nonlocal stats_pruned, out_of_budget
        if out_of_budget:
            return None
        if timer.step():
            out_of_budget = True
            return None
        if len(chosen) == n - 1:
            return tuple(chosen)
        if idx == m:
            return None
        if not feasible(idx, par):
            stats_pruned += 1
            return None
        i, j = candidates[idx]

        def pfind(x: int) -> int:
            while par[x] != x:
                par[x] = par[par[x]]
                x = par[x]
            return x

        ri, rj = pfind(i), pfind(j)
        if ri != rj:
            d = dmat[i][j]
            oi, ti = grow(i, d)
            oj, tj = grow(j, d)
            if violations > 0:
                stats_pruned += 1
            else:
                child = par[:]
                child[ri] = rj
                chosen.append((i, j))
                found = rec(idx + 1, child)
                chosen.pop()
                if found is not None:
                    return found
            shrink(j, oj, tj)
            shrink(i, oi, ti)
        return rec(idx + 1, par)

    found = rec(0, parent)
    stats = SearchStats(timer.steps, stats_pruned, timer.elapsed())
    if found is not None:
        return SpanningTree(tuple(sorted(found))), stats
    if out_of_budget:
        return BUDGET_EXHAUSTED, stats
    return None, stats


def decide_interference_le(
    nodes: NodeSet, k: int, budget: Optional[SearchBudget] = None
) -> DecisionOutcome:
    """A spanning tree with max interference <= k, None after exhaustive
    refutation, or BUDGET_EXHAUSTED if limits were hit first."""
    outcome, _ = _decide(nodes, k, budget)
    return outcome


def minmax_bnb(
    nodes: NodeSet, budget: Optional[SearchBudget] = None
) -> SolveResult:
    """Minimize max interference by sweeping the decision problem upward.

    Exact (certified) when the budget suffices; otherwise falls back to
    a heuristic incumbent flagged as non-certified.
    """
    n = len(nodes)
    if n < 2:
        raise ValueError("need at least 2 nodes")
    b = budget or SearchBudget()
    start = time.monotonic()
    steps = 0
    pruned = 0
    for k in range(1, n):
        remaining = SearchBudget(
            None if b.max_trees is None else max(0, b.max_trees - steps),
            None
            if b.time_limit is None
            else max(0.0, b.time_limit - (time.monotonic() - start)),
            b.rng_seed,
        )
        outcome, st = _decide(nodes, k, remaining)
        steps += st.trees_examined
        pruned += st.nodes_pruned
        if isinstance(outcome, SpanningTree):
            stats = SearchStats(steps, pruned, time.monotonic() - start)
            return _make_result(nodes, outcome, stats, certified=True)
        if outcome is BUDGET_EXHAUSTED:
            fallback = local_search(
                nodes, emst_tree(nodes), SearchBudget(max_trees=2000)
            )
            stats = SearchStats(
                steps + fallback.stats.trees_examined,
                pruned,
                time.monotonic() - start,
            )
            return _make_result(
                nodes, fallback.tree, stats, certified=False
            )
    raise AssertionError("some k <= n-1 always admits a tree")


def emst_tree(nodes: NodeSet) -> SpanningTree:
    """Euclidean minimum spanning tree under exact squared comparison.

    Kruskal with ties broken by smallest index pair.
    """
    n = len(nodes)
    if n < 2:
        raise ValueError("need at least 2 nodes")
    dmat = _sq_matrix(nodes)
    edges = sorted(_all_edges(n), key=lambda e: (dmat[e[0]][e[1]], e))
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen: list[Edge] = []
    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            chosen.append((i, j))
            if len(chosen) == n - 1:
                break
    return SpanningTree(tuple(sorted(chosen)))


def local_search(
    nodes: NodeSet,
    start: SpanningTree,
    budget: Optional[SearchBudget] = None,
) -> SolveResult:
    """Edge-swap descent on the sorted-descending interference vector.

    Accepts the first swap that lexicographically decreases the vector;
    stops at a local optimum or when the budget runs out.  The final
    objective never exceeds the start objective.
    """
    validate_tree(nodes, start)
    n = len(nodes)
    timer = _Timer(budget)
    dmat = _sq_matrix(nodes)

    def key_of(edges: tuple[Edge, ...]) -> tuple[int, ...]:
        radii = [0] * n
        for i, j in edges:
            d = dmat[i][j]
            if d > radii[i]:
                radii[i] = d
            if d > radii[j]:
                radii[j] = d
        return _counts_key(_profile(dmat, radii, n))

    current = tuple(sorted(start.edges))
    current_key = key_of(current)
    evals = 1
    done = False

    while not done:
        done = True
        for drop in current:
            rest = tuple(e for e in current if e != drop)
            # Component split of the tree minus the dropped edge.
            adj: dict[int, list[int]] = {v: [] for v in range(n)}
            for i, j in rest:
                adj[i].append(j)
                adj[j].append(i)
            side = [False] * n
            stack = [drop[0]]
            side[drop[0]] = True
            while stack:
                for w in adj[stack.pop()]:
                    if not side[w]:
                        side[w] = True
                        stack.append(w)
            improved = False
            for i in range(n):
                for j in range(i + 1, n):
                    if side[i] == side[j] or (i, j) == drop:
                        continue
                    if timer.step() or timer.over_time():
                        stats = SearchStats(evals, 0, timer.elapsed())
                        return _make_result(
                            nodes,
                            SpanningTree(current),
                            stats,
                            certified=False,
                        )
                    cand = tuple(sorted(rest + ((i, j),)))
                    cand_key = key_of(cand)
                    evals += 1
                    if cand_key < current_key:
                        current, current_key = cand, cand_key
                        improved = True
                        break
                if improved:
                    break
            if improved:
                done = False
                break

    stats = SearchStats(evals, 0, timer.elapsed())
    return _make_result(nodes, SpanningTree(current), stats, certified=False)
