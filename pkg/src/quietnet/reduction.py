"""Grid graph -> gadget node set reduction and its constructive lemmas.

Each grid vertex (a, b) becomes a 4-node gadget: a center at (4a, 4b)
and three satellites at distinct unit quarter-offsets, one on every
incident grid edge.  The two satellites on a shared grid edge are
partners.  A Hamilton path of the grid graph turns into a spanning tree
of max interference exactly 3 (center-satellite edges plus partner
edges along the path), and any interference-<=3 spanning tree contracts
back to a Hamilton path.
"""

import random
from dataclasses import dataclass
from typing import Optional

from .geometry import Point
from .gridgraph import GridGraph, has_isolated_vertex, is_hamilton_path, max_degree
from .model import (
    Edge,
    GridVertex,
    NodeRole,
    NodeSet,
    SpanningTree,
    max_interference,
    validate_tree,
)

# Free-satellite fill order: +x, -x, +y, -y (deterministic builds).
OFFSETS: tuple[tuple[int, int], ...] = ((1, 0), (-1, 0), (0, 1), (0, -1))


class ReductionError(ValueError):
    """The grid graph does not satisfy the reduction preconditions."""


class LemmaViolation(RuntimeError):
    """An internal consistency check that should be unreachable failed."""


@dataclass(frozen=True)
class GadgetSet:
    """A fully annotated gadget node set plus its source grid graph."""

    nodes: NodeSet
    grid: GridGraph

    def center_index(self, v: GridVertex) -> int:
        for i, a in enumerate(self.nodes.annotations or ()):
            if a.role == "center" and a.owner == v:
                return i
        raise KeyError(v)

    def owner(self, i: int) -> GridVertex:
        assert self.nodes.annotations is not None
        return self.nodes.annotations[i].owner

    def is_partner_edge(self, e: Edge) -> bool:
        ann = self.nodes.annotations
        assert ann is not None
        i, j = e
        return ann[i].partner == j


def build_gadgets(
    g: GridGraph, rng: Optional[random.Random] = None
) -> GadgetSet:
    """Construct the gadget node set for a max-degree-3 grid graph.

    Mandatory satellites point along each incident grid edge; remaining
    slots are filled in the fixed offset order, or randomly when rng is
    given (the lemmas must hold for any valid choice).
    """
    if len(g.vertices) < 2:
        raise ReductionError("need at least 2 grid vertices")
    if has_isolated_vertex(g):
        raise ReductionError("grid graph has an isolated vertex")
    if max_degree(g) > 3:
        raise ReductionError("not reducible: maximum degree exceeds 3")

    points: list[Point] = []
    roles: list[NodeRole] = []
    sat_index: dict[Point, int] = {}

    for a, b in sorted(g.vertices):
        center = Point(4 * a, 4 * b)
        points.append(center)
        roles.append(NodeRole("center", (a, b)))
        mandatory = [
            d for d in OFFSETS if (a + d[0], b + d[1]) in g.vertices
        ]
        free = [d for d in OFFSETS if d not in mandatory]
        if rng is not None:
            free = rng.sample(free, len(free))
        for dx, dy in (mandatory + free)[:3]:
            p = Point(4 * a + dx, 4 * b + dy)
            sat_index[p] = len(points)
            points.append(p)
            roles.append(NodeRole("satellite", (a, b)))

    # Partner links: the two satellites on each grid edge.
    for a, b in sorted(g.vertices):
        for dx, dy in OFFSETS:
            u, v = (a, b), (a + dx, b + dy)
            if v not in g.vertices or u >= v:
                continue
            i = sat_index[Point(4 * a + dx, 4 * b + dy)]
            j = sat_index[Point(4 * v[0] - dx, 4 * v[1] - dy)]
            roles[i] = NodeRole("satellite", u, partner=j)
            roles[j] = NodeRole("satellite", v, partner=i)

    return GadgetSet(NodeSet(tuple(points), tuple(roles)), g)


def _partner_edge(gs: GadgetSet, u: GridVertex, v: GridVertex) -> Edge:
    ann = gs.nodes.annotations
    assert ann is not None
    for i, a in enumerate(ann):
        if a.role == "satellite" and a.owner == u and a.partner is not None:
            if ann[a.partner].owner == v:
                return (i, a.partner) if i < a.partner else (a.partner, i)
    raise LemmaViolation(f"no partner pair on grid edge {u}-{v}")


def tree_from_hamilton_path(
    gs: GadgetSet, path: list[GridVertex]
) -> SpanningTree:
    """Lemma-1 construction: center-satellite edges plus path partner edges."""
    if not is_hamilton_path(gs.grid, path):
        raise ReductionError("not a Hamilton path of the source grid graph")
    ann = gs.nodes.annotations
    assert ann is not None
    edges: list[Edge] = []
    for v in gs.grid.vertices:
        c = gs.center_index(v)
        for i, a in enumerate(ann):
            if a.role == "satellite" and a.owner == v:
                edges.append((min(c, i), max(c, i)))
    for u, v in zip(path, path[1:]):
        edges.append(_partner_edge(gs, u, v))
    return SpanningTree(tuple(sorted(edges)))


def cross_gadget_violations(
    gs: GadgetSet, tree: SpanningTree
) -> list[Edge]:
    """Tree edges joining different gadgets that are not partner pairs."""
    validate_tree(gs.nodes, tree)
    return [
        e
        for e in tree.edges
        if gs.owner(e[0]) != gs.owner(e[1]) and not gs.is_partner_edge(e)
    ]


def hamilton_from_tree(
    gs: GadgetSet, tree: SpanningTree
) -> list[GridVertex]:
    """Contract gadgets of an interference-<=3 tree and read off the path.

    Cross-gadget edges between grid-adjacent gadgets (usually partner
    pairs, but satellites pointing the same perpendicular way also sit
    at exactly unit distance) contract to the grid edge between their
    owners.  A cross edge between non-adjacent gadgets, or a contracted
    graph that is not a simple spanning path, raises LemmaViolation.
    """
    validate_tree(gs.nodes, tree)
    mi = max_interference(gs.nodes, tree)
    if mi > 3:
        raise ReductionError(f"tree has max interference {mi} > 3")

    adj: dict[GridVertex, list[GridVertex]] = {
        v: [] for v in gs.grid.vertices
    }
    contracted: set[tuple[GridVertex, GridVertex]] = set()
    for e in tree.edges:
        u, v = gs.owner(e[0]), gs.owner(e[1])
        if u == v:
            continue
        if abs(u[0] - v[0]) + abs(u[1] - v[1]) != 1:
            raise LemmaViolation(
                f"cross-gadget edge {e} joins non-adjacent gadgets {u}, {v}"
            )
        key = (u, v) if u <= v else (v, u)
        if key in contracted:
            raise LemmaViolation(f"parallel inter-gadget connection {key}")
        contracted.add(key)
        adj[u].append(v)
        adj[v].append(u)

    n = len(gs.grid.vertices)
    if len(contracted) != n - 1:
        raise LemmaViolation("contracted graph is not spanning-tree sized")
    if any(len(nbrs) > 2 for nbrs in adj.values()):
        raise LemmaViolation("contracted graph has a vertex of degree > 2")
    ends = sorted(v for v, nbrs in adj.items() if len(nbrs) <= 1)
    if n == 1:
        return list(gs.grid.vertices)
    if len(ends) != 2:
        raise LemmaViolation("contracted graph is not a simple path")

    path = [ends[0]]
    prev: Optional[GridVertex] = None
    while len(path) < n:
        nxt = [w for w in adj[path[-1]] if w != prev]
        if len(nxt) != 1:
            raise LemmaViolation("contracted graph is not a simple path")
        prev = path[-1]
        path.append(nxt[0])
    if not is_hamilton_path(gs.grid, path):
        raise LemmaViolation("extracted sequence is not a Hamilton path")
    return path
