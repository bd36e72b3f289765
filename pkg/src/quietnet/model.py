"""Receiver-interference model over spanning trees.

Each node's transmission radius is the distance to its furthest tree
neighbor; the interference of a node is the number of other nodes'
closed transmission disks that contain it.  Partial forests are
first-class (isolated nodes get radius 0) so solvers can query sound
lower bounds mid-search: radii, and hence interference counts, only
grow as edges are added.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .geometry import Point, sq_dist

GridVertex = tuple[int, int]
Edge = tuple[int, int]


class InvalidTreeError(ValueError):
    """An edge list that is not a spanning tree of the node set."""


@dataclass(frozen=True)
class NodeRole:
    """Gadget annotation for one node.

    role is "center" or "satellite"; owner is the grid vertex the node's
    gadget represents; partner (satellites only) is the index of the
    satellite on the same grid edge in the neighboring gadget.
    """

    role: str
    owner: GridVertex
    partner: Optional[int] = None


@dataclass(frozen=True)
class NodeSet:
    """Ordered collection of distinct points, optionally gadget-annotated."""

    nodes: tuple[Point, ...]
    annotations: Optional[tuple[NodeRole, ...]] = None

    def __post_init__(self) -> None:
        if len(self.nodes) == 0:
            raise ValueError("empty node set is not allowed")
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError("node positions must be pairwise distinct")
        ann = self.annotations
        if ann is None:
            return
        if len(ann) != len(self.nodes):
            raise ValueError("annotations must cover every node")
        for i, a in enumerate(ann):
            if a.role not in ("center", "satellite"):
                raise ValueError(f"node {i}: unknown role {a.role!r}")
            if a.partner is None:
                continue
            j = a.partner
            if not (0 <= j < len(self.nodes)) or j == i:
                raise ValueError(f"node {i}: bad partner index {j}")
            if ann[j].partner != i:
                raise ValueError(f"node {i}: partner link to {j} is not mutual")
            if sq_dist(self.nodes[i], self.nodes[j]) != 4:
                raise ValueError(
                    f"partners {i},{j} are not at squared distance 4"
                )

    def __len__(self) -> int:
        return len(self.nodes)

    def translated(self, dx: int, dy: int) -> "NodeSet":
        return NodeSet(
            tuple(p.translated(dx, dy) for p in self.nodes), self.annotations
        )


@dataclass(frozen=True)
class SpanningTree:
    """Edge list (index pairs) intended to form a spanning tree.

    Construction does not validate; use tree_violation / validate_tree.
    Edges are normalized to (min, max) order.
    """

    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        normalized = tuple(
            (i, j) if i <= j else (j, i) for i, j in self.edges
        )
        object.__setattr__(self, "edges", normalized)


@dataclass(frozen=True)
class InterferenceProfile:
    counts: tuple[int, ...]
    max: int


def tree_violation(nodes: NodeSet, tree: SpanningTree) -> Optional[str]:
    """Return a description of the first violated invariant, or None if ok."""
    n = len(nodes)
    seen = set()
    for i, j in tree.edges:
        if not (0 <= i < n and 0 <= j < n):
            return f"bad index: edge ({i},{j}) out of range for {n} nodes"
        if i == j:
            return f"self-loop at node {i}"
        if (i, j) in seen:
            return f"duplicate edge ({i},{j})"
        seen.add((i, j))
    if len(tree.edges) != n - 1:
        return f"wrong edge count: {len(tree.edges)} edges for {n} nodes"
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in tree.edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            return f"cycle through edge ({i},{j})"
        parent[ri] = rj
    # n-1 acyclic edges on n nodes are necessarily connected, but keep the
    # explicit check so the report can name disconnection when counts lie.
    if n > 0 and len({find(v) for v in range(n)}) != 1:
        return "disconnected"
    return None


def validate_tree(nodes: NodeSet, tree: SpanningTree) -> None:
    """Raise InvalidTreeError unless tree spans nodes."""
    report = tree_violation(nodes, tree)
    if report is not None:
        raise InvalidTreeError(report)


def radii_from_forest(
    nodes: NodeSet, edges: Iterable[Edge]
) -> tuple[int, ...]:
    """Squared radius per node: max distance to a neighbor, 0 if isolated."""
    radii = [0] * len(nodes)
    for i, j in edges:
        d = sq_dist(nodes.nodes[i], nodes.nodes[j])
        if d > radii[i]:
            radii[i] = d
        if d > radii[j]:
            radii[j] = d
    return tuple(radii)


def radii_from_tree(nodes: NodeSet, tree: SpanningTree) -> tuple[int, ...]:
    """Per-node squared transmission radius induced by a spanning tree."""
    validate_tree(nodes, tree)
    return radii_from_forest(nodes, tree.edges)


def interference(
    nodes: NodeSet, radii: Sequence[int]
) -> InterferenceProfile:
    """All-pairs in-circle evaluation of per-node interference counts."""
    n = len(nodes)
    if len(radii) != n:
        raise ValueError(
            f"radius count {len(radii)} does not match node count {n}"
        )
    pts = nodes.nodes
    counts = [0] * n
    for u in range(n):
        ru = radii[u]
        pu = pts[u]
        for v in range(n):
            if v != u and sq_dist(pu, pts[v]) <= ru:
                counts[v] += 1
    return InterferenceProfile(tuple(counts), max(counts) if n > 1 else 0)


def max_interference(nodes: NodeSet, tree: SpanningTree) -> int:
    """Maximum interference induced by a spanning tree."""
    return interference(nodes, radii_from_tree(nodes, tree)).max


def symmetric_comm_graph(
    nodes: NodeSet, radii: Sequence[int]
) -> set[Edge]:
    """Edges between nodes that lie in each other's transmission range."""
    n = len(nodes)
    if len(radii) != n:
        raise ValueError(
            f"radius count {len(radii)} does not match node count {n}"
        )
    pts = nodes.nodes
    out: set[Edge] = set()
    for u in range(n):
        for v in range(u + 1, n):
            d = sq_dist(pts[u], pts[v])
            if d <= radii[u] and d <= radii[v]:
                out.add((u, v))
    return out
