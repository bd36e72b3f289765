"""Vertex-induced grid graphs and a brute-force Hamilton-path oracle.

Edges are implicit: two vertices are adjacent exactly when they are at
unit L2 distance on the integer grid.  The oracle is exact backtracking
with a connectivity prune; it is meant for desk-scale instances
(roughly up to 20 vertices).
"""

from dataclasses import dataclass
from typing import Iterable, Optional

GridVertex = tuple[int, int]

_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


@dataclass(frozen=True)
class GridGraph:
    vertices: frozenset[GridVertex]

    @classmethod
    def from_vertices(cls, vs: Iterable[GridVertex]) -> "GridGraph":
        return cls(frozenset((int(a), int(b)) for a, b in vs))

    def __len__(self) -> int:
        return len(self.vertices)

    def translated(self, da: int, db: int) -> "GridGraph":
        return GridGraph(
            frozenset((a + da, b + db) for a, b in self.vertices)
        )


def neighbors(g: GridGraph, v: GridVertex) -> list[GridVertex]:
    a, b = v
    return [
        (a + da, b + db)
        for da, db in _STEPS
        if (a + da, b + db) in g.vertices
    ]


def induced_edges(g: GridGraph) -> set[tuple[GridVertex, GridVertex]]:
    """All unordered vertex pairs at unit distance, as sorted tuples."""
    out = set()
    for v in g.vertices:
        for w in neighbors(g, v):
            out.add((v, w) if v <= w else (w, v))
    return out


def degree(g: GridGraph, v: GridVertex) -> int:
    return len(neighbors(g, v))


def max_degree(g: GridGraph) -> int:
    return max((degree(g, v) for v in g.vertices), default=0)


def has_isolated_vertex(g: GridGraph) -> bool:
    """True iff some vertex has no grid neighbor (vacuously false if empty)."""
    return any(degree(g, v) == 0 for v in g.vertices)


def is_connected(g: GridGraph) -> bool:
    if len(g.vertices) <= 1:
        return True
    start = next(iter(g.vertices))
    seen = {start}
    stack = [start]
    while stack:
        for w in neighbors(g, stack.pop()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(g.vertices)


def is_hamilton_path(g: GridGraph, path: list[GridVertex]) -> bool:
    """Independent check: spanning, no repeats, consecutive adjacency."""
    if len(path) != len(g.vertices) or set(path) != g.vertices:
        return False
    if len(set(path)) != len(path):
        return False
    for v, w in zip(path, path[1:]):
        if abs(v[0] - w[0]) + abs(v[1] - w[1]) != 1:
            return False
    return True


def _vertex_order(g: GridGraph) -> list[GridVertex]:
    # Row-major by (y, x): fixes determinism of the returned path.
    return sorted(g.vertices, key=lambda v: (v[1], v[0]))


def _remainder_connected(
    g: GridGraph, current: GridVertex, visited: set[GridVertex]
) -> bool:
    """Can every unvisited vertex still be reached from current?"""
    unvisited = len(g.vertices) - len(visited)
    if unvisited == 0:
        return True
    frontier = [w for w in neighbors(g, current) if w not in visited]
    seen = set(frontier)
    stack = list(frontier)
    while stack:
        for w in neighbors(g, stack.pop()):
            if w not in visited and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == unvisited


def hamilton_path(g: GridGraph) -> Optional[list[GridVertex]]:
    """A spanning path if one exists, else None.

    Exhaustive backtracking over each start vertex in row-major order;
    correctness does not depend on the connectivity prune.
    """
    n = len(g.vertices)
    if n == 0:
        return []
    order = _vertex_order(g)
    if n == 1:
        return [order[0]]
    if has_isolated_vertex(g) or not is_connected(g):
        return None

    path: list[GridVertex] = []
    visited: set[GridVertex] = set()

    def extend(current: GridVertex) -> bool:
        if len(path) == n:
            return True
        if not _remainder_connected(g, current, visited):
            return False
        for w in sorted(neighbors(g, current), key=lambda v: (v[1], v[0])):
            if w in visited:
                continue
            visited.add(w)
            path.append(w)
            if extend(w):
                return True
            path.pop()
            visited.remove(w)
        return False

    for start in order:
        visited = {start}
        path = [start]
        if extend(start):
            return path
    return None
