"""Bundled grid-graph test family.

All connected, max-degree-3, isolated-free vertex sets of size 2..5
inside a 3x3 window (deduplicated up to translation), plus a handful of
named larger instances.  Used by the verification commands and the
acceptance suite.
"""

from itertools import combinations

from .gridgraph import GridGraph, is_connected, max_degree

GridVertex = tuple[int, int]


def _normalized(vs: frozenset[GridVertex]) -> frozenset[GridVertex]:
    da = min(a for a, _ in vs)
    db = min(b for _, b in vs)
    return frozenset((a - da, b - db) for a, b in vs)


def window_family(
    size_min: int = 2, size_max: int = 5, window: int = 3
) -> list[GridGraph]:
    """Connected max-degree-3 subsets of the window, dedup by translation."""
    cells = [(a, b) for a in range(window) for b in range(window)]
    seen: set[frozenset[GridVertex]] = set()
    out: list[GridGraph] = []
    for size in range(size_min, size_max + 1):
        for combo in combinations(cells, size):
            vs = _normalized(frozenset(combo))
            if vs in seen:
                continue
            g = GridGraph(vs)
            if not is_connected(g) or max_degree(g) > 3:
                continue
            seen.add(vs)
            out.append(g)
    return out


def named_instances() -> dict[str, GridGraph]:
    insts: dict[str, GridGraph] = {}
    for k in range(2, 7):
        insts[f"path-1x{k}"] = GridGraph.from_vertices(
            (a, 0) for a in range(k)
        )
    insts["square-2x2"] = GridGraph.from_vertices(
        [(0, 0), (1, 0), (0, 1), (1, 1)]
    )
    insts["l-shape"] = GridGraph.from_vertices(
        [(0, 0), (1, 0), (2, 0), (3, 0), (3, 1), (3, 2)]
    )
    insts["rect-2x3"] = GridGraph.from_vertices(
        (a, b) for a in range(3) for b in range(2)
    )
    return insts


def bundled_family() -> list[GridGraph]:
    """The full family, translation-deduplicated, in a stable order."""
    seen: set[frozenset[GridVertex]] = set()
    out: list[GridGraph] = []
    for g in window_family() + list(named_instances().values()):
        key = _normalized(g.vertices)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out
