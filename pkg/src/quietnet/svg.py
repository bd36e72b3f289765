"""Deterministic SVG rendering of node sets, trees, and transmission disks.

Fixed scale: 1 grid unit = 100 pixel units (so 1 quarter-unit = 25).
Identical input yields byte-identical output, which golden tests rely
on.
"""

import math
from typing import Optional

from .model import NodeSet, SpanningTree, radii_from_tree

SCALE = 25  # pixels per quarter-unit
MARGIN = 50.0
DOT_RADIUS = 6.0


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def render_svg(
    nodes: NodeSet,
    tree: Optional[SpanningTree] = None,
    draw_disks: bool = True,
) -> str:
    pts = nodes.nodes
    radii = radii_from_tree(nodes, tree) if tree is not None else None

    disk_px = [
        SCALE * math.sqrt(r) for r in (radii or [0] * len(pts))
    ]
    min_x = min(p.x * SCALE - d for p, d in zip(pts, disk_px)) - MARGIN
    max_x = max(p.x * SCALE + d for p, d in zip(pts, disk_px)) + MARGIN
    min_y = min(p.y * SCALE - d for p, d in zip(pts, disk_px)) - MARGIN
    max_y = max(p.y * SCALE + d for p, d in zip(pts, disk_px)) + MARGIN

    def sx(x: int) -> str:
        return _fmt(x * SCALE - min_x)

    def sy(y: int) -> str:
        # SVG y grows downward.
        return _fmt(max_y - y * SCALE)

    width = _fmt(max_x - min_x)
    height = _fmt(max_y - min_y)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]

    if radii is not None and draw_disks:
        for p, d in zip(pts, disk_px):
            out.append(
                f'<circle class="disk" cx="{sx(p.x)}" cy="{sy(p.y)}" '
                f'r="{_fmt(d)}" fill="#4a90d9" fill-opacity="0.12" '
                f'stroke="#4a90d9" stroke-width="1"/>'
            )

    if tree is not None:
        for i, j in tree.edges:
            p, q = pts[i], pts[j]
            out.append(
                f'<line class="edge" x1="{sx(p.x)}" y1="{sy(p.y)}" '
                f'x2="{sx(q.x)}" y2="{sy(q.y)}" '
                f'stroke="#333333" stroke-width="2"/>'
            )

    ann = nodes.annotations
    for idx, p in enumerate(pts):
        role = ann[idx].role if ann is not None else "center"
        if role == "satellite":
            style = 'fill="#ffffff" stroke="#000000" stroke-width="2"'
        else:
            style = 'fill="#000000"'
        out.append(
            f'<circle class="node-{role}" cx="{sx(p.x)}" cy="{sy(p.y)}" '
            f'r="{_fmt(DOT_RADIUS)}" {style}/>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"
