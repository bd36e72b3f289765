"""Line-oriented instance file format.

Two kinds: "points" (quarter-unit node coordinates, optional gadget
annotations and tree block) and "grid" (grid-unit vertices).  The unit
line is mandatory so files self-describe the x4 coordinate scale.
Serialization is canonical and round-trips losslessly.

Example:

    format_version 1
    kind points
    unit quarter-units
    point 0 0
    point 1 0
    node 0 center owner=0,0
    node 1 satellite owner=0,0 partner=5
    edge 0 1
"""

from dataclasses import dataclass
from typing import Optional

from .geometry import Point
from .gridgraph import GridGraph
from .model import NodeRole, NodeSet, SpanningTree

FORMAT_VERSION = 1
_UNITS = {"points": "quarter-units", "grid": "grid-units"}


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Instance:
    kind: str
    nodes: Optional[NodeSet] = None
    grid: Optional[GridGraph] = None
    tree: Optional[SpanningTree] = None


def _int(line_no: int, token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line_no, f"expected integer, got {token!r}") from None


def parse_instance(text: str) -> Instance:
    kind: Optional[str] = None
    unit: Optional[str] = None
    version_seen = False
    points: list[Point] = []
    vertices: list[tuple[int, int]] = []
    ann: dict[int, NodeRole] = {}
    edges: list[tuple[int, int]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "format_version":
            if len(tokens) != 2 or _int(line_no, tokens[1]) != FORMAT_VERSION:
                raise ParseError(
                    line_no, f"unsupported format version {line!r}"
                )
            version_seen = True
        elif head == "kind":
            if len(tokens) != 2 or tokens[1] not in _UNITS:
                raise ParseError(line_no, "kind must be 'points' or 'grid'")
            kind = tokens[1]
        elif head == "unit":
            if len(tokens) != 2:
                raise ParseError(line_no, "malformed unit line")
            unit = tokens[1]
        elif head == "point":
            if len(tokens) != 3:
                raise ParseError(line_no, "point needs two coordinates")
            points.append(
                Point(_int(line_no, tokens[1]), _int(line_no, tokens[2]))
            )
        elif head == "vertex":
            if len(tokens) != 3:
                raise ParseError(line_no, "vertex needs two coordinates")
            vertices.append(
                (_int(line_no, tokens[1]), _int(line_no, tokens[2]))
            )
        elif head == "node":
            if len(tokens) < 3:
                raise ParseError(line_no, "malformed node annotation")
            idx = _int(line_no, tokens[1])
            role = tokens[2]
            owner: Optional[tuple[int, int]] = None
            partner: Optional[int] = None
            for tok in tokens[3:]:
                if tok.startswith("owner="):
                    a, _, b = tok[len("owner="):].partition(",")
                    owner = (_int(line_no, a), _int(line_no, b))
                elif tok.startswith("partner="):
                    partner = _int(line_no, tok[len("partner="):])
                else:
                    raise ParseError(line_no, f"unknown attribute {tok!r}")
            if owner is None:
                raise ParseError(line_no, "node annotation needs owner=")
            ann[idx] = NodeRole(role, owner, partner)
        elif head == "edge":
            if len(tokens) != 3:
                raise ParseError(line_no, "edge needs two indices")
            edges.append(
                (_int(line_no, tokens[1]), _int(line_no, tokens[2]))
            )
        else:
            raise ParseError(line_no, f"unknown directive {head!r}")

    if not version_seen:
        raise ParseError(0, "missing format_version line")
    if kind is None:
        raise ParseError(0, "missing kind line")
    if unit != _UNITS[kind]:
        raise ParseError(
            0, f"kind {kind!r} requires unit {_UNITS[kind]!r}, got {unit!r}"
        )

    if kind == "grid":
        if points or ann or edges:
            raise ParseError(0, "grid instances carry only vertex lines")
        if not vertices:
            raise ParseError(0, "grid instance has no vertices")
        return Instance("grid", grid=GridGraph.from_vertices(vertices))

    if vertices:
        raise ParseError(0, "points instances carry only point lines")
    if not points:
        raise ParseError(0, "points instance has no points")
    annotations: Optional[tuple[NodeRole, ...]] = None
    if ann:
        if sorted(ann) != list(range(len(points))):
            raise ParseError(
                0, "node annotations must cover indices 0..n-1 exactly"
            )
        annotations = tuple(ann[i] for i in range(len(points)))
    try:
        nodes = NodeSet(tuple(points), annotations)
    except ValueError as exc:
        raise ParseError(0, str(exc)) from None
    tree: Optional[SpanningTree] = None
    if edges:
        for i, j in edges:
            if not (0 <= i < len(points) and 0 <= j < len(points)):
                raise ParseError(0, f"edge ({i},{j}) index out of range")
        tree = SpanningTree(tuple(edges))
    return Instance("points", nodes=nodes, tree=tree)


def serialize_instance(inst: Instance) -> str:
    lines = [
        f"format_version {FORMAT_VERSION}",
        f"kind {inst.kind}",
        f"unit {_UNITS[inst.kind]}",
    ]
    if inst.kind == "grid":
        assert inst.grid is not None
        for a, b in sorted(inst.grid.vertices):
            lines.append(f"vertex {a} {b}")
    else:
        assert inst.nodes is not None
        for p in inst.nodes.nodes:
            lines.append(f"point {p.x} {p.y}")
        if inst.nodes.annotations is not None:
            for i, a in enumerate(inst.nodes.annotations):
                line = f"node {i} {a.role} owner={a.owner[0]},{a.owner[1]}"
                if a.partner is not None:
                    line += f" partner={a.partner}"
                lines.append(line)
        if inst.tree is not None:
            for i, j in inst.tree.edges:
                lines.append(f"edge {i} {j}")
    return "\n".join(lines) + "\n"
