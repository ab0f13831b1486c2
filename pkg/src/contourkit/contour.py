"""The contour model: sensitive nodes, connections, and hit testing.

A contour is the skeleton an object exposes for direct manipulation. It is
not a copy of the object's shape: nodes are small grab handles that can be
dragged individually to reconfigure the object, and connections are thin
strips between nodes that grab the object as a whole. The contour is the
only representation the drag engine ever hit-tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

from .geometry import Delta, Pt, Seg

DEFAULT_NODE_SIZE = 3
DEFAULT_SENSITIVITY = 3


def _strip_contains(p: Pt, a: Pt, b: Pt, r: int) -> bool:
    """Exact integer test: distance from p to segment ab is <= r.

    Comparing squared quantities keeps boundary points (the inclusive <=)
    stable on the pixel grid; a float distance could tip either way there.
    """
    if r < 0:
        return False
    abx, aby = b.x - a.x, b.y - a.y
    apx, apy = p.x - a.x, p.y - a.y
    ab2 = abx * abx + aby * aby
    dot = apx * abx + apy * aby
    if ab2 == 0 or dot <= 0:
        return apx * apx + apy * apy <= r * r
    if dot >= ab2:
        bpx, bpy = p.x - b.x, p.y - b.y
        return bpx * bpx + bpy * bpy <= r * r
    cross = apx * aby - apy * abx
    return cross * cross <= r * r * ab2


class MovementFreedom(Enum):
    """How a node may be dragged on its own.

    Whatever the freedom, every node follows whole-object moves; this only
    constrains individual reconfiguration drags. NONE removes the node's
    sense area entirely.
    """

    NONE = "none"
    NS = "ns"
    WE = "we"
    ANY = "any"


class NodeShape(Enum):
    SQUARE = "square"
    CIRCLE = "circle"


class CursorHint(Enum):
    """Advisory cursor shape over a node; never affects hit testing."""

    DEFAULT = "default"
    HAND = "hand"
    SIZE_ALL = "size_all"
    SIZE_WE = "size_we"
    SIZE_NS = "size_ns"


@dataclass
class ContourNode:
    """One sensitive handle of a contour.

    The anchor is the real point on the object; the sense area is a square
    (Chebyshev) or circle (Euclidean) of half-extent/radius sense_size,
    centered at anchor + sense_offset. Nodes with freedom NONE have no sense
    area and are never drawn.
    """

    id: int
    anchor: Pt
    sense_offset: Delta = Delta(0, 0)
    freedom: MovementFreedom = MovementFreedom.ANY
    cursor: CursorHint = CursorHint.DEFAULT
    shape: NodeShape = NodeShape.SQUARE
    sense_size: int = DEFAULT_NODE_SIZE
    clearance: bool = True

    @property
    def sense_center(self) -> Pt:
        return self.anchor + self.sense_offset

    def contains(self, p: Pt) -> bool:
        """Inclusive sense-area containment; always False for freedom NONE."""
        if self.freedom is MovementFreedom.NONE:
            return False
        c = self.sense_center
        dx, dy = p.x - c.x, p.y - c.y
        if self.shape is NodeShape.SQUARE:
            return max(abs(dx), abs(dy)) <= self.sense_size
        return dx * dx + dy * dy <= self.sense_size * self.sense_size


@dataclass
class Connection:
    """A grab strip between two nodes, sensitivity pixels to each side."""

    i: int
    j: int
    sensitivity: int = DEFAULT_SENSITIVITY


@dataclass(frozen=True)
class NodeMarker:
    """Drawable handle marker: filled white inside when clearance is set."""

    center: Pt
    shape: NodeShape
    size: int
    clearance: bool


@dataclass(frozen=True)
class ContourDrawables:
    """Render-ready contour geometry; markers omit freedom-NONE nodes."""

    segments: list[Seg]
    markers: list[NodeMarker]


@dataclass
class Contour:
    """Nodes plus connections; validated on construction.

    Node ids must be exactly the range [0, node_count - 1], in any order, and
    every connection must join two distinct existing nodes.
    """

    nodes: list[ContourNode]
    connections: list[Connection] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.nodes:
            raise ValueError("contour needs at least one node")
        ids = {n.id for n in self.nodes}
        if ids != set(range(len(self.nodes))):
            raise ValueError("invalid node numbering")
        for n in self.nodes:
            if n.freedom is not MovementFreedom.NONE and n.sense_size < 1:
                raise ValueError("node sense size must be at least 1")
        for c in self.connections:
            if c.i == c.j:
                raise ValueError("connection endpoints must differ")
            if c.i not in ids or c.j not in ids:
                raise ValueError("connection references unknown node")

    def node(self, node_id: int) -> ContourNode:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise KeyError(node_id)

    def has_node(self, node_id: int) -> bool:
        return any(n.id == node_id for n in self.nodes)

    def copy(self) -> "Contour":
        return Contour(
            [replace(n) for n in self.nodes],
            [replace(c) for c in self.connections],
        )

    def set_line_sensitivity(self, px: int) -> None:
        """Widen or narrow every connection strip at once."""
        for c in self.connections:
            c.sensitivity = px

    def hit_node(self, p: Pt) -> int | None:
        """Id of the first node (collection order) whose sense area holds p."""
        for n in self.nodes:
            if n.contains(p):
                return n.id
        return None

    def connection_seg(self, c: Connection) -> Seg:
        return Seg(self.node(c.i).sense_center, self.node(c.j).sense_center)

    def hit_connection(self, p: Pt) -> int | None:
        """Index of the first connection whose strip holds p (inclusive)."""
        for k, c in enumerate(self.connections):
            seg = self.connection_seg(c)
            if _strip_contains(p, seg.a, seg.b, c.sensitivity):
                return k
        return None

    def translate(self, d: Delta) -> None:
        """Shift every node anchor; offsets, sizes, sensitivities unchanged."""
        for n in self.nodes:
            n.anchor = n.anchor + d

    def drawables(self) -> ContourDrawables:
        """Geometry for the renderer; the color is the engine's, not ours."""
        segments = [self.connection_seg(c) for c in self.connections]
        markers = [
            NodeMarker(n.sense_center, n.shape, n.sense_size, n.clearance)
            for n in self.nodes
            if n.freedom is not MovementFreedom.NONE
        ]
        return ContourDrawables(segments, markers)


def contour_from_nodes(
    nodes: list[ContourNode], sensitivity: int = DEFAULT_SENSITIVITY
) -> Contour:
    """Build a contour with an automatic connection ring.

    Each node in the list is linked to the next and the last back to the
    first. A single node gets no connections; two nodes get exactly one
    (the closing edge would duplicate the forward one).
    """
    conns: list[Connection] = []
    n = len(nodes)
    if n == 2:
        conns.append(Connection(nodes[0].id, nodes[1].id, sensitivity))
    elif n > 2:
        for k in range(n - 1):
            conns.append(Connection(nodes[k].id, nodes[k + 1].id, sensitivity))
        conns.append(Connection(nodes[-1].id, nodes[0].id, sensitivity))
    return Contour(list(nodes), conns)
