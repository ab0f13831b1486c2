"""Sample movable objects and their reconfiguration rules.

Every object here fulfils the same small contract: build a contour, move as
a whole, or move one contour node. The node-move methods hold all the
constraint arithmetic (minimum sizes, roof margins, ring gaps, panel
bounds); a rejected axis leaves the geometry untouched and the caller
learns about it through the boolean result.

Resizes and node drags answer the left button only. The right button is
reserved for rotation, which exists for ring sets (handled inside
RingSet.move_node) and for the chatoyant polygon (driven by the host
through chatoyant_rotate plus a mover entry swap).
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum

from .contour import (
    DEFAULT_SENSITIVITY,
    Connection,
    Contour,
    ContourNode,
    CursorHint,
    MovementFreedom,
    NodeShape,
    contour_from_nodes,
)
from .geometry import (
    Delta,
    Pt,
    Rect,
    iround,
    rotate_point,
    screen_angle_deg,
    wrap_angle_deg,
)


class MouseButton(Enum):
    LEFT = "L"
    RIGHT = "R"


class MovableObject(ABC):
    """Contract for anything the mover can drive.

    define_contour() must return a contour whose structure (ids, freedoms,
    connections) depends only on the object's configuration, and whose
    anchors reflect the current geometry.
    """

    @abstractmethod
    def define_contour(self) -> Contour: ...

    @property
    def current_contour(self) -> Contour:
        return self.define_contour()

    @abstractmethod
    def move(self, d: Delta) -> None:
        """Translate the whole object; never constrained."""

    @abstractmethod
    def move_node(
        self, node_id: int, d: Delta, mouse: Pt, button: MouseButton
    ) -> bool:
        """Try to move one node by d; True iff any axis was accepted.

        mouse is the absolute pointer position (rotation needs it; plain
        resizes ignore it). Implementations that rebuild their contour as a
        side effect document that the flag is advisory there.
        """


@dataclass
class HouseMinima:
    min_width: int = 40
    min_height: int = 30
    min_roof_side: int = 10
    min_roof_h: int = 10


@dataclass
class House(MovableObject):
    """Rectangle body with a triangular roof apex above it.

    Corner drags resize the body one edge per axis; the apex slides on its
    own but must stay min_roof_h above the body and min_roof_side clear of
    both side walls.
    """

    rect: Rect
    roof_top: Pt
    number: int = 0
    minima: HouseMinima = field(default_factory=HouseMinima)
    line_sensitivity: int = DEFAULT_SENSITIVITY

    def validate(self) -> None:
        m = self.minima
        if m.min_width < 2 * m.min_roof_side:
            raise ValueError("minima leave no room for the roof apex")
        if self.rect.width < m.min_width:
            raise ValueError("width below minimum")
        if self.rect.height < m.min_height:
            raise ValueError("height below minimum")
        if self.rect.top - self.roof_top.y < m.min_roof_h:
            raise ValueError("roof apex too low")
        if not (
            self.rect.left + m.min_roof_side
            <= self.roof_top.x
            <= self.rect.right - m.min_roof_side
        ):
            raise ValueError("roof apex outside side margins")

    def define_contour(self) -> Contour:
        r = self.rect
        corners = [
            Pt(r.left, r.top),
            Pt(r.right, r.top),
            Pt(r.right, r.bottom),
            Pt(r.left, r.bottom),
        ]
        nodes = [
            ContourNode(i, p, cursor=CursorHint.HAND)
            for i, p in enumerate(corners)
        ]
        nodes.append(ContourNode(4, self.roof_top, cursor=CursorHint.HAND))
        s = self.line_sensitivity
        conns = [
            Connection(0, 1, s),
            Connection(1, 2, s),
            Connection(2, 3, s),
            Connection(3, 0, s),
            Connection(0, 4, s),
            Connection(1, 4, s),
        ]
        return Contour(nodes, conns)

    def move(self, d: Delta) -> None:
        self.rect.translate(d)
        self.roof_top = self.roof_top + d

    def _clamp_roof_x(self) -> None:
        m = self.minima
        lo = self.rect.left + m.min_roof_side
        hi = self.rect.right - m.min_roof_side
        self.roof_top = Pt(min(max(self.roof_top.x, lo), hi), self.roof_top.y)

    def _resize_top(self, dy: int) -> bool:
        if self.rect.height - dy < self.minima.min_height:
            return False
        self.rect.top += dy
        self.rect.height -= dy
        self.roof_top = self.roof_top + Delta(0, dy)
        return True

    def _resize_bottom(self, dy: int) -> bool:
        if self.rect.height + dy < self.minima.min_height:
            return False
        self.rect.height += dy
        return True

    def _resize_left(self, dx: int) -> bool:
        if self.rect.width - dx < self.minima.min_width:
            return False
        self.rect.left += dx
        self.rect.width -= dx
        # the apex rides along with the moving wall, then the margins win
        self.roof_top = self.roof_top + Delta(dx, 0)
        self._clamp_roof_x()
        return True

    def _resize_right(self, dx: int) -> bool:
        if self.rect.width + dx < self.minima.min_width:
            return False
        self.rect.width += dx
        self._clamp_roof_x()
        return True

    def move_node(
        self, node_id: int, d: Delta, mouse: Pt, button: MouseButton
    ) -> bool:
        if button is not MouseButton.LEFT:
            return False
        m = self.minima
        if node_id == 0:
            applied = self._resize_top(d.dy)
            return self._resize_left(d.dx) or applied
        if node_id == 1:
            applied = self._resize_top(d.dy)
            return self._resize_right(d.dx) or applied
        if node_id == 2:
            applied = self._resize_bottom(d.dy)
            return self._resize_right(d.dx) or applied
        if node_id == 3:
            applied = self._resize_bottom(d.dy)
            return self._resize_left(d.dx) or applied
        if node_id == 4:
            applied = False
            if self.rect.top - (self.roof_top.y + d.dy) >= m.min_roof_h:
                self.roof_top = self.roof_top + Delta(0, d.dy)
                applied = True
            nx = self.roof_top.x + d.dx
            if (
                self.rect.left + m.min_roof_side
                <= nx
                <= self.rect.right - m.min_roof_side
            ):
                self.roof_top = Pt(nx, self.roof_top.y)
                applied = True
            return applied
        return False


class ScaleVariant(Enum):
    FRAME = "frame"
    MIDLINE = "midline"


@dataclass
class HScale(MovableObject):
    """Horizontally stretchable band between four borders.

    Only the two mid-side nodes are live; they slide the left or right
    border, keeping the width at or above min_width. The FRAME variant
    keeps four silent corner nodes pushed diagonally outward so that the
    connection ring runs just outside the borders; MIDLINE collapses the
    contour to one strip through the vertical middle.
    """

    cxL: int
    cxR: int
    cyT: int
    cyB: int
    shift: int = 8
    variant: ScaleVariant = ScaleVariant.FRAME
    min_width: int = 20
    line_sensitivity: int = DEFAULT_SENSITIVITY

    def validate(self) -> None:
        if self.cxL >= self.cxR:
            raise ValueError("cxL must be less than cxR")
        if self.cyT >= self.cyB:
            raise ValueError("cyT must be less than cyB")
        if self.cxR - self.cxL < self.min_width:
            raise ValueError("width below minimum")

    def define_contour(self) -> Contour:
        cyM = (self.cyT + self.cyB) // 2
        sh = self.shift
        none = MovementFreedom.NONE
        we = MovementFreedom.WE
        if self.variant is ScaleVariant.FRAME:
            nodes = [
                ContourNode(0, Pt(self.cxL, self.cyT), Delta(-sh, -sh), none),
                ContourNode(1, Pt(self.cxR, self.cyT), Delta(sh, -sh), none),
                ContourNode(
                    2, Pt(self.cxR, cyM), Delta(sh, 0), we, CursorHint.SIZE_WE
                ),
                ContourNode(3, Pt(self.cxR, self.cyB), Delta(sh, sh), none),
                ContourNode(4, Pt(self.cxL, self.cyB), Delta(-sh, sh), none),
                ContourNode(
                    5, Pt(self.cxL, cyM), Delta(-sh, 0), we, CursorHint.SIZE_WE
                ),
            ]
        else:
            nodes = [
                ContourNode(
                    0, Pt(self.cxR, cyM), Delta(sh, 0), we, CursorHint.SIZE_WE
                ),
                ContourNode(
                    1, Pt(self.cxL, cyM), Delta(-sh, 0), we, CursorHint.SIZE_WE
                ),
            ]
        return contour_from_nodes(nodes, self.line_sensitivity)

    def move(self, d: Delta) -> None:
        self.cxL += d.dx
        self.cxR += d.dx
        self.cyT += d.dy
        self.cyB += d.dy

    def move_node(
        self, node_id: int, d: Delta, mouse: Pt, button: MouseButton
    ) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if self.variant is ScaleVariant.FRAME:
            right_id, left_id = 2, 5
        else:
            right_id, left_id = 0, 1
        if node_id == right_id:
            if (self.cxR + d.dx) - self.cxL < self.min_width:
                return False
            self.cxR += d.dx
            return True
        if node_id == left_id:
            if self.cxR - (self.cxL + d.dx) < self.min_width:
                return False
            self.cxL += d.dx
            return True
        return False


class SquareContourKind(Enum):
    TWO_NODE = "two_node"
    FOUR_NODE = "four_node"
    ONE_NODE = "one_node"


@dataclass
class SquareObj(MovableObject):
    """Square that is only ever moved as a whole.

    TWO_NODE hides a 2-px segment in the middle under a strip wide enough
    to reach almost to the edges. FOUR_NODE pulls four silent nodes halfway
    toward the corners with half that strip width, trading a thinner strip
    for corner reach. ONE_NODE is one square handle covering everything.
    """

    rect: Rect
    contour_kind: SquareContourKind = SquareContourKind.TWO_NODE

    def validate(self) -> None:
        if self.rect.width != self.rect.height:
            raise ValueError("width and height must match")
        if self.contour_kind is SquareContourKind.ONE_NODE:
            if self.rect.width < 2:
                raise ValueError("width too small for the contour kind")
        elif self.rect.width < 4:
            raise ValueError("width too small for the contour kind")

    def define_contour(self) -> Contour:
        r = self.rect
        mid = Pt(r.left + r.width // 2, r.top + r.height // 2)
        none = MovementFreedom.NONE
        if self.contour_kind is SquareContourKind.TWO_NODE:
            sens = min(r.width, r.height) // 2 - 1
            nodes = [
                ContourNode(0, Pt(mid.x - 1, mid.y), freedom=none),
                ContourNode(1, Pt(mid.x + 1, mid.y), freedom=none),
            ]
            return contour_from_nodes(nodes, sens)
        if self.contour_kind is SquareContourKind.FOUR_NODE:
            sens = (min(r.width, r.height) // 2 - 1) // 2
            corners = [
                Pt(r.left, r.top),
                Pt(r.right, r.top),
                Pt(r.right, r.bottom),
                Pt(r.left, r.bottom),
            ]
            nodes = [
                ContourNode(
                    i, Pt((c.x + mid.x) // 2, (c.y + mid.y) // 2), freedom=none
                )
                for i, c in enumerate(corners)
            ]
            return contour_from_nodes(nodes, sens)
        handle = ContourNode(
            0,
            mid,
            cursor=CursorHint.HAND,
            sense_size=r.width // 2,
        )
        return Contour([handle], [])

    def move(self, d: Delta) -> None:
        self.rect.translate(d)

    def move_node(
        self, node_id: int, d: Delta, mouse: Pt, button: MouseButton
    ) -> bool:
        if self.contour_kind is not SquareContourKind.ONE_NODE:
            return False
        if button is not MouseButton.LEFT:
            return False
        self.move(d)
        return True


@dataclass
class RegularPolygonObj(MovableObject):
    """Regular polygon grabbed through one circle node over its whole disc."""

    center: Pt
    radius: int
    sides: int

    def validate(self) -> None:
        if self.radius < 1:
            raise ValueError("radius must be at least 1")
        if self.sides < 3:
            raise ValueError("sides must be at least 3")

    def define_contour(self) -> Contour:
        handle = ContourNode(
            0,
            self.center,
            cursor=CursorHint.HAND,
            shape=NodeShape.CIRCLE,
            sense_size=self.radius,
        )
        return Contour([handle], [])

    def move(self, d: Delta) -> None:
        self.center = self.center + d

    def move_node(
        self, node_id: int, d: Delta, mouse: Pt, button: MouseButton
    ) -> bool:
        if button is not MouseButton.LEFT:
            return False
        self.move(d)
        return True


@dataclass
class Ring:
    r_in: int
    r_out: int
    start_deg: int = 0
    values: list[float] = field(default_factory=lambda: [1.0, 1.0])


@dataclass
class RingMinima:
    min_inner_radius: int = 20
    min_ring_width: int = 8
    min_gap: int = 4


@dataclass
class Title:
    text: str = ""
    offset: Delta = Delta(0, 0)


@dataclass
class RingSet(MovableObject):
    """Concentric rings of value-weighted sectors around one center.

    Each sector boundary carries an inner and an outer node joined by a
    short radial strip, so the contour is a union of disjoint two-node
    segments. Left drags move a whole border circle in or out along the
    radius; right drags spin the grabbed ring, comparing the live mouse
    angle against the boundary angle cached at the last contour build and
    folding the rounded difference into start_deg.
    """

    center: Pt
    rings: list[Ring]
    title: Title = field(default_factory=Title)
    minima: RingMinima = field(default_factory=RingMinima)
    line_sensitivity: int = DEFAULT_SENSITIVITY
    # node id -> (ring index, is_outer, boundary angle in degrees);
    # refreshed by every define_contour, consumed by move_node
    _node_info: dict[int, tuple[int, bool, float]] = field(
        default_factory=dict, repr=False, compare=False
    )

    def validate(self) -> None:
        if not self.rings:
            raise ValueError("needs at least one ring")
        m = self.minima
        prev_out = None
        for k, ring in enumerate(self.rings):
            if len(ring.values) < 2:
                raise ValueError("ring needs at least 2 sectors")
            if any(v <= 0 for v in ring.values):
                raise ValueError("sector values must be positive")
            if ring.r_out - ring.r_in < m.min_ring_width:
                raise ValueError("ring width below minimum")
            if k == 0:
                if ring.r_in < m.min_inner_radius:
                    raise ValueError("inner radius below minimum")
            elif ring.r_in - prev_out < m.min_gap:
                raise ValueError("ring gap below minimum")
            prev_out = ring.r_out

    @staticmethod
    def boundary_angles(ring: Ring) -> list[float]:
        """Sector boundary angles, counterclockwise from start_deg."""
        total = float(sum(ring.values))
        acc = 0.0
        out = []
        for v in ring.values:
            out.append(ring.start_deg + 360.0 * acc / total)
            acc += v
        return out

    def define_contour(self) -> Contour:
        nodes: list[ContourNode] = []
        conns: list[Connection] = []
        info: dict[int, tuple[int, bool, float]] = {}
        nid = 0
        for k, ring in enumerate(self.rings):
            for theta in self.boundary_angles(ring):
                p_in = rotate_point(
                    self.center, Pt(self.center.x + ring.r_in, self.center.y), theta
                )
                p_out = rotate_point(
                    self.center, Pt(self.center.x + ring.r_out, self.center.y), theta
                )
                nodes.append(ContourNode(nid, p_in, cursor=CursorHint.HAND))
                info[nid] = (k, False, theta)
                nodes.append(ContourNode(nid + 1, p_out, cursor=CursorHint.HAND))
                info[nid + 1] = (k, True, theta)
                conns.append(Connection(nid, nid + 1, self.line_sensitivity))
                nid += 2
        self._node_info = info
        return Contour(nodes, conns)

    def move(self, d: Delta) -> None:
        # the title anchor is an offset from the center, so it rides along
        self.center = self.center + d

    def _apply_radius(self, ring_idx: int, is_outer: bool, new_r: int) -> bool:
        ring = self.rings[ring_idx]
        m = self.minima
        if is_outer:
            if new_r - ring.r_in < m.min_ring_width:
                return False
            if (
                ring_idx + 1 < len(self.rings)
                and self.rings[ring_idx + 1].r_in - new_r < m.min_gap
            ):
                return False
            ring.r_out = new_r
        else:
            if ring.r_out - new_r < m.min_ring_width:
                return False
            if ring_idx == 0:
                if new_r < m.min_inner_radius:
                    return False
            elif new_r - self.rings[ring_idx - 1].r_out < m.min_gap:
                return False
            ring.r_in = new_r
        return True

    def move_node(
        self, node_id: int, d: Delta, mouse: Pt, button: MouseButton
    ) -> bool:
        info = self._node_info.get(node_id)
        if info is None:
            return False
        ring_idx, is_outer, theta = info
        ring = self.rings[ring_idx]
        if button is MouseButton.RIGHT:
            if mouse == self.center:
                # angle undefined here; skip this event
                return False
            live = screen_angle_deg(self.center, mouse)
            delta = wrap_angle_deg(live - theta)
            if abs(delta) <= 1.0:
                return False
            ring.start_deg = (ring.start_deg + iround(delta)) % 360
            self.define_contour()
            return True
        tr = math.radians(theta)
        dr = d.dx * math.cos(tr) - d.dy * math.sin(tr)
        base = ring.r_out if is_outer else ring.r_in
        if not self._apply_radius(ring_idx, is_outer, iround(base + dr)):
            return False
        self.define_contour()
        return True


@dataclass
class ChatoyantPoly:
    """Free polygon whose apexes and center are all independent handles.

    Not a MovableObject itself: it is driven through a graph contour built
    by chatoyant_graph and registered on its behalf (see GraphMovable), the
    composition path of the engine.
    """

    points: list[Pt]
    center: Pt
    line_sensitivity: int = DEFAULT_SENSITIVITY

    def validate(self) -> None:
        if len(self.points) < 3:
            raise ValueError("needs at least 3 points")


def chatoyant_graph(poly: ChatoyantPoly) -> Contour:
    """Apex ring plus center spokes; node n is the center."""
    n = len(poly.points)
    nodes = [
        ContourNode(k, p, cursor=CursorHint.HAND)
        for k, p in enumerate(poly.points)
    ]
    nodes.append(ContourNode(n, poly.center, cursor=CursorHint.HAND))
    s = poly.line_sensitivity
    conns = [Connection(k, (k + 1) % n, s) for k in range(n)]
    conns += [Connection(n, k, s) for k in range(n)]
    return Contour(nodes, conns)


def chatoyant_update_from_graph(poly: ChatoyantPoly, graph: Contour) -> None:
    """Copy dragged node anchors back into the polygon's own fields."""
    n = len(poly.points)
    poly.points = [graph.node(k).anchor for k in range(n)]
    poly.center = graph.node(n).anchor


def chatoyant_rotate(
    poly: ChatoyantPoly, mouse_start: Pt, mouse_now: Pt
) -> ChatoyantPoly:
    """New polygon with every apex swung by the mouse's angle change."""
    delta = wrap_angle_deg(
        screen_angle_deg(poly.center, mouse_now)
        - screen_angle_deg(poly.center, mouse_start)
    )
    return ChatoyantPoly(
        [rotate_point(poly.center, p, delta) for p in poly.points],
        poly.center,
        poly.line_sensitivity,
    )


@dataclass
class GraphMovable(MovableObject):
    """Adapter that lets a bare contour behave as a movable entry.

    Node drags are unconditional shifts of the grabbed anchor; there is no
    constraint arithmetic. define_contour hands out copies so that the
    caller's cache and the live graph never alias.
    """

    graph: Contour

    def define_contour(self) -> Contour:
        return self.graph.copy()

    @property
    def current_contour(self) -> Contour:
        return self.graph

    def move(self, d: Delta) -> None:
        self.graph.translate(d)

    def move_node(
        self, node_id: int, d: Delta, mouse: Pt, button: MouseButton
    ) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if not self.graph.has_node(node_id):
            return False
        node = self.graph.node(node_id)
        node.anchor = node.anchor + d
        return True


class ContourResize(Enum):
    NONE = "none"
    NS = "ns"
    WE = "we"
    ANY = "any"


@dataclass
class PanelBounds:
    min_w: int = 1
    max_w: int = 10000
    min_h: int = 1
    max_h: int = 10000


# which rectangle edges a panel node drives, keyed by resize mode;
# entries are (freedom, cursor, left, right, top, bottom) in ring order
_PANEL_LAYOUTS = {
    ContourResize.NONE: ["LT", "RT", "RB", "LB"],
    ContourResize.WE: ["LT", "RT", "RM", "RB", "LB", "LM"],
    ContourResize.NS: ["LT", "TM", "RT", "RB", "BM", "LB"],
    ContourResize.ANY: ["LT", "TM", "RT", "RM", "RB", "BM", "LB", "LM"],
}

_PANEL_EDGES = {
    "LT": ("left", "top"),
    "RT": ("right", "top"),
    "RB": ("right", "bottom"),
    "LB": ("left", "bottom"),
    "TM": (None, "top"),
    "BM": (None, "bottom"),
    "RM": ("right", None),
    "LM": ("left", None),
}


@dataclass
class PanelProxy(MovableObject):
    """Rectangular stand-in for an embedded panel or control.

    The contour sits 3 px outside the rectangle. The resize mode decides
    which handles are live; width and height are clamped per axis into the
    configured bounds.
    """

    rect: Rect
    resize: ContourResize = ContourResize.NONE
    bounds: PanelBounds = field(default_factory=PanelBounds)
    line_sensitivity: int = DEFAULT_SENSITIVITY

    def validate(self) -> None:
        b = self.bounds
        if b.min_w < 1 or b.min_h < 1:
            raise ValueError("bounds must be positive")
        if b.min_w > b.max_w or b.min_h > b.max_h:
            raise ValueError("bounds minimum exceeds maximum")
        if not b.min_w <= self.rect.width <= b.max_w:
            raise ValueError("width outside bounds")
        if not b.min_h <= self.rect.height <= b.max_h:
            raise ValueError("height outside bounds")

    def _node_spec(self, role: str) -> tuple[Pt, Delta, MovementFreedom, CursorHint]:
        r = self.rect
        out = 3
        xm = (r.left + r.right) // 2
        ym = (r.top + r.bottom) // 2
        anchors = {
            "LT": (Pt(r.left, r.top), Delta(-out, -out)),
            "RT": (Pt(r.right, r.top), Delta(out, -out)),
            "RB": (Pt(r.right, r.bottom), Delta(out, out)),
            "LB": (Pt(r.left, r.bottom), Delta(-out, out)),
            "TM": (Pt(xm, r.top), Delta(0, -out)),
            "BM": (Pt(xm, r.bottom), Delta(0, out)),
            "RM": (Pt(r.right, ym), Delta(out, 0)),
            "LM": (Pt(r.left, ym), Delta(-out, 0)),
        }
        anchor, offset = anchors[role]
        if role in ("TM", "BM"):
            return anchor, offset, MovementFreedom.NS, CursorHint.SIZE_NS
        if role in ("RM", "LM"):
            return anchor, offset, MovementFreedom.WE, CursorHint.SIZE_WE
        if self.resize is ContourResize.ANY:
            return anchor, offset, MovementFreedom.ANY, CursorHint.SIZE_ALL
        return anchor, offset, MovementFreedom.NONE, CursorHint.DEFAULT

    def define_contour(self) -> Contour:
        nodes = []
        for i, role in enumerate(_PANEL_LAYOUTS[self.resize]):
            anchor, offset, freedom, cursor = self._node_spec(role)
            nodes.append(ContourNode(i, anchor, offset, freedom, cursor))
        return contour_from_nodes(nodes, self.line_sensitivity)

    def move(self, d: Delta) -> None:
        self.rect.translate(d)

    def move_node(
        self, node_id: int, d: Delta, mouse: Pt, button: MouseButton
    ) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if self.resize is ContourResize.NONE:
            return False
        roles = _PANEL_LAYOUTS[self.resize]
        if not 0 <= node_id < len(roles):
            return False
        horiz, vert = _PANEL_EDGES[roles[node_id]]
        b = self.bounds
        r = self.rect
        applied = False
        if horiz == "left":
            new_w = r.width - d.dx
            if b.min_w <= new_w <= b.max_w:
                r.left += d.dx
                r.width = new_w
                applied = True
        elif horiz == "right":
            new_w = r.width + d.dx
            if b.min_w <= new_w <= b.max_w:
                r.width = new_w
                applied = True
        if vert == "top":
            new_h = r.height - d.dy
            if b.min_h <= new_h <= b.max_h:
                r.top += d.dy
                r.height = new_h
                applied = True
        elif vert == "bottom":
            new_h = r.height + d.dy
            if b.min_h <= new_h <= b.max_h:
                r.height = new_h
                applied = True
        return applied
