"""Contour-driven manipulation of 2D scene objects.

Objects expose a contour (sensitive nodes joined by grab strips) and three
operations: rebuild the contour, move whole, move one node. The Mover turns
pointer events into those calls; scene_io makes every session replayable.
"""

from .contour import (
    Connection,
    Contour,
    ContourDrawables,
    ContourNode,
    CursorHint,
    MovementFreedom,
    NodeMarker,
    NodeShape,
    contour_from_nodes,
)
from .geometry import (
    Delta,
    Pt,
    Rect,
    Seg,
    dist_point_segment,
    iround,
    rotate_point,
    screen_angle_deg,
    wrap_angle_deg,
)
from .movables import (
    ChatoyantPoly,
    ContourResize,
    GraphMovable,
    House,
    HouseMinima,
    HScale,
    MouseButton,
    MovableObject,
    PanelBounds,
    PanelProxy,
    RegularPolygonObj,
    Ring,
    RingMinima,
    RingSet,
    ScaleVariant,
    SquareContourKind,
    SquareObj,
    Title,
    chatoyant_graph,
    chatoyant_rotate,
    chatoyant_update_from_graph,
)
from .mover import CaughtConnection, CaughtNode, Mover, MoverEntry
from .scene_io import (
    DownEvent,
    EventScriptError,
    MoveEvent,
    Scene,
    SceneConfig,
    SceneError,
    UpEvent,
    build_mover,
    format_events,
    load_scene,
    parse_events,
    replay,
    save_scene,
)

__version__ = "0.1.0"

__all__ = [
    "CaughtConnection",
    "CaughtNode",
    "ChatoyantPoly",
    "Connection",
    "Contour",
    "ContourDrawables",
    "ContourNode",
    "ContourResize",
    "CursorHint",
    "Delta",
    "DownEvent",
    "EventScriptError",
    "GraphMovable",
    "House",
    "HouseMinima",
    "HScale",
    "MouseButton",
    "MovableObject",
    "MoveEvent",
    "MovementFreedom",
    "Mover",
    "MoverEntry",
    "NodeMarker",
    "NodeShape",
    "PanelBounds",
    "PanelProxy",
    "Pt",
    "Rect",
    "RegularPolygonObj",
    "Ring",
    "RingMinima",
    "RingSet",
    "ScaleVariant",
    "Scene",
    "SceneConfig",
    "SceneError",
    "Seg",
    "SquareContourKind",
    "SquareObj",
    "Title",
    "UpEvent",
    "build_mover",
    "chatoyant_graph",
    "chatoyant_rotate",
    "chatoyant_update_from_graph",
    "contour_from_nodes",
    "dist_point_segment",
    "format_events",
    "iround",
    "load_scene",
    "parse_events",
    "replay",
    "rotate_point",
    "save_scene",
    "screen_angle_deg",
    "wrap_angle_deg",
]
