"""Scene files and pointer-event scripts.

Scenes are JSON documents with a fixed key order and integer coordinates,
so that saving the same state twice gives the same bytes and golden files
diff cleanly. Event scripts are plain lines (`down x y L`, `move x y`,
`up`) that replay() feeds straight into a mover, which makes any recorded
interaction reproducible headlessly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .contour import DEFAULT_SENSITIVITY
from .geometry import Delta, Pt, Rect
from .movables import (
    ChatoyantPoly,
    ContourResize,
    GraphMovable,
    House,
    HouseMinima,
    HScale,
    MouseButton,
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
    chatoyant_update_from_graph,
)
from .mover import DEFAULT_CONTOUR_COLOR, Mover

SceneObject = (
    House
    | HScale
    | SquareObj
    | RegularPolygonObj
    | RingSet
    | ChatoyantPoly
    | PanelProxy
)


class SceneError(ValueError):
    """Malformed or invariant-violating scene text."""


class EventScriptError(ValueError):
    """Malformed event-script text."""


@dataclass
class SceneConfig:
    connection_sensitivity_default: int = DEFAULT_SENSITIVITY
    contour_color: str = DEFAULT_CONTOUR_COLOR
    house_minima: HouseMinima | None = None
    ring_minima: RingMinima | None = None


@dataclass
class Scene:
    """Objects in stacking order (index 0 topmost) plus shared settings."""

    objects: list[SceneObject] = field(default_factory=list)
    config: SceneConfig = field(default_factory=SceneConfig)


# ---------------------------------------------------------------------------
# parsing helpers


def _check_keys(label: str, rec: dict, allowed: tuple[str, ...]) -> None:
    for k in rec:
        if k not in allowed:
            raise SceneError(f"{label}: unknown field '{k}'")


def _get(label: str, rec: dict, key: str):
    if key not in rec:
        raise SceneError(f"{label}: missing field '{key}'")
    return rec[key]


def _int(label: str, name: str, v) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise SceneError(f"{label}: field '{name}' must be an integer")
    return v

def _req_int(label: str, rec: dict, key: str) -> int:
    return _int(label, key, _get(label, rec, key))


def _req_str(label: str, rec: dict, key: str) -> str:
    v = _get(label, rec, key)
    if not isinstance(v, str):
        raise SceneError(f"{label}: field '{key}' must be a string")
    return v


def _pt(label: str, rec: dict, key: str) -> Pt:
    v = _get(label, rec, key)
    if not isinstance(v, dict):
        raise SceneError(f"{label}: field '{key}' must be a point object")
    _check_keys(f"{label}.{key}", v, ("x", "y"))
    return Pt(_req_int(f"{label}.{key}", v, "x"), _req_int(f"{label}.{key}", v, "y"))


def _delta(label: str, rec: dict, key: str) -> Delta:
    v = _get(label, rec, key)
    if not isinstance(v, dict):
        raise SceneError(f"{label}: field '{key}' must be an offset object")
    _check_keys(f"{label}.{key}", v, ("dx", "dy"))
    return Delta(
        _req_int(f"{label}.{key}", v, "dx"), _req_int(f"{label}.{key}", v, "dy")
    )


def _rect(label: str, rec: dict, key: str = "rect") -> Rect:
    v = _get(label, rec, key)
    if not isinstance(v, dict):
        raise SceneError(f"{label}: field '{key}' must be a rectangle object")
    sub = f"{label}.{key}"
    _check_keys(sub, v, ("left", "top", "width", "height"))
    return Rect(
        _req_int(sub, v, "left"),
        _req_int(sub, v, "top"),
        _req_int(sub, v, "width"),
        _req_int(sub, v, "height"),
    )


def _enum(label: str, rec: dict, key: str, enum_cls):
    v = _req_str(label, rec, key)
    for member in enum_cls:
        if member.value == v:
            return member
    choices = "|".join(m.value for m in enum_cls)
    raise SceneError(f"{label}: field '{key}' must be one of {choices}")


def _house_minima(label: str, rec: dict) -> HouseMinima:
    _check_keys(
        label, rec, ("min_width", "min_height", "min_roof_side", "min_roof_h")
    )
    return HouseMinima(
        _req_int(label, rec, "min_width"),
        _req_int(label, rec, "min_height"),
        _req_int(label, rec, "min_roof_side"),
        _req_int(label, rec, "min_roof_h"),
    )


def _ring_minima(label: str, rec: dict) -> RingMinima:
    _check_keys(label, rec, ("min_inner_radius", "min_ring_width", "min_gap"))
    return RingMinima(
        _req_int(label, rec, "min_inner_radius"),
        _req_int(label, rec, "min_ring_width"),
        _req_int(label, rec, "min_gap"),
    )


# ---------------------------------------------------------------------------
# per-kind record loaders


def _load_house(label: str, rec: dict, cfg: SceneConfig) -> House:
    _check_keys(label, rec, ("kind", "number", "rect", "roof_top", "minima"))
    if "minima" in rec:
        minima = _house_minima(f"{label}.minima", _get(label, rec, "minima"))
    elif cfg.house_minima is not None:
        minima = HouseMinima(**vars(cfg.house_minima))
    else:
        minima = HouseMinima()
    return House(
        rect=_rect(label, rec),
        roof_top=_pt(label, rec, "roof_top"),
        number=_int(label, "number", rec.get("number", 0)),
        minima=minima,
        line_sensitivity=cfg.connection_sensitivity_default,
    )


def _load_scale(label: str, rec: dict, cfg: SceneConfig) -> HScale:
    _check_keys(label, rec, ("kind", "bounds", "shift", "variant", "min_width"))
    b = _get(label, rec, "bounds")
    if not isinstance(b, dict):
        raise SceneError(f"{label}: field 'bounds' must be an object")
    sub = f"{label}.bounds"
    _check_keys(sub, b, ("cxL", "cxR", "cyT", "cyB"))
    return HScale(
        cxL=_req_int(sub, b, "cxL"),
        cxR=_req_int(sub, b, "cxR"),
        cyT=_req_int(sub, b, "cyT"),
        cyB=_req_int(sub, b, "cyB"),
        shift=_int(label, "shift", rec.get("shift", 8)),
        variant=_enum(label, rec, "variant", ScaleVariant)
        if "variant" in rec
        else ScaleVariant.FRAME,
        min_width=_int(label, "min_width", rec.get("min_width", 20)),
        line_sensitivity=cfg.connection_sensitivity_default,
    )


def _load_square(label: str, rec: dict, cfg: SceneConfig) -> SquareObj:
    _check_keys(label, rec, ("kind", "rect", "contour_kind"))
    return SquareObj(
        rect=_rect(label, rec),
        contour_kind=_enum(label, rec, "contour_kind", SquareContourKind),
    )


def _load_polygon(label: str, rec: dict, cfg: SceneConfig) -> RegularPolygonObj:
    _check_keys(label, rec, ("kind", "center", "radius", "sides"))
    return RegularPolygonObj(
        center=_pt(label, rec, "center"),
        radius=_req_int(label, rec, "radius"),
        sides=_req_int(label, rec, "sides"),
    )


def _load_ring(label: str, rec: dict) -> Ring:
    _check_keys(label, rec, ("r_in", "r_out", "start_deg", "values"))
    values = _get(label, rec, "values")
    if not isinstance(values, list) or not all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in values
    ):
        raise SceneError(f"{label}: field 'values' must be a list of numbers")
    return Ring(
        r_in=_req_int(label, rec, "r_in"),
        r_out=_req_int(label, rec, "r_out"),
        start_deg=_int(label, "start_deg", rec.get("start_deg", 0)),
        values=list(values),
    )


def _load_rings(label: str, rec: dict, cfg: SceneConfig) -> RingSet:
    _check_keys(label, rec, ("kind", "center", "rings", "title", "minima"))
    raw_rings = _get(label, rec, "rings")
    if not isinstance(raw_rings, list):
        raise SceneError(f"{label}: field 'rings' must be a list")
    rings = []
    for k, r in enumerate(raw_rings):
        if not isinstance(r, dict):
            raise SceneError(f"{label}.rings[{k}]: must be an object")
        rings.append(_load_ring(f"{label}.rings[{k}]", r))
    if "title" in rec:
        t = rec["title"]
        if not isinstance(t, dict):
            raise SceneError(f"{label}: field 'title' must be an object")
        _check_keys(f"{label}.title", t, ("text", "offset"))
        title = Title(
            text=_req_str(f"{label}.title", t, "text"),
            offset=_delta(f"{label}.title", t, "offset")
            if "offset" in t
            else Delta(0, 0),
        )
    else:
        title = Title()
    if "minima" in rec:
        minima = _ring_minima(f"{label}.minima", _get(label, rec, "minima"))
    elif cfg.ring_minima is not None:
        minima = RingMinima(**vars(cfg.ring_minima))
    else:
        minima = RingMinima()
    return RingSet(
        center=_pt(label, rec, "center"),
        rings=rings,
        title=title,
        minima=minima,
        line_sensitivity=cfg.connection_sensitivity_default,
    )


def _load_chatoyant(label: str, rec: dict, cfg: SceneConfig) -> ChatoyantPoly:
    _check_keys(label, rec, ("kind", "points", "center"))
    raw = _get(label, rec, "points")
    if not isinstance(raw, list):
        raise SceneError(f"{label}: field 'points' must be a list")
    points = []
    for k, p in enumerate(raw):
        sub = f"{label}.points[{k}]"
        if not isinstance(p, dict):
            raise SceneError(f"{sub}: must be a point object")
        _check_keys(sub, p, ("x", "y"))
        points.append(Pt(_req_int(sub, p, "x"), _req_int(sub, p, "y")))
    return ChatoyantPoly(
        points=points,
        center=_pt(label, rec, "center"),
        line_sensitivity=cfg.connection_sensitivity_default,
    )


def _load_panel(label: str, rec: dict, cfg: SceneConfig) -> PanelProxy:
    _check_keys(label, rec, ("kind", "rect", "resize", "bounds"))
    b = _get(label, rec, "bounds")
    if not isinstance(b, dict):
        raise SceneError(f"{label}: field 'bounds' must be an object")
    sub = f"{label}.bounds"
    _check_keys(sub, b, ("min_w", "max_w", "min_h", "max_h"))
    return PanelProxy(
        rect=_rect(label, rec),
        resize=_enum(label, rec, "resize", ContourResize),
        bounds=PanelBounds(
            _req_int(sub, b, "min_w"),
            _req_int(sub, b, "max_w"),
            _req_int(sub, b, "min_h"),
            _req_int(sub, b, "max_h"),
        ),
        line_sensitivity=cfg.connection_sensitivity_default,
    )


_LOADERS = {
    "house": _load_house,
    "scale": _load_scale,
    "square": _load_square,
    "polygon": _load_polygon,
    "rings": _load_rings,
    "chatoyant": _load_chatoyant,
    "panel": _load_panel,
}


def _load_config(rec: dict) -> SceneConfig:
    _check_keys(
        "config",
        rec,
        (
            "connection_sensitivity_default",
            "contour_color",
            "house_minima",
            "ring_minima",
        ),
    )
    cfg = SceneConfig()
    if "connection_sensitivity_default" in rec:
        v = _int(
            "config",
            "connection_sensitivity_default",
            rec["connection_sensitivity_default"],
        )
        if v < 0:
            raise SceneError(
                "config: connection_sensitivity_default must not be negative"
            )
        cfg.connection_sensitivity_default = v
    if "contour_color" in rec:
        if not isinstance(rec["contour_color"], str):
            raise SceneError("config: field 'contour_color' must be a string")
        cfg.contour_color = rec["contour_color"]
    if "house_minima" in rec:
        cfg.house_minima = _house_minima("config.house_minima", rec["house_minima"])
    if "ring_minima" in rec:
        cfg.ring_minima = _ring_minima("config.ring_minima", rec["ring_minima"])
    return cfg


def load_scene(text: str) -> Scene:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SceneError(f"parse error at line {e.lineno}: {e.msg}") from e
    if not isinstance(doc, dict):
        raise SceneError("scene must be a JSON object")
    _check_keys("scene", doc, ("objects", "config"))
    raw_cfg = doc.get("config", {})
    if not isinstance(raw_cfg, dict):
        raise SceneError("config must be an object")
    cfg = _load_config(raw_cfg)
    raw_objects = _get("scene", doc, "objects")
    if not isinstance(raw_objects, list):
        raise SceneError("field 'objects' must be a list")
    objects: list[SceneObject] = []
    for i, rec in enumerate(raw_objects):
        if not isinstance(rec, dict):
            raise SceneError(f"objects[{i}]: must be an object")
        kind = rec.get("kind")
        if kind not in _LOADERS:
            raise SceneError(f"objects[{i}]: unknown kind {kind!r}")
        label = f"{kind}[{i}]"
        obj = _LOADERS[kind](label, rec, cfg)
        try:
            obj.validate()
        except ValueError as e:
            raise SceneError(f"{label}: {e}") from e
        objects.append(obj)
    return Scene(objects, cfg)


# ---------------------------------------------------------------------------
# saving


def _pt_doc(p: Pt) -> dict:
    return {"x": p.x, "y": p.y}


def _delta_doc(d: Delta) -> dict:
    return {"dx": d.dx, "dy": d.dy}


def _rect_doc(r: Rect) -> dict:
    return {"left": r.left, "top": r.top, "width": r.width, "height": r.height}


def _number(v):
    # integers stay integers; integral floats are written without the dot
    if isinstance(v, float) and v.is_integer():
        return int(v)
    return v


def _object_doc(obj: SceneObject) -> dict:
    if isinstance(obj, House):
        return {
            "kind": "house",
            "number": obj.number,
            "rect": _rect_doc(obj.rect),
            "roof_top": _pt_doc(obj.roof_top),
            "minima": {
                "min_width": obj.minima.min_width,
                "min_height": obj.minima.min_height,
                "min_roof_side": obj.minima.min_roof_side,
                "min_roof_h": obj.minima.min_roof_h,
            },
        }
    if isinstance(obj, HScale):
        return {
            "kind": "scale",
            "bounds": {
                "cxL": obj.cxL,
                "cxR": obj.cxR,
                "cyT": obj.cyT,
                "cyB": obj.cyB,
            },
            "shift": obj.shift,
            "variant": obj.variant.value,
            "min_width": obj.min_width,
        }
    if isinstance(obj, SquareObj):
        return {
            "kind": "square",
            "rect": _rect_doc(obj.rect),
            "contour_kind": obj.contour_kind.value,
        }
    if isinstance(obj, RegularPolygonObj):
        return {
            "kind": "polygon",
            "center": _pt_doc(obj.center),
            "radius": obj.radius,
            "sides": obj.sides,
        }
    if isinstance(obj, RingSet):
        return {
            "kind": "rings",
            "center": _pt_doc(obj.center),
            "rings": [
                {
                    "r_in": r.r_in,
                    "r_out": r.r_out,
                    "start_deg": r.start_deg,
                    "values": [_number(v) for v in r.values],
                }
                for r in obj.rings
            ],
            "title": {
                "text": obj.title.text,
                "offset": _delta_doc(obj.title.offset),
            },
            "minima": {
                "min_inner_radius": obj.minima.min_inner_radius,
                "min_ring_width": obj.minima.min_ring_width,
                "min_gap": obj.minima.min_gap,
            },
        }
    if isinstance(obj, ChatoyantPoly):
        return {
            "kind": "chatoyant",
            "points": [_pt_doc(p) for p in obj.points],
            "center": _pt_doc(obj.center),
        }
    if isinstance(obj, PanelProxy):
        return {
            "kind": "panel",
            "rect": _rect_doc(obj.rect),
            "resize": obj.resize.value,
            "bounds": {
                "min_w": obj.bounds.min_w,
                "max_w": obj.bounds.max_w,
                "min_h": obj.bounds.min_h,
                "max_h": obj.bounds.max_h,
            },
        }
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def save_scene(scene: Scene) -> str:
    cfg_doc: dict = {
        "connection_sensitivity_default": scene.config.connection_sensitivity_default,
        "contour_color": scene.config.contour_color,
    }
    if scene.config.house_minima is not None:
        hm = scene.config.house_minima
        cfg_doc["house_minima"] = {
            "min_width": hm.min_width,
            "min_height": hm.min_height,
            "min_roof_side": hm.min_roof_side,
            "min_roof_h": hm.min_roof_h,
        }
    if scene.config.ring_minima is not None:
        rm = scene.config.ring_minima
        cfg_doc["ring_minima"] = {
            "min_inner_radius": rm.min_inner_radius,
            "min_ring_width": rm.min_ring_width,
            "min_gap": rm.min_gap,
        }
    doc = {
        "objects": [_object_doc(o) for o in scene.objects],
        "config": cfg_doc,
    }
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# event scripts


@dataclass(frozen=True)
class DownEvent:
    x: int
    y: int
    button: MouseButton


@dataclass(frozen=True)
class MoveEvent:
    x: int
    y: int


@dataclass(frozen=True)
class UpEvent:
    pass


Event = DownEvent | MoveEvent | UpEvent


def _event_int(lineno: int, tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise EventScriptError(
            f"line {lineno}: malformed event: {tok!r} is not an integer"
        ) from None


def parse_events(text: str) -> list[Event]:
    events: list[Event] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        verb = parts[0]
        if verb == "down":
            if len(parts) != 4:
                raise EventScriptError(
                    f"line {lineno}: malformed event: expected 'down <x> <y> <L|R>'"
                )
            if parts[3] == "L":
                button = MouseButton.LEFT
            elif parts[3] == "R":
                button = MouseButton.RIGHT
            else:
                raise EventScriptError(
                    f"line {lineno}: malformed event: button must be L or R"
                )
            events.append(
                DownEvent(_event_int(lineno, parts[1]), _event_int(lineno, parts[2]), button)
            )
        elif verb == "move":
            if len(parts) != 3:
                raise EventScriptError(
                    f"line {lineno}: malformed event: expected 'move <x> <y>'"
                )
            events.append(
                MoveEvent(_event_int(lineno, parts[1]), _event_int(lineno, parts[2]))
            )
        elif verb == "up":
            if len(parts) != 1:
                raise EventScriptError(
                    f"line {lineno}: malformed event: expected 'up'"
                )
            events.append(UpEvent())
        else:
            raise EventScriptError(f"line {lineno}: unknown event verb {verb!r}")
    return events


def format_events(events: list[Event]) -> str:
    lines = []
    for ev in events:
        if isinstance(ev, DownEvent):
            lines.append(f"down {ev.x} {ev.y} {ev.button.value}")
        elif isinstance(ev, MoveEvent):
            lines.append(f"move {ev.x} {ev.y}")
        else:
            lines.append("up")
    return "".join(line + "\n" for line in lines)


# ---------------------------------------------------------------------------
# replay


def build_mover(scene: Scene) -> tuple[Mover, list[tuple[ChatoyantPoly, GraphMovable]]]:
    """Mover over the scene's objects, in stacking order.

    Chatoyant polygons register through a graph wrapper; the returned sync
    list ties each polygon to its wrapper so drags can be copied back.
    """
    mover = Mover(scene.config.contour_color)
    syncs: list[tuple[ChatoyantPoly, GraphMovable]] = []
    for obj in scene.objects:
        if isinstance(obj, ChatoyantPoly):
            wrapper = GraphMovable(chatoyant_graph(obj))
            mover.add(wrapper)
            syncs.append((obj, wrapper))
        else:
            mover.add(obj)
    return mover, syncs


def replay(scene: Scene, events: list[Event]) -> Scene:
    """Feed the script through a fresh mover; mutates and returns scene."""
    mover, syncs = build_mover(scene)
    for ev in events:
        if isinstance(ev, DownEvent):
            mover.catch(Pt(ev.x, ev.y), ev.button)
        elif isinstance(ev, MoveEvent):
            mover.moving(Pt(ev.x, ev.y))
        else:
            mover.release()
    for poly, wrapper in syncs:
        chatoyant_update_from_graph(poly, wrapper.graph)
    return scene
