#!/usr/bin/env python3
"""JSON-lines stdio server exposing the contourkit mover to the browser demo.

One request object per line on stdin, one response object per line on stdout.
Every response carries "ok"; failures keep the previous state intact, so a
bad scene upload never strands the client without a scene.

Ops: load, catch, moving, release, cursor, drawables, save, body_at, to_top.
"""

from __future__ import annotations

import json
import sys
from typing import Any

from contourkit import (
    ChatoyantPoly,
    GraphMovable,
    House,
    HScale,
    MouseButton,
    Mover,
    PanelProxy,
    Pt,
    Rect,
    RegularPolygonObj,
    RingSet,
    Scene,
    SceneError,
    SquareObj,
    build_mover,
    chatoyant_update_from_graph,
    load_scene,
    save_scene,
)


class EngineState:
    """Current scene plus the mover built over it.

    `order[i]` is the scene index behind mover entry i; to_top permutes the
    mover (and this list) while scene.objects keeps its original order, so
    saves stay byte-comparable with the scene the client originally loaded.
    """

    def __init__(self, scene: Scene) -> None:
        self.scene = scene
        self.mover, self.syncs = build_mover(scene)
        self.order = list(range(len(scene.objects)))

    def sync_back(self) -> None:
        for poly, wrapper in self.syncs:
            chatoyant_update_from_graph(poly, wrapper.graph)


def _rect_contains(r: Rect, x: int, y: int) -> bool:
    return r.left <= x <= r.left + r.width and r.top <= y <= r.top + r.height


def _in_triangle(a: Pt, b: Pt, c: Pt, x: int, y: int) -> bool:
    def cross(p: Pt, q: Pt) -> int:
        return (q.x - p.x) * (y - p.y) - (q.y - p.y) * (x - p.x)

    s1, s2, s3 = cross(a, b), cross(b, c), cross(c, a)
    return (s1 >= 0 and s2 >= 0 and s3 >= 0) or (s1 <= 0 and s2 <= 0 and s3 <= 0)


def _body_contains(obj: Any, x: int, y: int) -> bool:
    """Painted-extent test used for plain-click promotion, not for drags."""
    if isinstance(obj, House):
        lt = Pt(obj.rect.left, obj.rect.top)
        rt = Pt(obj.rect.left + obj.rect.width, obj.rect.top)
        return _rect_contains(obj.rect, x, y) or _in_triangle(lt, rt, obj.roof_top, x, y)
    if isinstance(obj, HScale):
        return obj.cxL <= x <= obj.cxR and obj.cyT <= y <= obj.cyB
    if isinstance(obj, (SquareObj, PanelProxy)):
        return _rect_contains(obj.rect, x, y)
    if isinstance(obj, RegularPolygonObj):
        dx, dy = x - obj.center.x, y - obj.center.y
        return dx * dx + dy * dy <= obj.radius * obj.radius
    if isinstance(obj, RingSet):
        r = max(ring.r_out for ring in obj.rings)
        dx, dy = x - obj.center.x, y - obj.center.y
        return dx * dx + dy * dy <= r * r
    if isinstance(obj, GraphMovable):
        # bounding box of apexes and center; close enough for a click target
        pts = [obj.graph.node(k).anchor for k in range(obj.graph.node_count)]
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        return min(xs) <= x <= max(xs) and min(ys) <= y <= max(ys)
    return False


def _drawables_reply(state: EngineState) -> dict[str, Any]:
    layers = []
    for dr in state.mover.all_drawables():
        layers.append(
            {
                "segments": [[s.a.x, s.a.y, s.b.x, s.b.y] for s in dr.segments],
                "markers": [
                    {
                        "x": m.center.x,
                        "y": m.center.y,
                        "shape": m.shape.value,
                        "size": m.size,
                        "clear": m.clearance,
                    }
                    for m in dr.markers
                ],
            }
        )
    # all_drawables is back-to-front; flip order to match (entry 0 last)
    back_to_front = list(reversed(state.order))
    return {
        "ok": True,
        "color": state.mover.contour_color,
        "layers": layers,
        "order": back_to_front,
    }


def handle(state: EngineState | None, req: dict[str, Any]) -> tuple[EngineState | None, dict[str, Any]]:
    op = req.get("op")
    if op == "load":
        try:
            scene = load_scene(req["text"])
        except SceneError as e:
            return state, {"ok": False, "error": str(e)}
        return EngineState(scene), {"ok": True}

    if state is None:
        return state, {"ok": False, "error": "no scene loaded"}

    if op == "catch":
        button = MouseButton.RIGHT if req.get("button") == "R" else MouseButton.LEFT
        caught = state.mover.catch(Pt(req["x"], req["y"]), button)
        return state, {"ok": True, "caught": caught}
    if op == "moving":
        changed = state.mover.moving(Pt(req["x"], req["y"]))
        return state, {"ok": True, "changed": changed}
    if op == "release":
        state.mover.release()
        return state, {"ok": True}
    if op == "cursor":
        hint = state.mover.cursor_hint_at(Pt(req["x"], req["y"]))
        return state, {"ok": True, "hint": hint.value}
    if op == "drawables":
        return state, _drawables_reply(state)
    if op == "save":
        state.sync_back()
        return state, {"ok": True, "text": save_scene(state.scene)}
    if op == "body_at":
        x, y = req["x"], req["y"]
        for i in range(len(state.mover)):
            if _body_contains(state.mover.object_at(i), x, y):
                return state, {"ok": True, "entry": i}
        return state, {"ok": True, "entry": None}
    if op == "to_top":
        i = req["entry"]
        if not 0 <= i < len(state.mover):
            return state, {"ok": False, "error": f"no entry {i}"}
        obj = state.mover.object_at(i)
        state.mover.remove_at(i)
        state.mover.insert(0, obj)
        state.order.insert(0, state.order.pop(i))
        return state, {"ok": True}

    return state, {"ok": False, "error": f"unknown op: {op!r}"}


def main() -> None:
    state: EngineState | None = None
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        try:
            req = json.loads(line)
            state, resp = handle(state, req)
        except Exception as e:  # malformed request must not kill the server
            resp = {"ok": False, "error": f"{type(e).__name__}: {e}"}
        sys.stdout.write(json.dumps(resp) + "\n")
        sys.stdout.flush()


if __name__ == "__main__":
    main()
