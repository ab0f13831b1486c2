"""The drag engine: an ordered entry list plus the catch/moving/release loop.

Entry 0 is topmost; hit scans walk the list from there, so overlapping
objects resolve the way they stack visually. The mover owns every cached
contour and is the only component a host needs to talk to while the pointer
is down: press feeds catch(), each motion feeds moving(), release() lets
go. Whatever movement freedom a node declares is enforced here, centrally,
by zeroing the forbidden delta component before the object ever sees it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .contour import Contour, ContourDrawables, CursorHint, MovementFreedom
from .geometry import Delta, Pt
from .movables import MouseButton, MovableObject

DEFAULT_CONTOUR_COLOR = "red"


@dataclass
class MoverEntry:
    obj: MovableObject
    contour: Contour


@dataclass
class CaughtNode:
    entry_index: int
    node_id: int
    button: MouseButton
    last_mouse: Pt
    catch_mouse: Pt


@dataclass
class CaughtConnection:
    entry_index: int
    connection_index: int
    button: MouseButton
    last_mouse: Pt
    catch_mouse: Pt


class Mover:
    """Registry of movable entries and the single drag in progress."""

    def __init__(self, contour_color: str = DEFAULT_CONTOUR_COLOR):
        self._entries: list[MoverEntry] = []
        self._state: CaughtNode | CaughtConnection | None = None
        # one shared display color for every contour; the renderer reads it
        self.contour_color = contour_color

    def __len__(self) -> int:
        return len(self._entries)

    def _check_index(self, i: int) -> None:
        if not 0 <= i < len(self._entries):
            raise IndexError("index out of range")

    def add(self, obj: MovableObject) -> int:
        self._entries.append(MoverEntry(obj, obj.define_contour()))
        return len(self._entries) - 1

    def insert(self, i: int, obj: MovableObject) -> None:
        if not 0 <= i <= len(self._entries):
            raise IndexError("index out of range")
        self._entries.insert(i, MoverEntry(obj, obj.define_contour()))
        if self._state is not None and self._state.entry_index >= i:
            self._state.entry_index += 1

    def remove_at(self, i: int) -> None:
        self._check_index(i)
        del self._entries[i]
        if self._state is not None:
            if self._state.entry_index == i:
                self._state = None
            elif self._state.entry_index > i:
                self._state.entry_index -= 1

    def replace_entry(self, i: int, obj: MovableObject) -> None:
        """Swap the object at slot i, keeping the slot's stacking position.

        A drag caught on the old entry carries over when the caught part
        still exists in the new contour; otherwise the drag ends.
        """
        self._check_index(i)
        entry = MoverEntry(obj, obj.define_contour())
        self._entries[i] = entry
        st = self._state
        if st is None or st.entry_index != i:
            return
        if isinstance(st, CaughtNode):
            if not entry.contour.has_node(st.node_id):
                self._state = None
        elif st.connection_index >= len(entry.contour.connections):
            self._state = None

    def object_at(self, i: int) -> MovableObject:
        self._check_index(i)
        return self._entries[i].obj

    def entry(self, i: int) -> MoverEntry:
        self._check_index(i)
        return self._entries[i]

    @property
    def caught(self) -> CaughtNode | CaughtConnection | None:
        return self._state

    def is_caught(self) -> bool:
        return self._state is not None

    def catch(self, p: Pt, button: MouseButton = MouseButton.LEFT) -> bool:
        """Try to start a drag at p; True iff something is now caught.

        Scans top down; within an entry, nodes win over connections.
        Connections answer the left button only, and a right press falls
        through them to whatever lies deeper.
        """
        if self._state is not None:
            return True
        for idx, entry in enumerate(self._entries):
            node_id = entry.contour.hit_node(p)
            if node_id is not None:
                self._state = CaughtNode(idx, node_id, button, p, p)
                return True
            if button is MouseButton.LEFT:
                conn = entry.contour.hit_connection(p)
                if conn is not None:
                    self._state = CaughtConnection(idx, conn, button, p, p)
                    return True
        return False

    def moving(self, p: Pt) -> bool:
        """Feed one pointer position; True iff the scene changed shape.

        Connection drags translate the whole object by the pointer delta
        and shift the cached contour in lockstep. Node drags go through the
        object's own move_node after the freedom gate, and the cache is
        rebuilt from the object because a node move can reshape anything.
        """
        st = self._state
        if st is None:
            return False
        entry = self._entries[st.entry_index]
        d = p - st.last_mouse
        if isinstance(st, CaughtConnection):
            entry.obj.move(d)
            entry.contour.translate(d)
            st.last_mouse = p
            return True
        node = entry.contour.node(st.node_id)
        if node.freedom is MovementFreedom.NS:
            d = Delta(0, d.dy)
        elif node.freedom is MovementFreedom.WE:
            d = Delta(d.dx, 0)
        applied = entry.obj.move_node(st.node_id, d, p, st.button)
        entry.contour = entry.obj.define_contour()
        st.last_mouse = p
        if not entry.contour.has_node(st.node_id):
            self._state = None
        return applied

    def release(self) -> None:
        self._state = None

    def cursor_hint_at(self, p: Pt) -> CursorHint:
        """Advisory cursor for hovering; nodes beat connections globally."""
        for entry in self._entries:
            node_id = entry.contour.hit_node(p)
            if node_id is not None:
                return entry.contour.node(node_id).cursor
        for entry in self._entries:
            if entry.contour.hit_connection(p) is not None:
                return CursorHint.SIZE_ALL
        return CursorHint.DEFAULT

    def contour_drawables(self, i: int) -> ContourDrawables:
        self._check_index(i)
        return self._entries[i].contour.drawables()

    def all_drawables(self) -> list[ContourDrawables]:
        """Back-to-front: deepest entry first, entry 0 last so it paints on top."""
        return [
            self._entries[i].contour.drawables()
            for i in range(len(self._entries) - 1, -1, -1)
        ]
