"""End-to-end claims the package stands behind, one test per claim.

Each test prints a single PASS or FAIL line naming the claim, so a plain
`pytest tests/test_acceptance.py -v -s` doubles as the conformance report.
Tolerances and budgets are asserted inside the tests themselves.
"""

import functools
import random
import time
from pathlib import Path

from contourkit.cli import main as cli_main
from contourkit.contour import (
    Contour,
    ContourNode,
    MovementFreedom,
    contour_from_nodes,
)
from contourkit.geometry import Delta, Pt, Rect, iround, rotate_point
from contourkit.movables import (
    ChatoyantPoly,
    ContourResize,
    GraphMovable,
    House,
    HScale,
    MouseButton,
    MovableObject,
    PanelBounds,
    PanelProxy,
    Ring,
    RingSet,
    ScaleVariant,
    SquareContourKind,
    SquareObj,
    chatoyant_graph,
    chatoyant_rotate,
    chatoyant_update_from_graph,
)
from contourkit.mover import CaughtNode, Mover
from contourkit.scene_io import (
    DownEvent,
    MoveEvent,
    Scene,
    UpEvent,
    build_mover,
    format_events,
    load_scene,
    parse_events,
    replay,
    save_scene,
)

GOLDEN = Path(__file__).parent / "golden"
L = MouseButton.LEFT
R = MouseButton.RIGHT


def criterion(name):
    """Emit one PASS/FAIL line per claim, then let pytest do its thing."""

    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"FAIL {name}")
                raise
            print(f"PASS {name}")

        return wrapper

    return deco


# ---------------------------------------------------------------------------
# 1. interior coverage of the square contour styles


def interior_coverage(kind, size=100):
    contour = SquareObj(Rect(0, 0, size, size), kind).define_contour()
    hits = 0
    total = 0
    for y in range(1, size):
        for x in range(1, size):
            total += 1
            p = Pt(x, y)
            if contour.hit_node(p) is not None or contour.hit_connection(p) is not None:
                hits += 1
    return hits / total


@criterion("catch coverage of the 100x100 square interiors")
def test_coverage_claims():
    for kind, lo, hi in (
        (SquareContourKind.TWO_NODE, 0.755, 0.815),
        (SquareContourKind.FOUR_NODE, 0.92, 0.98),
        (SquareContourKind.ONE_NODE, 1.0, 1.0),
    ):
        t0 = time.perf_counter()
        frac = interior_coverage(kind)
        elapsed = time.perf_counter() - t0
        assert lo <= frac <= hi, (kind, frac)
        assert elapsed < 1.0, (kind, elapsed)


# ---------------------------------------------------------------------------
# 2. the automatic connection chain for any node count


@criterion("connection chain construction for 1..50 nodes")
def test_auto_ring_constructor():
    for n in range(1, 51):
        nodes = [ContourNode(i, Pt(10 * i, 0)) for i in range(n)]
        pairs = [(k.i, k.j) for k in contour_from_nodes(nodes).connections]
        if n == 1:
            assert pairs == []
        elif n == 2:
            assert pairs == [(0, 1)]
        else:
            assert pairs == [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)]


# ---------------------------------------------------------------------------
# 3. house minima hold under fuzz and a long scripted drag


@criterion("house minima hold under fuzz and a scripted corner drag")
def test_house_constraint_suite():
    t0 = time.perf_counter()
    rng = random.Random(20260814)
    for _ in range(50):
        left, top = rng.randint(-200, 200), rng.randint(-200, 200)
        w, hgt = rng.randint(40, 300), rng.randint(30, 200)
        h = House(
            Rect(left, top, w, hgt),
            Pt(rng.randint(left + 10, left + w - 10), top - rng.randint(10, 80)),
        )
        h.validate()
        for _ in range(200):
            h.move_node(
                rng.randrange(5),
                Delta(rng.randint(-30, 30), rng.randint(-30, 30)),
                Pt(0, 0),
                L if rng.random() < 0.8 else R,
            )
            h.validate()

    # drag the top-left corner 500 px right and down in 5 px steps; both
    # axes must stop exactly at their minima and the roof must stay legal
    h2 = House(Rect(0, 0, 200, 150), Pt(100, -40))
    m = Mover()
    m.add(h2)
    assert m.catch(Pt(0, 0), L)
    for k in range(1, 101):
        m.moving(Pt(5 * k, 5 * k))
    m.release()
    assert h2.rect == Rect(160, 120, 40, 30)
    assert (h2.rect.width, h2.rect.height) == (
        h2.minima.min_width,
        h2.minima.min_height,
    )
    assert h2.roof_top == Pt(190, 80)
    assert h2.rect.left + h2.minima.min_roof_side <= h2.roof_top.x
    assert h2.roof_top.x <= h2.rect.right - h2.minima.min_roof_side
    h2.validate()
    assert time.perf_counter() - t0 < 5.0


# ---------------------------------------------------------------------------
# 4. connection drags: exact net translation, byte-stable replays


def _random_scene(rng, i):
    kind = i % 8
    if kind == 0:
        left, top = rng.randint(-200, 200), rng.randint(-200, 200)
        w, hgt = rng.randint(60, 300), rng.randint(50, 200)
        roof = Pt(rng.randint(left + 10, left + w - 10), top - rng.randint(10, 80))
        return Scene([House(Rect(left, top, w, hgt), roof)])
    if kind in (1, 2):
        cxl = rng.randint(-100, 100)
        cyt = rng.randint(-100, 100)
        variant = ScaleVariant.FRAME if kind == 1 else ScaleVariant.MIDLINE
        return Scene(
            [HScale(cxl, cxl + rng.randint(30, 200), cyt, cyt + rng.randint(10, 80),
                    variant=variant)]
        )
    if kind in (3, 4):
        side = rng.randint(12, 120)
        sk = SquareContourKind.TWO_NODE if kind == 3 else SquareContourKind.FOUR_NODE
        return Scene(
            [SquareObj(Rect(rng.randint(-200, 200), rng.randint(-200, 200), side, side), sk)]
        )
    if kind == 5:
        # rings narrower than ~14 px leave no strip point outside both
        # endpoint squares, so a connection press could not exist at all
        r_in = rng.randint(20, 60)
        r_out = r_in + rng.randint(14, 40)
        rings = [Ring(r_in, r_out, rng.randint(0, 359),
                      [float(rng.randint(1, 9)) for _ in range(rng.randint(2, 5))])]
        if rng.random() < 0.5:
            r_in2 = r_out + 4 + rng.randint(0, 10)
            rings.append(Ring(r_in2, r_in2 + rng.randint(14, 30), 0,
                              [float(rng.randint(1, 9)) for _ in range(rng.randint(2, 4))]))
        return Scene([RingSet(Pt(rng.randint(-50, 400), rng.randint(-50, 400)), rings)])
    if kind == 6:
        cx, cy = rng.randint(0, 400), rng.randint(0, 400)
        n = rng.randint(3, 6)
        radius = rng.randint(80, 150)
        points = [
            rotate_point(Pt(cx, cy), Pt(cx + radius, cy), 360.0 * k / n)
            for k in range(n)
        ]
        return Scene([ChatoyantPoly(points, Pt(cx, cy))])
    return Scene(
        [PanelProxy(
            Rect(rng.randint(-200, 200), rng.randint(-200, 200),
                 rng.randint(100, 300), rng.randint(50, 150)),
            ContourResize.ANY,
            PanelBounds(100, 300, 50, 150),
        )]
    )


def _strip_point(contour):
    """A point that lands on some connection but on no node sense area."""
    for conn in contour.connections:
        seg = contour.connection_seg(conn)
        for num, den in ((1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (2, 5), (3, 5)):
            p = Pt(
                iround(seg.a.x + (seg.b.x - seg.a.x) * num / den),
                iround(seg.a.y + (seg.b.y - seg.a.y) * num / den),
            )
            if contour.hit_node(p) is None and contour.hit_connection(p) is not None:
                return p
    return None


@criterion("connection drags translate exactly and replay byte-identically")
def test_drag_exactness_and_determinism():
    rng = random.Random(99)
    for i in range(1000):
        base = save_scene(_random_scene(rng, i))
        mover, _ = build_mover(load_scene(base))
        p = _strip_point(mover.entry(0).contour)
        assert p is not None, (i, base)
        path = [p]
        for _ in range(3):
            q = path[-1]
            path.append(Pt(q.x + rng.randint(-40, 40), q.y + rng.randint(-40, 40)))
        script = format_events(
            [DownEvent(p.x, p.y, L)]
            + [MoveEvent(q.x, q.y) for q in path[1:]]
            + [UpEvent()]
        )
        events = parse_events(script)

        s1 = replay(load_scene(base), events)
        s2 = replay(load_scene(base), events)
        out1, out2 = save_scene(s1), save_scene(s2)
        assert out1 == out2, i

        # expected result is a pure translation by last-move minus press
        net = path[-1] - p
        s3 = load_scene(base)
        obj = s3.objects[0]
        if isinstance(obj, ChatoyantPoly):
            obj.points = [q + net for q in obj.points]
            obj.center = obj.center + net
        else:
            obj.move(net)
        assert out1 == save_scene(s3), (i, base, script)


# ---------------------------------------------------------------------------
# 5. rotation fidelity


@criterion("right-drag rotation for ring sectors and chatoyant polygons")
def test_rotation():
    # a quarter-turn sweep recorded as an event script
    scene = load_scene((GOLDEN / "rings_scene.json").read_text(encoding="utf-8"))
    replay(scene, parse_events((GOLDEN / "script_rotate.txt").read_text(encoding="utf-8")))
    ring = scene.objects[0].rings[0]
    assert abs(ring.start_deg - 90) <= 1
    assert ring.values == [1.0, 1.0, 1.0, 1.0]
    assert (ring.r_in, ring.r_out) == (50, 70)

    # +30 then -30 degrees restores every apex within one pixel
    center = Pt(300, 300)
    poly = ChatoyantPoly(
        [Pt(400, 300), Pt(300, 400), Pt(200, 300), Pt(300, 200)], center
    )
    original = list(poly.points)
    m = Mover()
    m.add(GraphMovable(chatoyant_graph(poly)))
    mouse0 = Pt(450, 300)
    mouse1 = rotate_point(center, mouse0, 30.0)

    def host_right_drag(a, b):
        # a right press on a node catches; the host then swaps in the
        # rotated polygon instead of forwarding the move
        nonlocal poly
        assert m.catch(a, R)
        assert isinstance(m.caught, CaughtNode)
        poly = chatoyant_rotate(poly, a, b)
        m.replace_entry(0, GraphMovable(chatoyant_graph(poly)))
        m.release()

    host_right_drag(Pt(400, 300), mouse1)  # press on an apex, sweep +30
    assert poly.points != original
    turned = m.entry(0).contour
    press = next(
        n.anchor for n in turned.nodes if max(
            abs(n.anchor.x - poly.points[0].x), abs(n.anchor.y - poly.points[0].y)
        ) == 0
    )
    host_right_drag(press, mouse0)  # press the moved apex, sweep back
    for p, q in zip(original, poly.points):
        assert max(abs(p.x - q.x), abs(p.y - q.y)) <= 1, (original, poly.points)


# ---------------------------------------------------------------------------
# 6. movement freedom is enforced centrally


class SpyObject(MovableObject):
    """Records every delta the engine forwards to move_node."""

    def __init__(self):
        self.calls = []
        self.base = Contour(
            [
                ContourNode(0, Pt(0, 0), freedom=MovementFreedom.NONE),
                ContourNode(1, Pt(100, 0), freedom=MovementFreedom.NS),
                ContourNode(2, Pt(200, 0), freedom=MovementFreedom.WE),
                ContourNode(3, Pt(300, 0), freedom=MovementFreedom.ANY),
            ],
            [],
        )

    def define_contour(self):
        return self.base.copy()

    def move(self, d):
        pass

    def move_node(self, node_id, d, mouse, button):
        self.calls.append((node_id, d))
        return True


@criterion("axis freedom gating and frozen-node immunity")
def test_freedom_gating():
    spy = SpyObject()
    m = Mover()
    m.add(spy)
    rng = random.Random(17)
    for node_id, anchor in ((1, Pt(100, 0)), (2, Pt(200, 0)), (3, Pt(300, 0))):
        assert m.catch(anchor, L)
        assert m.caught.node_id == node_id
        p = anchor
        for _ in range(50):
            p = Pt(p.x + rng.randint(-9, 9), p.y + rng.randint(-9, 9))
            m.moving(p)
        m.release()
    ns = [d for nid, d in spy.calls if nid == 1]
    we = [d for nid, d in spy.calls if nid == 2]
    any_ = [d for nid, d in spy.calls if nid == 3]
    assert ns and all(d.dx == 0 for d in ns)
    assert any(d.dy != 0 for d in ns)
    assert we and all(d.dy == 0 for d in we)
    assert any(d.dx != 0 for d in we)
    assert any(d.dx != 0 for d in any_) and any(d.dy != 0 for d in any_)

    # the frozen node never catches anywhere, 10k random probes
    for _ in range(10_000):
        p = Pt(rng.randint(-20, 320), rng.randint(-20, 20))
        if m.catch(p, L):
            assert not (isinstance(m.caught, CaughtNode) and m.caught.node_id == 0)
            m.release()


# ---------------------------------------------------------------------------
# 7. overlap resolves to the top entry, reordering swaps it


@criterion("full overlap always catches entry 0; reorder swaps the winner")
def test_z_order_catch():
    a = SquareObj(Rect(0, 0, 100, 100), SquareContourKind.ONE_NODE)
    b = SquareObj(Rect(0, 0, 100, 100), SquareContourKind.ONE_NODE)
    m = Mover()
    m.add(a)
    m.add(b)
    for y in range(1, 100):
        for x in range(1, 100):
            assert m.catch(Pt(x, y), L)
            assert m.caught.entry_index == 0
            m.release()
    m.catch(Pt(50, 50), L)
    m.moving(Pt(60, 55))
    m.release()
    assert a.rect == Rect(10, 5, 100, 100)
    assert b.rect == Rect(0, 0, 100, 100)

    a.move(Delta(-10, -5))  # restack the identical overlap, b on top now
    m.remove_at(0)
    m.add(a)
    for y in range(1, 100, 7):
        for x in range(1, 100, 7):
            assert m.catch(Pt(x, y), L)
            assert m.caught.entry_index == 0
            m.release()
    m.catch(Pt(50, 50), L)
    m.moving(Pt(43, 41))
    m.release()
    assert b.rect == Rect(-7, -9, 100, 100)
    assert a.rect == Rect(0, 0, 100, 100)


# ---------------------------------------------------------------------------
# 8. panel sizes never leave their bounds


@criterion("panel width and height never leave their bounds")
def test_panel_bounds():
    rng = random.Random(5)
    bounds = PanelBounds(100, 300, 50, 150)
    p = PanelProxy(Rect(0, 0, 200, 100), ContourResize.ANY, bounds)
    for _ in range(10_000):
        p.move_node(
            rng.randrange(8),
            Delta(rng.randint(-80, 80), rng.randint(-80, 80)),
            Pt(0, 0),
            L,
        )
        assert bounds.min_w <= p.rect.width <= bounds.max_w
        assert bounds.min_h <= p.rect.height <= bounds.max_h
        p.validate()

    # same through the engine, pressing real handles
    m = Mover()
    m.add(p)
    for _ in range(1000):
        contour = m.entry(0).contour
        node = contour.nodes[rng.randrange(len(contour.nodes))]
        if not m.catch(node.sense_center, L):
            continue
        q = node.sense_center
        for _ in range(3):
            q = Pt(q.x + rng.randint(-60, 60), q.y + rng.randint(-60, 60))
            m.moving(q)
        m.release()
        assert bounds.min_w <= p.rect.width <= bounds.max_w
        assert bounds.min_h <= p.rect.height <= bounds.max_h
        p.validate()


# ---------------------------------------------------------------------------
# 9. files round-trip byte-for-byte; recorded scripts hit their goldens


@criterion("scene round-trip is byte-identical and scripts match goldens")
def test_io_roundtrip_and_golden_replays(tmp_path):
    corpus = (GOLDEN / "scene_all_kinds.json").read_text(encoding="utf-8")
    once = save_scene(load_scene(corpus))
    assert once == corpus
    assert save_scene(load_scene(once)) == once

    for scene, script, expected in [
        ("house_scene.json", "script_drag.txt", "expected_drag.json"),
        ("house_scene.json", "script_resize.txt", "expected_resize.json"),
        ("rings_scene.json", "script_rotate.txt", "expected_rotate.json"),
    ]:
        out = tmp_path / f"out_{expected}"
        code = cli_main(
            [
                "replay",
                "--scene", str(GOLDEN / scene),
                "--events", str(GOLDEN / script),
                "--out", str(out),
            ]
        )
        assert code == 0, script
        assert out.read_text(encoding="utf-8") == (GOLDEN / expected).read_text(
            encoding="utf-8"
        ), script
