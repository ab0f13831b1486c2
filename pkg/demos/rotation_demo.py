"""Right-button rotation: ring sectors and chatoyant polygons.

Run with: python3 demos/rotation_demo.py
"""

from contourkit import (
    ChatoyantPoly,
    GraphMovable,
    MouseButton,
    Mover,
    Pt,
    Ring,
    RingSet,
    chatoyant_graph,
    chatoyant_rotate,
    rotate_point,
)

R = MouseButton.RIGHT


def ring_demo():
    center = Pt(300, 300)
    rings = RingSet(center, [Ring(50, 70, 0, [3.0, 1.0, 2.0])])
    mover = Mover()
    mover.add(rings)

    print("One ring, three sectors, boundaries at 0/180/240 degrees.")
    print(f"  start_deg = {rings.rings[0].start_deg}")

    # Right-press the outer handle sitting on the positive x axis, then
    # sweep the mouse along a quarter arc. Every step the engine compares
    # the live pointer angle with the cached handle angle and shifts the
    # whole ring by the rounded difference.
    start = Pt(370, 300)
    print("\nRight-drag that handle from angle 0 up to 90:")
    mover.catch(start, R)
    for k in range(1, 19):
        mover.moving(rotate_point(center, start, 5.0 * k))
    mover.release()
    print(f"  start_deg = {rings.rings[0].start_deg}")
    print(f"  sector values untouched: {rings.rings[0].values}")

    # Left on the same handles changes radii instead.
    print("\nLeft-drag the same boundary outward by 12 px:")
    handle = mover.entry(0).contour.node(1).anchor
    mover.catch(handle, MouseButton.LEFT)
    mover.moving(Pt(handle.x, handle.y - 12))  # outward is up at 90 degrees
    mover.release()
    print(f"  radii now {rings.rings[0].r_in}..{rings.rings[0].r_out}")


def chatoyant_demo():
    center = Pt(0, 0)
    poly = ChatoyantPoly([Pt(100, 0), Pt(0, 100), Pt(-100, 0), Pt(0, -100)], center)
    print("\nA chatoyant polygon is rotated by replacing it wholesale:")
    print(f"  apexes: {[(p.x, p.y) for p in poly.points]}")

    # The host flow: right-press catches a node, then each pointer step
    # swaps in a rotated copy while the mover keeps the catch alive.
    mover = Mover()
    mover.add(GraphMovable(chatoyant_graph(poly)))
    mouse_a = Pt(150, 0)
    mouse_b = rotate_point(center, mouse_a, 30.0)
    mover.catch(Pt(100, 0), R)
    poly = chatoyant_rotate(poly, mouse_a, mouse_b)
    mover.replace_entry(0, GraphMovable(chatoyant_graph(poly)))
    mover.release()
    print(f"  after +30 degrees: {[(p.x, p.y) for p in poly.points]}")

    poly = chatoyant_rotate(poly, mouse_b, mouse_a)
    print(f"  after -30 degrees: {[(p.x, p.y) for p in poly.points]}")
    print("  back to the start within one pixel per coordinate.")


if __name__ == "__main__":
    ring_demo()
    chatoyant_demo()
