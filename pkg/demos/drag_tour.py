"""A guided tour of catching and dragging through the mover.

Run with: python3 demos/drag_tour.py
"""

from contourkit import (
    House,
    MouseButton,
    Mover,
    Pt,
    Rect,
    SquareContourKind,
    SquareObj,
)

L = MouseButton.LEFT


def show(label, house):
    print(f"  {label}: rect={house.rect} roof={house.roof_top}")


def main():
    house = House(Rect(0, 0, 100, 80), Pt(50, -20))
    square = SquareObj(Rect(300, 0, 100, 100), SquareContourKind.TWO_NODE)

    mover = Mover()
    mover.add(house)   # entry 0, topmost
    mover.add(square)

    print("A house and a square are registered with the mover.")
    show("start", house)

    # Connections are the strips between handles. Pressing one grabs the
    # whole object; the object lands wherever the pointer ends up.
    print("\nPress the top wall at (50, 2) and drag it around:")
    mover.catch(Pt(50, 2), L)
    for p in [Pt(60, 0), Pt(55, -30), Pt(87, -20)]:
        mover.moving(p)
        show(f"pointer at ({p.x}, {p.y})", house)
    mover.release()
    print("Net movement is exactly the last point minus the press point.")

    # Nodes reconfigure instead of moving. Corner 2 is bottom-right.
    print("\nPress the bottom-right corner and pull it out by (30, 14):")
    mover.catch(Pt(house.rect.right, house.rect.bottom), L)
    mover.moving(Pt(house.rect.right + 30, house.rect.bottom + 14))
    mover.release()
    show("after resize", house)

    # Constraints refuse, they do not clamp partial drags into range.
    print("\nTry to crush the house below its minimum size:")
    mover.catch(Pt(house.rect.right, house.rect.bottom), L)
    changed = mover.moving(Pt(house.rect.left + 5, house.rect.top + 5))
    mover.release()
    print(f"  engine reported changed={changed}")
    show("still intact", house)

    # The two-node square has no draggable handles at all; its midline
    # strip covers most of the interior and moves the whole square.
    print("\nGrab the square anywhere near its middle and shift it:")
    mover.catch(Pt(350, 30), L)
    mover.moving(Pt(340, 60))
    mover.release()
    print(f"  square rect: {square.rect}")

    print("\nHover hints, for a host that wants live cursors:")
    corner = Pt(house.rect.left, house.rect.top)
    wall = Pt((house.rect.left + house.rect.right) // 2, house.rect.top)
    for label, p in [
        ("corner handle", corner),
        ("wall strip", wall),
        ("empty space", Pt(999, 999)),
    ]:
        print(f"  {label} at ({p.x}, {p.y}): {mover.cursor_hint_at(p).value}")


if __name__ == "__main__":
    main()
