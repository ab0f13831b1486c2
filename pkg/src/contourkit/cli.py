"""Command-line interface: replay scripts, hit queries, coverage, dumps.

Exit codes: 0 success, 2 input error (bad files, bad flags, validation
failures), 3 internal error. All output is line-oriented UTF-8.
"""

from __future__ import annotations

import argparse
import sys

from .geometry import Pt, Rect
from .mover import CaughtConnection, CaughtNode
from .movables import MouseButton, SquareContourKind, SquareObj
from .scene_io import (
    EventScriptError,
    SceneError,
    build_mover,
    load_scene,
    parse_events,
    replay,
    save_scene,
)

_COVERAGE_KINDS = {
    "square1": SquareContourKind.ONE_NODE,
    "square2": SquareContourKind.TWO_NODE,
    "square4": SquareContourKind.FOUR_NODE,
}


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _load_scene_file(path: str):
    try:
        return load_scene(_read(path))
    except SceneError as e:
        raise SceneError(f"{path}: {e}") from e


def _cmd_replay(args: argparse.Namespace) -> int:
    scene = _load_scene_file(args.scene)
    try:
        events = parse_events(_read(args.events))
    except EventScriptError as e:
        raise EventScriptError(f"{args.events}: {e}") from e
    replay(scene, events)
    with open(args.out, "w", encoding="utf-8") as f:
        f.write(save_scene(scene))
    return 0


def _cmd_hit(args: argparse.Namespace) -> int:
    scene = _load_scene_file(args.scene)
    mover, _ = build_mover(scene)
    button = MouseButton.LEFT if args.button == "L" else MouseButton.RIGHT
    mover.catch(Pt(args.x, args.y), button)
    st = mover.caught
    if st is None:
        print("none")
    elif isinstance(st, CaughtNode):
        print(f"entry={st.entry_index} kind=node id={st.node_id}")
    elif isinstance(st, CaughtConnection):
        print(f"entry={st.entry_index} kind=connection id={st.connection_index}")
    return 0


def _cmd_coverage(args: argparse.Namespace) -> int:
    if args.size < 10:
        raise SceneError("size must be at least 10")
    square = SquareObj(
        Rect(0, 0, args.size, args.size), _COVERAGE_KINDS[args.kind]
    )
    contour = square.define_contour()
    hits = 0
    total = 0
    # strictly interior grid points; the border ring does not count
    for y in range(1, args.size):
        for x in range(1, args.size):
            total += 1
            p = Pt(x, y)
            if contour.hit_node(p) is not None or contour.hit_connection(p) is not None:
                hits += 1
    print(f"{hits / total:.4f}")
    return 0


def _cmd_contours(args: argparse.Namespace) -> int:
    scene = _load_scene_file(args.scene)
    mover, _ = build_mover(scene)
    for drawables in mover.all_drawables():
        for seg in drawables.segments:
            print(f"seg {seg.a.x} {seg.a.y} {seg.b.x} {seg.b.y}")
        for m in drawables.markers:
            fill = "clear" if m.clearance else "fill"
            print(f"node {m.center.x} {m.center.y} {m.shape.value} {m.size} {fill}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contourkit",
        description="Drive contour-based movable scenes from the command line.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("replay", help="run an event script over a scene file")
    p.add_argument("--scene", required=True, help="input scene file")
    p.add_argument("--events", required=True, help="event script file")
    p.add_argument("--out", required=True, help="where to write the final scene")
    p.set_defaults(func=_cmd_replay)

    p = sub.add_parser("hit", help="report what a press at a point would catch")
    p.add_argument("--scene", required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--button", choices=("L", "R"), default="L")
    p.set_defaults(func=_cmd_hit)

    p = sub.add_parser(
        "coverage", help="fraction of a square's interior its contour can catch"
    )
    p.add_argument("--kind", choices=sorted(_COVERAGE_KINDS), required=True)
    p.add_argument("--size", type=int, required=True)
    p.set_defaults(func=_cmd_coverage)

    p = sub.add_parser("contours", help="dump contour drawables in paint order")
    p.add_argument("--scene", required=True)
    p.set_defaults(func=_cmd_contours)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SceneError, EventScriptError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # anything else is a bug, not bad input
        print(f"internal error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
