import json
import textwrap

import pytest

from contourkit.geometry import Delta, Pt, Rect
from contourkit.movables import (
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
)
from contourkit.scene_io import (
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

HOUSE_DOC = {
    "kind": "house",
    "rect": {"left": 0, "top": 0, "width": 100, "height": 80},
    "roof_top": {"x": 50, "y": -20},
}


def scene_text(*objects, config=None):
    doc = {"objects": list(objects)}
    if config is not None:
        doc["config"] = config
    return json.dumps(doc)


def all_kinds_scene():
    return Scene(
        objects=[
            House(Rect(0, 0, 100, 80), Pt(50, -20), number=3),
            HScale(10, 210, 400, 440, variant=ScaleVariant.MIDLINE),
            SquareObj(Rect(300, 0, 60, 60), SquareContourKind.FOUR_NODE),
            RegularPolygonObj(Pt(500, 100), 40, 6),
            RingSet(
                Pt(300, 300),
                [Ring(50, 70, 30, [1.0, 2.5, 1.0])],
                title=Title("load", Delta(0, -90)),
            ),
            ChatoyantPoly([Pt(600, 300), Pt(680, 440), Pt(520, 440)], Pt(600, 400)),
            PanelProxy(
                Rect(50, 500, 200, 100),
                ContourResize.ANY,
                PanelBounds(100, 300, 50, 150),
            ),
        ]
    )


# ---------------------------------------------------------------------------
# loading


def test_empty_scene_loads_with_defaults():
    s = load_scene('{"objects": []}')
    assert s.objects == []
    assert s.config == SceneConfig()


def test_house_record_loads():
    s = load_scene(scene_text(HOUSE_DOC))
    (h,) = s.objects
    assert isinstance(h, House)
    assert h.rect == Rect(0, 0, 100, 80)
    assert h.roof_top == Pt(50, -20)
    assert h.number == 0
    assert h.minima == HouseMinima()


def test_validation_failures_name_the_record():
    bad = dict(HOUSE_DOC, rect={"left": 0, "top": 0, "width": 30, "height": 80})
    with pytest.raises(SceneError) as e:
        load_scene(scene_text(bad))
    assert str(e.value) == "house[0]: width below minimum"


def test_unknown_kind_rejected():
    with pytest.raises(SceneError, match="objects\\[0\\]: unknown kind 'blob'"):
        load_scene(scene_text({"kind": "blob"}))
    with pytest.raises(SceneError, match="unknown kind"):
        load_scene(scene_text({"rect": {}}))


def test_unknown_field_rejected():
    with pytest.raises(SceneError, match="house\\[0\\]: unknown field 'roof'"):
        load_scene(scene_text(dict(HOUSE_DOC, roof=1)))


def test_missing_field_rejected():
    rec = {k: v for k, v in HOUSE_DOC.items() if k != "roof_top"}
    with pytest.raises(SceneError, match="missing field 'roof_top'"):
        load_scene(scene_text(rec))


def test_non_integer_coordinates_rejected():
    bad = dict(HOUSE_DOC, rect={"left": 0.5, "top": 0, "width": 100, "height": 80})
    with pytest.raises(SceneError, match="field 'left' must be an integer"):
        load_scene(scene_text(bad))
    # booleans are not coordinates even though python treats them as ints
    bad = dict(HOUSE_DOC, roof_top={"x": True, "y": -20})
    with pytest.raises(SceneError, match="field 'x' must be an integer"):
        load_scene(scene_text(bad))


def test_enum_fields_spell_out_choices():
    rec = {
        "kind": "square",
        "rect": {"left": 0, "top": 0, "width": 60, "height": 60},
        "contour_kind": "three_node",
    }
    with pytest.raises(SceneError, match="one of two_node\\|four_node\\|one_node"):
        load_scene(scene_text(rec))


def test_json_errors_carry_line_numbers():
    with pytest.raises(SceneError, match="parse error at line 2"):
        load_scene('{\n  "objects": [,]\n}')
    with pytest.raises(SceneError, match="scene must be a JSON object"):
        load_scene("[1, 2]")
    with pytest.raises(SceneError, match="'objects' must be a list"):
        load_scene('{"objects": 5}')
    with pytest.raises(SceneError, match="missing field 'objects'"):
        load_scene("{}")


def test_config_controls_line_sensitivity_and_color():
    text = scene_text(
        HOUSE_DOC,
        config={"connection_sensitivity_default": 5, "contour_color": "blue"},
    )
    s = load_scene(text)
    assert s.config.contour_color == "blue"
    c = s.objects[0].define_contour()
    assert all(k.sensitivity == 5 for k in c.connections)
    mover, _ = build_mover(s)
    assert mover.contour_color == "blue"


def test_config_minima_fill_in_when_record_is_silent():
    cfg = {"house_minima": {"min_width": 60, "min_height": 30,
                            "min_roof_side": 10, "min_roof_h": 10}}
    s = load_scene(scene_text(HOUSE_DOC, config=cfg))
    assert s.objects[0].minima.min_width == 60
    # an explicit record-level block wins over the config default
    rec = dict(HOUSE_DOC, minima={"min_width": 40, "min_height": 30,
                                  "min_roof_side": 10, "min_roof_h": 10})
    s2 = load_scene(scene_text(rec, config=cfg))
    assert s2.objects[0].minima.min_width == 40


def test_config_rejects_bad_values():
    with pytest.raises(SceneError, match="must not be negative"):
        load_scene(scene_text(config={"connection_sensitivity_default": -1}))
    with pytest.raises(SceneError, match="config: unknown field"):
        load_scene(scene_text(config={"colour": "red"}))


# ---------------------------------------------------------------------------
# saving


def test_save_format_is_pinned():
    s = Scene([SquareObj(Rect(0, 0, 60, 60), SquareContourKind.TWO_NODE)])
    expected = textwrap.dedent(
        """\
        {
          "objects": [
            {
              "kind": "square",
              "rect": {
                "left": 0,
                "top": 0,
                "width": 60,
                "height": 60
              },
              "contour_kind": "two_node"
            }
          ],
          "config": {
            "connection_sensitivity_default": 3,
            "contour_color": "red"
          }
        }
        """
    )
    assert save_scene(s) == expected


def test_save_load_save_is_byte_identical():
    first = save_scene(all_kinds_scene())
    second = save_scene(load_scene(first))
    assert second == first


def test_round_trip_preserves_every_field():
    s = all_kinds_scene()
    s.config.contour_color = "teal"
    s.config.ring_minima = RingMinima(25, 10, 5)
    text = save_scene(s)
    back = load_scene(text)
    assert save_scene(back) == text
    rs = back.objects[4]
    assert rs.title == Title("load", Delta(0, -90))
    # the record carries its own minima block, so the config one stays a default
    assert rs.minima == RingMinima()
    assert back.config.ring_minima == RingMinima(25, 10, 5)
    assert back.objects[1].variant is ScaleVariant.MIDLINE
    assert back.objects[6].bounds == PanelBounds(100, 300, 50, 150)


def test_integral_ring_values_write_as_ints():
    text = save_scene(all_kinds_scene())
    rings = json.loads(text)["objects"][4]["rings"][0]
    assert rings["values"] == [1, 2.5, 1]
    assert "1.0" not in text.split('"values"')[1].split("]")[0]


# ---------------------------------------------------------------------------
# event scripts


def test_parse_events_grammar():
    text = textwrap.dedent(
        """\
        # a recorded drag
        down 50 2 L

        move 60 -5
        up
        down 10 10 R
        up
        """
    )
    assert parse_events(text) == [
        DownEvent(50, 2, MouseButton.LEFT),
        MoveEvent(60, -5),
        UpEvent(),
        DownEvent(10, 10, MouseButton.RIGHT),
        UpEvent(),
    ]


def test_event_errors_carry_line_numbers():
    with pytest.raises(EventScriptError, match="line 1: unknown event verb 'drag'"):
        parse_events("drag 1 2")
    with pytest.raises(EventScriptError, match="line 2: malformed event: expected 'down"):
        parse_events("up\ndown 1 2")
    with pytest.raises(EventScriptError, match="button must be L or R"):
        parse_events("down 1 2 M")
    with pytest.raises(EventScriptError, match="line 3: .*'x?7b' is not an integer"):
        parse_events("up\nup\nmove 7b 2")
    with pytest.raises(EventScriptError, match="expected 'up'"):
        parse_events("up now")
    with pytest.raises(EventScriptError, match="expected 'move"):
        parse_events("move 4")


def test_format_events_round_trips():
    events = [DownEvent(5, -7, MouseButton.RIGHT), MoveEvent(0, 0), UpEvent()]
    text = format_events(events)
    assert text == "down 5 -7 R\nmove 0 0\nup\n"
    assert parse_events(text) == events


# ---------------------------------------------------------------------------
# replay


def replay_text(scene_str, events_str):
    scene = load_scene(scene_str)
    replay(scene, parse_events(events_str))
    return save_scene(scene)


def test_replay_connection_drag_translates_house():
    scene = load_scene(scene_text(HOUSE_DOC))
    script = "down 50 2 L\nmove 60 0\nmove 55 -30\nmove 87 -20\nup\n"
    replay(scene, parse_events(script))
    h = scene.objects[0]
    assert h.rect == Rect(37, -22, 100, 80)
    assert h.roof_top == Pt(87, -42)


def test_replay_net_translation_equals_last_minus_down():
    scene = load_scene(scene_text(HOUSE_DOC))
    script = "down 50 2 L\n" + "\n".join(
        f"move {50 + i * 3} {2 - i * 7}" for i in range(1, 9)
    ) + "\nup\n"
    replay(scene, parse_events(script))
    h = scene.objects[0]
    assert (h.rect.left, h.rect.top) == (50 + 8 * 3 - 50, 2 - 8 * 7 - 2)


def test_replay_is_deterministic():
    base = scene_text(HOUSE_DOC)
    script = "down 0 0 L\nmove 9 9\nup\ndown 59 -11 L\nmove 40 -11\nup\n"
    assert replay_text(base, script) == replay_text(base, script)


def test_replay_missing_everything_changes_nothing():
    base = scene_text(HOUSE_DOC)
    assert replay_text(base, "down 900 900 L\nmove 910 910\nup\n") == replay_text(
        base, ""
    )


def test_replay_without_trailing_up_still_applies():
    scene = load_scene(scene_text(HOUSE_DOC))
    replay(scene, parse_events("down 50 2 L\nmove 53 2\n"))
    assert scene.objects[0].rect.left == 3


def test_replay_syncs_chatoyant_center_drag():
    rec = {
        "kind": "chatoyant",
        "points": [
            {"x": 300, "y": 200},
            {"x": 390, "y": 360},
            {"x": 210, "y": 360},
        ],
        "center": {"x": 300, "y": 300},
    }
    scene = load_scene(scene_text(rec))
    replay(scene, parse_events("down 300 300 L\nmove 310 290\nup\n"))
    poly = scene.objects[0]
    assert poly.center == Pt(310, 290)
    assert poly.points == [Pt(300, 200), Pt(390, 360), Pt(210, 360)]


def test_replay_syncs_chatoyant_edge_drag():
    rec = {
        "kind": "chatoyant",
        "points": [
            {"x": 300, "y": 200},
            {"x": 390, "y": 360},
            {"x": 210, "y": 360},
        ],
        "center": {"x": 300, "y": 300},
    }
    scene = load_scene(scene_text(rec))
    replay(scene, parse_events("down 345 280 L\nmove 345 300\nup\n"))
    poly = scene.objects[0]
    assert poly.center == Pt(300, 320)
    assert poly.points == [Pt(300, 220), Pt(390, 380), Pt(210, 380)]


def test_build_mover_wraps_chatoyant_and_keeps_order():
    s = all_kinds_scene()
    mover, syncs = build_mover(s)
    assert len(mover) == 7
    assert mover.object_at(0) is s.objects[0]
    assert isinstance(mover.object_at(5), GraphMovable)
    assert syncs == [(s.objects[5], mover.object_at(5))]
