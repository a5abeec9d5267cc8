"""ASCII and SVG path rendering."""

import xml.etree.ElementTree as ET

import pytest

from touchard import (
    enumerate_g,
    enumerate_g_restricted,
    enumerate_motzkin,
    parse_letters,
    render_ascii,
    render_svg,
    to_drawing,
    validate_g,
    validate_motzkin,
)
from touchard.render import GREEN, NEUTRAL, RED, RED_HEX, Step


def drawing(text):
    letters = parse_letters(text)
    if "H" in text:
        return to_drawing(validate_motzkin(letters))
    return to_drawing(validate_g(letters))


def svg_lines(svg):
    root = ET.fromstring(svg)
    return [el for el in root.iter() if el.tag.endswith("line")]


def step_lines(svg):
    return [el for el in svg_lines(svg) if el.get("class") == "step"]


def test_to_drawing_examples():
    assert drawing("").steps == ()
    assert drawing("URD").steps == (Step(1, 1, NEUTRAL), Step(1, 0, RED), Step(1, -1, NEUTRAL))
    assert drawing("G").steps == (Step(1, 0, GREEN),)
    assert drawing("H").steps == (Step(1, 0, NEUTRAL),)
    assert drawing("UUDD").height == 2
    assert drawing("UUDD").width == 4


def test_ascii_single_line_words():
    assert render_ascii(drawing("")) == ""
    assert render_ascii(drawing("G")) == "-"
    assert render_ascii(drawing("R")) == "="
    assert render_ascii(drawing("H")) == "-"
    assert render_ascii(drawing("UD")) == "/\\"
    assert render_ascii(drawing("UDUD")) == "/\\/\\"


def test_ascii_multi_line_words():
    assert render_ascii(drawing("URD")) == " = \n/ \\"
    assert render_ascii(drawing("UGD")) == " - \n/ \\"
    assert render_ascii(drawing("UUDD")) == " /\\ \n/  \\"
    assert render_ascii(drawing("UUDDGR")) == " /\\   \n/  \\-="


def test_ascii_grid_shape():
    # Every row is exactly the word's width; row count matches a direct
    # per-letter simulation of the glyph placement.
    for n in range(6):
        for word in enumerate_g(n):
            art = render_ascii(to_drawing(word))
            rows = art.split("\n")
            assert all(len(row) == len(word) for row in rows)
            level = 0
            top = 0
            for letter in word:
                if letter.step < 0:
                    top = max(top, level - 1)
                else:
                    top = max(top, level)
                level += letter.step
            assert len(rows) == top + 1


def test_rendering_is_deterministic():
    word = drawing("UURDGDUD")
    assert render_ascii(word) == render_ascii(word)
    assert render_svg(word, 17) == render_svg(word, 17)


def test_svg_empty_word_is_just_the_axis():
    svg = render_svg(drawing(""), 20)
    lines = svg_lines(svg)
    assert len(lines) == 1
    assert lines[0].get("class") == "axis"
    assert lines[0].get("stroke-dasharray") is not None


def test_svg_urd_segments():
    svg = render_svg(drawing("URD"), 10)
    steps = step_lines(svg)
    assert len(steps) == 3
    axis_y = int(svg_lines(svg)[0].get("y1"))
    red = [el for el in steps if el.get("stroke") == RED_HEX]
    assert len(red) == 1
    # The red flat sits one unit above the axis.
    assert int(red[0].get("y1")) == axis_y - 10
    assert int(red[0].get("y2")) == axis_y - 10


def test_svg_ground_level_reds_across_g2():
    # Across the five length-2 words the drawings contain exactly four
    # red flats resting on the axis, none of them in restricted words.
    ground_reds = 0
    for word in enumerate_g(2):
        svg = render_svg(to_drawing(word), 10)
        axis_y = int(svg_lines(svg)[0].get("y1"))
        for el in step_lines(svg):
            if el.get("stroke") == RED_HEX and int(el.get("y1")) == axis_y:
                ground_reds += 1
    assert ground_reds == 4
    for word in enumerate_g_restricted(2):
        svg = render_svg(to_drawing(word), 10)
        axis_y = int(svg_lines(svg)[0].get("y1"))
        assert not any(
            el.get("stroke") == RED_HEX and int(el.get("y1")) == axis_y
            for el in step_lines(svg)
        )


def test_svg_restricted_words_have_no_ground_red():
    for length in range(1, 7):
        for word in enumerate_g_restricted(length):
            svg = render_svg(to_drawing(word), 8)
            axis_y = int(svg_lines(svg)[0].get("y1"))
            for el in step_lines(svg):
                if el.get("stroke") == RED_HEX:
                    assert int(el.get("y1")) != axis_y


def test_svg_coordinates_scale_with_unit():
    for unit in (1, 5, 32):
        svg = render_svg(drawing("UD"), unit)
        steps = step_lines(svg)
        assert int(steps[0].get("x2")) - int(steps[0].get("x1")) == unit
        assert int(steps[0].get("y1")) - int(steps[0].get("y2")) == unit


def test_svg_step_count_matches_word_length():
    for k in range(5):
        for word in enumerate_motzkin(k):
            svg = render_svg(to_drawing(word), 4)
            assert len(step_lines(svg)) == len(word)


def test_svg_rejects_bad_unit():
    with pytest.raises(ValueError):
        render_svg(drawing("UD"), 0)
    with pytest.raises(ValueError):
        render_svg(drawing("UD"), -3)
