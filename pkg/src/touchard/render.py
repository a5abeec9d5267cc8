"""ASCII and SVG drawings of path words.

Words become unit-width steps: diagonal for up/down letters, horizontal
for zero letters, with green zeros drawn green and red zeros drawn red.
A restricted word therefore never shows a red horizontal step on the
x-axis, and the SVG renderer draws that axis so the property is visible.

Both renderers are deterministic byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .words import Letter, Word

NEUTRAL = "neutral"
GREEN = "green"
RED = "red"

GREEN_HEX = "#008000"
RED_HEX = "#C00000"
NEUTRAL_HEX = "#000000"
AXIS_HEX = "#999999"


class Step(NamedTuple):
    """One drawn step; dx is always 1."""

    dx: int
    dy: int
    color: str


_STEP_BY_LETTER = {
    Letter.UP: (+1, NEUTRAL),
    Letter.DOWN: (-1, NEUTRAL),
    Letter.GREEN_ZERO: (0, GREEN),
    Letter.RED_ZERO: (0, RED),
    Letter.FLAT: (0, NEUTRAL),
}


@dataclass(frozen=True)
class PathDrawing:
    """A path as drawable steps, starting at the origin and ending on the axis."""

    steps: tuple[Step, ...]

    @property
    def width(self) -> int:
        return len(self.steps)

    @property
    def height(self) -> int:
        """Maximum height the path reaches."""
        level = 0
        top = 0
        for step in self.steps:
            level += step.dy
            top = max(top, level)
        return top


def to_drawing(word: Word) -> PathDrawing:
    """One step per letter of any validated word type."""
    steps = tuple(Step(1, *_STEP_BY_LETTER[letter]) for letter in word.letters)
    return PathDrawing(steps)


def render_ascii(drawing: PathDrawing) -> str:
    """Character grid: '/' up, '\\' down, '-' green or plain flat, '=' red flat.

    Each glyph fills the cell its step passes through ('/' and '\\'
    occupy the cell between their endpoints, flats sit at their level),
    so a single arch is the one-line ``/\\``.  Rows are padded with
    spaces to the word's length; the grid is at least one row tall.
    """
    placed = []  # (row, column, glyph)
    level = 0
    top = 0
    for column, step in enumerate(drawing.steps):
        if step.dy > 0:
            row, glyph = level, "/"
        elif step.dy < 0:
            row, glyph = level - 1, "\\"
        else:
            row, glyph = level, "=" if step.color == RED else "-"
        placed.append((row, column, glyph))
        top = max(top, row)
        level += step.dy
    grid = [[" "] * drawing.width for _ in range(top + 1)]
    for row, column, glyph in placed:
        grid[row][column] = glyph
    return "\n".join("".join(line) for line in reversed(grid))


_STROKE_BY_COLOR = {NEUTRAL: NEUTRAL_HEX, GREEN: GREEN_HEX, RED: RED_HEX}


def render_svg(drawing: PathDrawing, unit: int = 20) -> str:
    """Standalone SVG with one line element per step.

    ``unit`` is the pixel width of a step.  The y-axis is flipped so
    height increases upward; all coordinates are integers, keeping the
    output byte-stable.  The x-axis is drawn as a dashed gray line, so
    a red step resting on it would be visible at a glance.
    """
    if unit <= 0:
        raise ValueError("unit must be positive")
    margin = unit
    top = drawing.height
    width = drawing.width * unit + 2 * margin
    height = top * unit + 2 * margin
    axis_y = margin + top * unit
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}"'
        f' viewBox="0 0 {width} {height}">',
        f'  <line class="axis" x1="0" y1="{axis_y}" x2="{width}" y2="{axis_y}"'
        f' stroke="{AXIS_HEX}" stroke-dasharray="4 3"/>',
    ]
    level = 0
    for i, step in enumerate(drawing.steps):
        x1 = margin + i * unit
        y1 = axis_y - level * unit
        level += step.dy
        x2 = x1 + unit
        y2 = axis_y - level * unit
        stroke = _STROKE_BY_COLOR[step.color]
        parts.append(
            f'  <line class="step" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"'
            f' stroke="{stroke}" stroke-width="2"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)
