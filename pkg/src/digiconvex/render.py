"""ASCII and SVG drawings of the lattice path encoded by a word.

The convention matches the geometry: origin at the bottom left, x to the
right, y upward.  SVG output is built from integer arithmetic and plain
string formatting only, so identical input yields byte-identical output.

ASCII uses '.' for lattice points, '_' for 0-steps, '|' for 1-steps, '*'
for cells crossed by the straight segment, 'o' for factor boundaries, and
'S'/'s' for the standard/palindromic split points.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .christoffel import factorizations
from .errors import ContractError
from .lyndon import lyndon_factorization
from .words import parikh

ASCII_FORMAT = "ascii"
SVG_FORMAT = "svg"

MARK_S = "S"
MARK_S_PRIME = "S'"
MARK_BOUNDARIES = "boundaries"
_VALID_MARKS = (MARK_S, MARK_S_PRIME, MARK_BOUNDARIES)


@dataclass(frozen=True)
class RenderSpec:
    word: str
    show_segment: bool = False
    marks: tuple[str, ...] = field(default_factory=tuple)
    format: str = ASCII_FORMAT
    cell_size: int = 24


def _vertices(word: str) -> list[tuple[int, int]]:
    pts = [(0, 0)]
    x = y = 0
    for ch in word:
        if ch == "0":
            x += 1
        else:
            y += 1
        pts.append((x, y))
    return pts


def _mark_points(word: str, marks) -> dict[tuple[int, int], str]:
    """Map lattice points to mark labels; S marks need a Christoffel word."""
    out: dict[tuple[int, int], str] = {}
    for mark in marks:
        if mark not in _VALID_MARKS:
            raise ContractError(f"unknown mark {mark!r}; valid marks: {_VALID_MARKS}")
    if MARK_BOUNDARIES in marks:
        verts = _vertices(word)
        for start in lyndon_factorization(word).boundaries[1:]:
            out[verts[start]] = "o"
    if MARK_S in marks or MARK_S_PRIME in marks:
        points = factorizations(word).points
        if MARK_S in marks:
            out[points.s_point] = "S"
        if MARK_S_PRIME in marks:
            out[points.s_prime_point] = "s"
    return out


def render_ascii(word: str, show_segment: bool = False, marks=()) -> str:
    a, b = parikh(word)
    rows = 2 * b + 1
    cols = 2 * a + 1
    grid = [[" "] * cols for _ in range(rows)]
    for y in range(b + 1):
        for x in range(a + 1):
            grid[2 * (b - y)][2 * x] = "."
    x = y = 0
    for ch in word:
        if ch == "0":
            grid[2 * (b - y)][2 * x + 1] = "_"
            x += 1
        else:
            grid[2 * (b - y) - 1][2 * x] = "|"
            y += 1
    if show_segment:
        # star every unit cell whose interior meets the segment to (a, b)
        for cx in range(a):
            for cy in range(b):
                if b * cx < a * (cy + 1) and b * (cx + 1) > a * cy:
                    grid[2 * (b - cy) - 1][2 * cx + 1] = "*"
    for (mx, my), label in _mark_points(word, marks).items():
        grid[2 * (b - my)][2 * mx] = label
    return "\n".join("".join(row).rstrip() for row in grid)


def render_svg(
    word: str, show_segment: bool = False, marks=(), cell_size: int = 24
) -> str:
    if cell_size < 1:
        raise ContractError("cell_size must be a positive integer")
    a, b = parikh(word)
    margin = cell_size
    width = a * cell_size + 2 * margin
    height = b * cell_size + 2 * margin

    def px(x: int) -> int:
        return margin + x * cell_size

    def py(y: int) -> int:
        return margin + (b - y) * cell_size

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    for x in range(a + 1):
        lines.append(
            f'<line x1="{px(x)}" y1="{py(b)}" x2="{px(x)}" y2="{py(0)}" '
            f'stroke="#cccccc" stroke-width="1"/>'
        )
    for y in range(b + 1):
        lines.append(
            f'<line x1="{px(0)}" y1="{py(y)}" x2="{px(a)}" y2="{py(y)}" '
            f'stroke="#cccccc" stroke-width="1"/>'
        )
    if show_segment:
        lines.append(
            f'<line x1="{px(0)}" y1="{py(0)}" x2="{px(a)}" y2="{py(b)}" '
            f'stroke="#cc0000" stroke-width="2"/>'
        )
    points = " ".join(f"{px(x)},{py(y)}" for x, y in _vertices(word))
    lines.append(
        f'<polyline points="{points}" fill="none" stroke="#000000" stroke-width="3"/>'
    )
    for (mx, my), label in sorted(_mark_points(word, marks).items()):
        color = "#1f77b4" if label == "o" else "#cc0000"
        text = {"o": "", "S": "S", "s": "S&#8242;"}[label]
        lines.append(
            f'<circle cx="{px(mx)}" cy="{py(my)}" r="5" fill="{color}"/>'
        )
        if text:
            lines.append(
                f'<text x="{px(mx) + 8}" y="{py(my) - 8}" font-family="monospace" '
                f'font-size="14" fill="{color}">{text}</text>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render(spec: RenderSpec) -> str:
    if spec.format == ASCII_FORMAT:
        return render_ascii(spec.word, spec.show_segment, spec.marks)
    if spec.format == SVG_FORMAT:
        return render_svg(spec.word, spec.show_segment, spec.marks, spec.cell_size)
    raise ContractError(f"unknown render format {spec.format!r}")
