"""Beeline-style serpentine color gradient over wrapped lines.

Words are greedily wrapped to a character width, then each line is colored
by linear sRGB interpolation between two endpoint colors. Line directions
chain: a line starts with the color the previous line ended on, so the two
words adjacent across every line break share a color. With serpentine off,
every line runs start-to-end in the same direction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ingest import TokenizedDocument

__all__ = [
    "DEFAULT_COLOR_A",
    "DEFAULT_COLOR_B",
    "GradientConfig",
    "parse_color",
    "format_color",
    "wrap_lines",
    "assign_colors",
    "gradient_payload",
]

DEFAULT_COLOR_A = "#00429d"
DEFAULT_COLOR_B = "#d1495b"
MIN_WIDTH = 20
MAX_WIDTH = 120


def parse_color(color: str) -> tuple[int, int, int]:
    c = color.lstrip("#")
    if len(c) != 6:
        raise ValueError(f"expected #rrggbb color, got {color!r}")
    return int(c[0:2], 16), int(c[2:4], 16), int(c[4:6], 16)


def format_color(rgb: tuple[int, int, int]) -> str:
    return "#%02x%02x%02x" % rgb


@dataclass(frozen=True, slots=True)
class GradientConfig:
    line_width_cpl: int = 55
    color_a: str = DEFAULT_COLOR_A
    color_b: str = DEFAULT_COLOR_B
    serpentine: bool = True

    def __post_init__(self):
        if not MIN_WIDTH <= self.line_width_cpl <= MAX_WIDTH:
            raise ValueError(
                f"line_width_cpl must be in [{MIN_WIDTH}, {MAX_WIDTH}], got {self.line_width_cpl}")
        parse_color(self.color_a)
        parse_color(self.color_b)


DEFAULT_CONFIG = GradientConfig()


def _wrap_texts(word_texts: list[str], width: int) -> list[tuple[int, int]]:
    lines: list[tuple[int, int]] = []
    start = 0
    length = 0
    for i, w in enumerate(word_texts):
        if i == start:
            # the first word always joins, even when longer than the width
            length = len(w)
            continue
        if length + 1 + len(w) <= width:
            length += 1 + len(w)
        else:
            lines.append((start, i))
            start = i
            length = len(w)
    if word_texts:
        lines.append((start, len(word_texts)))
    return lines


def wrap_lines(doc: TokenizedDocument, width_cpl: int) -> list[tuple[int, int]]:
    """Greedy word wrap over the document's word tokens.

    Returns half-open ``(start, end)`` ranges of word-order indices; a word
    longer than the width overflows alone on its own line.
    """
    return _wrap_texts([tok.text for _, tok in doc.word_tokens()], width_cpl)


def _lerp(a: tuple[int, int, int], b: tuple[int, int, int], t: float) -> tuple[int, int, int]:
    # component-wise, rounded half-up so the hand-traceable midpoints hold
    return tuple(int((a[c] + (b[c] - a[c]) * t) + 0.5) for c in range(3))  # type: ignore[return-value]


def assign_colors(lines: list[tuple[int, int]], config: GradientConfig = DEFAULT_CONFIG) -> list[str]:
    """Per-word ``#rrggbb`` colors for the wrapped lines.

    Within a line, word k of n sits at t = k/(n-1) between the line's start
    and end colors (t = 0 for a single word). Serpentine lines start on the
    previous line's final color, which keeps adjacent words across a break
    identical even when a line holds a single word.
    """
    color_a = parse_color(config.color_a)
    color_b = parse_color(config.color_b)
    colors: list[str] = []
    start = color_a
    for s, e in lines:
        end = color_b if start == color_a else color_a
        if not config.serpentine:
            start, end = color_a, color_b
        n = e - s
        last = start
        for k in range(n):
            t = 0.0 if n == 1 else k / (n - 1)
            last = _lerp(start, end, t)
            colors.append(format_color(last))
        start = last
    return colors


def gradient_payload(doc: TokenizedDocument, config: GradientConfig = DEFAULT_CONFIG) -> dict:
    """Words, per-word colors and line ranges, shaped for the HTTP response."""
    words = [tok.text for _, tok in doc.word_tokens()]
    lines = _wrap_texts(words, config.line_width_cpl)
    return {
        "width": config.line_width_cpl,
        "serpentine": config.serpentine,
        "words": words,
        "colors": assign_colors(lines, config),
        "lines": [[s, e] for s, e in lines],
    }
