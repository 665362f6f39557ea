#!/usr/bin/env python3
"""Walkthrough: the serpentine paragraph gradient, rendered in the terminal."""

from thoth import GradientConfig, assign_colors, tokenize, wrap_lines
from thoth.gradient import parse_color

text = ("Reading a long paragraph is easier when color carries the eye "
        "from the end of one line to the start of the next, so the wrap "
        "never breaks the visual flow of the sentence.")

doc = tokenize(text)
config = GradientConfig(line_width_cpl=38)
lines = wrap_lines(doc, config.line_width_cpl)
colors = assign_colors(lines, config)
words = [tok.text for _, tok in doc.word_tokens()]

for start, end in lines:
    parts = []
    for k in range(start, end):
        r, g, b = parse_color(colors[k])
        parts.append(f"\x1b[38;2;{r};{g};{b}m{words[k]}\x1b[0m")
    print(" ".join(parts))

print("\nadjacent words across each break share a color:")
for (s1, e1), (s2, e2) in zip(lines, lines[1:]):
    print(f"  {words[e1 - 1]!r} {colors[e1 - 1]}  ==  {words[s2]!r} {colors[s2]}")
