#!/usr/bin/env python3
"""Independent straight-line oracle for the default-profile display schedule.

Recomputes the schedule JSON for a text file with the default reader profile
(300 wpm, 1.5x unfamiliar multiplier, Dale-Chall lexicon, length modifier and
punctuation pauses enabled, no reader age) without importing the thoth
package. Deliberately duplicates the documented rules in flat code.

Usage: python3 tools/oracle_schedule.py fixtures/sample_01.txt > fixtures/sample_01.schedule.json
"""

import json
import sys
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "src" / "thoth" / "data"

ABBREVIATIONS = {"mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "vs",
                 "etc", "e.g", "i.e", "fig", "al"}
ASCII_DIGITS = "0123456789"

BASE_WPM = 300.0
UNFAMILIAR_MULTIPLIER = 1.5
LINE_WIDTH = 55
COLOR_A = (0x00, 0x42, 0x9D)
COLOR_B = (0xD1, 0x49, 0x5B)


def load_words(path):
    words = set()
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return words


DALE_CHALL = load_words(DATA / "dale_chall.txt")


def is_letter(c):
    return c.isalpha()


def is_digit(c):
    return c in ASCII_DIGITS


def scan_wordlike(text, start):
    n = len(text)
    j = start
    while j < n:
        c = text[j]
        if is_letter(c) or is_digit(c):
            j += 1
            continue
        if j > start and j + 1 < n:
            p, q = text[j - 1], text[j + 1]
            if c in "'’" and is_letter(p) and is_letter(q):
                j += 1
                continue
            if c == "-" and (is_letter(p) or is_digit(p)) and (is_letter(q) or is_digit(q)):
                j += 1
                continue
            if c in ".," and is_digit(p) and is_digit(q):
                j += 1
                continue
        break
    return j


def tokenize(text):
    raw = []
    pos = 0
    n = len(text)
    while pos < n:
        c = text[pos]
        if c.isspace():
            j = pos
            while j < n and text[j].isspace():
                j += 1
            raw.append(["ws", text[pos:j], pos, False])
            pos = j
        elif is_letter(c) or is_digit(c):
            j = scan_wordlike(text, pos)
            run = text[pos:j]
            kind = "word" if any(is_letter(ch) for ch in run) else "number"
            raw.append([kind, run, pos, False])
            pos = j
        else:
            raw.append(["punct", c, pos, False])
            pos += 1

    for tok in raw:
        kind, t, start, _ = tok
        if kind != "punct" or t not in ".!?":
            continue
        e = start + 1
        if e >= n:
            final = True
        elif text[e].isspace():
            k = e
            while k < n and text[k].isspace():
                k += 1
            final = k >= n or text[k].isupper() or is_digit(text[k])
        else:
            final = False
        if final and t == ".":
            k = start
            while k > 0 and (is_letter(text[k - 1]) or text[k - 1] == "."):
                k -= 1
            chunk = text[k:start].strip(".").lower()
            if chunk in ABBREVIATIONS:
                final = False
        tok[3] = final
    return raw


def normalize(word):
    w = word.replace("’", "'").lower()
    i, j = 0, len(w)
    while i < j and not (is_letter(w[i]) or is_digit(w[i])):
        i += 1
    while j > i and not (is_letter(w[j - 1]) or is_digit(w[j - 1])):
        j -= 1
    return w[i:j]


def base_candidates(w):
    yield w
    if w.endswith("'s") and len(w) > 2:
        yield w[:-2]
    if w.endswith("ies") and len(w) > 3:
        yield w[:-3] + "y"
    if w.endswith("es") and len(w) > 2:
        yield w[:-2]
    if w.endswith("s") and len(w) > 1:
        yield w[:-1]
    if w.endswith("ed") and len(w) > 2:
        yield w[:-1]
        yield w[:-2]
        if len(w) >= 4 and w[-3] == w[-4]:
            yield w[:-3]
    if w.endswith("ing") and len(w) > 3:
        yield w[:-3] + "e"
        yield w[:-3]
        if len(w) >= 5 and w[-4] == w[-5]:
            yield w[:-4]


def familiar(normalized):
    if not normalized or not any(is_letter(c) for c in normalized):
        return False
    return any(c in DALE_CHALL for c in base_candidates(normalized))


def orp_index(length):
    if length == 1:
        return 0
    if length <= 5:
        return 1
    if length <= 9:
        return 2
    if length <= 13:
        return 3
    return 4


def wrap(word_texts, width):
    lines = []
    start = 0
    length = 0
    for i, w in enumerate(word_texts):
        if i == start:
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


def lerp(a, b, t):
    return tuple(int((a[c] + (b[c] - a[c]) * t) + 0.5) for c in range(3))


def gradient_colors(word_texts):
    colors = [None] * len(word_texts)
    start = COLOR_A
    for s, e in wrap(word_texts, LINE_WIDTH):
        end = COLOR_B if start == COLOR_A else COLOR_A
        n = e - s
        last = start
        for k in range(n):
            t = 0.0 if n == 1 else k / (n - 1)
            rgb = lerp(start, end, t)
            colors[s + k] = "#%02x%02x%02x" % rgb
            last = rgb
        start = last
    return colors


def main():
    text = Path(sys.argv[1]).read_text(encoding="utf-8")
    toks = tokenize(text)

    words = [(i, t) for i, (kind, t, _p, _f) in enumerate(toks) if kind in ("word", "number")]
    base_ms = 60000.0 / BASE_WPM

    # punctuation runs after each word, up to the next word token
    word_positions = [i for i, _ in words]
    entries = []
    colors = gradient_colors([t for _, t in words])
    durations = []
    for w_idx, (tok_i, t) in enumerate(words):
        nxt = word_positions[w_idx + 1] if w_idx + 1 < len(words) else len(toks)
        puncts = [toks[j] for j in range(tok_i + 1, nxt) if toks[j][0] == "punct"]
        d = base_ms
        if len(t) > 8:
            d *= min(1.0 + 0.1 * (len(t) - 8), 2.0)
        if any(p[3] for p in puncts):
            d *= 2.0
        elif any(p[1] in ",;:" for p in puncts):
            d *= 1.5
        unfam = not familiar(normalize(t))
        if unfam:
            d *= UNFAMILIAR_MULTIPLIER
        durations.append(d)
        entries.append({
            "i": tok_i,
            "text": t,
            "ms": d,
            "orp": orp_index(len(t)),
            "unfamiliar": unfam,
            "color": colors[w_idx],
        })

    schedule = {
        "version": 1,
        "effective_wpm": BASE_WPM,
        "total_ms": sum(durations),
        "entries": entries,
    }
    sys.stdout.write(json.dumps(schedule, ensure_ascii=False, separators=(",", ":")))


if __name__ == "__main__":
    main()
