#!/usr/bin/env python3
"""Independent straight-line oracle for the readability pipeline.

Reads a text file, recomputes every count and metric directly (no imports
from the thoth package), and prints the expected-result JSON used by the
fixture tests. Keep this script dumb and linear on purpose: it is the
reference the library is checked against, so it must not share code with it.

Usage: python3 tools/oracle_readability.py fixtures/sample_01.txt > fixtures/sample_01.expected.json
"""

import json
import math
import statistics
import sys
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "src" / "thoth" / "data"

ABBREVIATIONS = {"mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "vs",
                 "etc", "e.g", "i.e", "fig", "al"}
ASCII_DIGITS = "0123456789"


def load_words(path):
    words = set()
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return words


def load_exceptions(path):
    table = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word, count = line.split("\t")
        table[word.lower()] = int(count)
    return table


DALE_CHALL = load_words(DATA / "dale_chall.txt")
SPACHE = load_words(DATA / "spache.txt")
SYLLABLE_EXCEPTIONS = load_exceptions(DATA / "syllable_exceptions.txt")


# --- tokenization, re-derived from the documented rules -------------------

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
    """Returns list of (kind, text, start, sentence_index, sentence_final)."""
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

    # sentence-final flags
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

    toks = []
    cur = 0
    pending = False
    for kind, t, start, final in raw:
        if kind != "ws":
            if pending:
                cur += 1
                pending = False
            if final:
                pending = True
        toks.append((kind, t, start, cur, final))
    return toks


# --- syllables -------------------------------------------------------------

def vowel_groups(part):
    groups = 0
    prev = False
    for i, c in enumerate(part):
        v = c in "aeiou" or (c == "y" and i > 0)
        if v and not prev:
            groups += 1
        prev = v
    if part.endswith("e") and not (
        len(part) >= 3 and part.endswith("le") and part[-3].isalpha() and part[-3] not in "aeiouy"
    ):
        groups -= 1
    return max(groups, 1)


def syllables(word):
    w = word.lower()
    if w in SYLLABLE_EXCEPTIONS:
        return SYLLABLE_EXCEPTIONS[w]
    total = 0
    for part in w.split("-"):
        if not part:
            continue
        if part in SYLLABLE_EXCEPTIONS:
            total += SYLLABLE_EXCEPTIONS[part]
        elif any(is_letter(c) for c in part):
            total += vowel_groups(part)
        else:
            total += sum(1 for c in part if is_digit(c))
    return max(total, 1)


# --- familiarity -----------------------------------------------------------

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


def familiar(word_set, normalized):
    if not normalized or not any(is_letter(c) for c in normalized):
        return False
    return any(c in word_set for c in base_candidates(normalized))


# --- formulas --------------------------------------------------------------

def clamp_grade(raw):
    return min(max(raw, 0.0), 22.0)


def dale_chall_grade(raw):
    if raw < 5.0:
        return 4.0
    if raw < 6.0:
        return 5.5
    if raw < 7.0:
        return 7.5
    if raw < 8.0:
        return 9.5
    if raw < 9.0:
        return 11.5
    if raw < 10.0:
        return 14.0
    return 16.0


def fre_grade(raw):
    if raw >= 90.0:
        return 5.0
    if raw >= 80.0:
        return 6.0
    if raw >= 70.0:
        return 7.0
    if raw >= 60.0:
        return 8.5
    if raw >= 50.0:
        return 11.0
    if raw >= 30.0:
        return 14.0
    return 17.0


def main():
    text = Path(sys.argv[1]).read_text(encoding="utf-8")
    toks = tokenize(text)

    chars = sum(1 for c in text if not c.isspace())
    letters = sum(1 for c in text if c.isalpha())

    wordlike = [(kind, t, si) for kind, t, _, si, _ in toks if kind in ("word", "number")]
    words = len(wordlike)
    sentences = (max(si for kind, t, _, si, _ in toks if kind != "ws") + 1
                 if any(kind != "ws" for kind, *_ in toks) else 0)

    per_word_syll = []
    for kind, t, _si in wordlike:
        if kind == "number":
            per_word_syll.append(max(sum(1 for c in t if is_digit(c)), 1))
        else:
            per_word_syll.append(syllables(t))
    syll = sum(per_word_syll)
    poly = sum(1 for s in per_word_syll if s >= 3)

    # Gunning Fog complex words: Word tokens only, no hyphenated compounds,
    # no mid-sentence capitalized words, >=3 syllables after one suffix strip.
    first_of_sentence = {}
    for kind, t, si in wordlike:
        if si not in first_of_sentence:
            first_of_sentence[si] = t
    complex_words = 0
    seen_in_sentence = set()
    for kind, t, si in wordlike:
        at_start = si not in seen_in_sentence
        seen_in_sentence.add(si)
        if kind != "word" or "-" in t:
            continue
        if t[0].isupper() and not at_start:
            continue
        w = t.lower()
        if w.endswith("ing") and len(w) > 3:
            stripped = w[:-3]
        elif w.endswith("ed") and len(w) > 2:
            stripped = w[:-2]
        elif w.endswith("es") and len(w) > 2:
            stripped = w[:-2]
        else:
            stripped = w
        if any(is_letter(c) for c in stripped) and syllables(stripped) >= 3:
            complex_words += 1

    difficult = 0
    spache_unfamiliar = 0
    for kind, t, _si in wordlike:
        norm = normalize(t)
        if not familiar(DALE_CHALL, norm):
            difficult += 1
        if not familiar(SPACHE, norm):
            spache_unfamiliar += 1

    df = difficult / words
    uf = spache_unfamiliar / words

    ari_raw = 4.71 * (chars / words) + 0.5 * (words / sentences) - 21.43
    fre_raw = 206.835 - 1.015 * (words / sentences) - 84.6 * (syll / words)
    fkg_raw = 0.39 * (words / sentences) + 11.8 * (syll / words) - 15.59
    fog_raw = 0.4 * ((words / sentences) + 100.0 * (complex_words / words))
    smog_raw = 1.0430 * math.sqrt(poly * 30.0 / sentences) + 3.1291
    cl_raw = 0.0588 * (100.0 * letters / words) - 0.296 * (100.0 * sentences / words) - 15.8
    dc_raw = 0.1579 * (100.0 * df) + 0.0496 * (words / sentences)
    if df > 0.05:
        dc_raw += 3.6365
    spache_raw = 0.121 * (words / sentences) + 0.082 * (100.0 * uf) + 0.659

    scores = {
        "ari": {"raw": ari_raw, "grade": clamp_grade(ari_raw), "reliable": True},
        "flesch_reading_ease": {"raw": fre_raw, "grade": fre_grade(fre_raw), "reliable": True},
        "flesch_kincaid_grade": {"raw": fkg_raw, "grade": clamp_grade(fkg_raw), "reliable": True},
        "gunning_fog": {"raw": fog_raw, "grade": clamp_grade(fog_raw), "reliable": True},
        "smog": {"raw": smog_raw, "grade": clamp_grade(smog_raw), "reliable": sentences >= 30},
        "coleman_liau": {"raw": cl_raw, "grade": clamp_grade(cl_raw), "reliable": True},
        "dale_chall": {"raw": dc_raw, "grade": dale_chall_grade(dc_raw), "reliable": True},
        "spache": {"raw": spache_raw, "grade": clamp_grade(spache_raw), "reliable": True},
    }
    consensus = statistics.median([
        scores[m]["grade"]
        for m in ("ari", "flesch_kincaid_grade", "gunning_fog", "smog",
                  "coleman_liau", "dale_chall", "spache")
    ])

    out = {
        "counts": {
            "chars": chars,
            "letters": letters,
            "words": words,
            "sentences": sentences,
            "syllables": syll,
            "polysyllables": poly,
            "complex_words": complex_words,
            "difficult_words": difficult,
            "spache_unfamiliar": spache_unfamiliar,
        },
        "scores": scores,
        "consensus_grade": consensus,
        "estimated_age": consensus + 5.0,
        "difficult_word_fraction": df,
    }
    json.dump(out, sys.stdout, indent=2, ensure_ascii=False)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
