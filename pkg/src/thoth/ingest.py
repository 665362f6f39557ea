"""Text ingestion: lossless tokenization, sentence boundaries, syllables.

The tokenizer splits text into Word, Number, Punctuation and Whitespace
tokens whose concatenation reproduces the input byte-for-byte. Sentence
boundaries follow a deliberately small rule set: a ``.``, ``!`` or ``?``
token ends a sentence when it is followed by whitespace plus an uppercase
letter or digit (or end of text), unless the preceding word is a known
abbreviation. Everything downstream (statistics, readability formulas,
scheduling) is computed from this token stream.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import EncodingError

__all__ = [
    "Token",
    "TokenKind",
    "TokenizedDocument",
    "tokenize",
    "decode_utf8",
    "count_syllables",
    "normalize_word",
]

# Words whose trailing period does not end a sentence.
ABBREVIATIONS = frozenset({
    "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "vs",
    "etc", "e.g", "i.e", "fig", "al",
})

SENTENCE_ENDERS = ".!?"
ASCII_DIGITS = "0123456789"
VOWELS = "aeiou"


class TokenKind(str, enum.Enum):
    WORD = "word"
    NUMBER = "number"
    PUNCTUATION = "punctuation"
    WHITESPACE = "whitespace"


@dataclass(frozen=True, slots=True)
class Token:
    kind: TokenKind
    text: str
    span: tuple[int, int]  # half-open byte range into the UTF-8 source
    sentence_index: int
    sentence_final: bool = False

    @property
    def is_wordlike(self) -> bool:
        return self.kind in (TokenKind.WORD, TokenKind.NUMBER)


@dataclass(frozen=True, slots=True)
class TokenizedDocument:
    source_text: str
    tokens: tuple[Token, ...]
    sentence_count: int

    def word_tokens(self) -> list[tuple[int, Token]]:
        """Word and Number tokens with their positions in the token stream."""
        return [(i, t) for i, t in enumerate(self.tokens) if t.is_wordlike]


def decode_utf8(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(exc.start) from exc


def _is_letter(c: str) -> bool:
    return c.isalpha()


def _is_digit(c: str) -> bool:
    return c in ASCII_DIGITS


def _scan_wordlike(text: str, start: int) -> int:
    """End of the word/number run starting at ``start`` (a letter or digit).

    Apostrophes join two letters ("don't"), hyphens join letters or digits
    ("well-known", "3-4"), and ``.``/``,`` join digits ("3.14", "1,000").
    """
    n = len(text)
    j = start
    while j < n:
        c = text[j]
        if _is_letter(c) or _is_digit(c):
            j += 1
            continue
        if j > start and j + 1 < n:
            p, q = text[j - 1], text[j + 1]
            if c in "'’" and _is_letter(p) and _is_letter(q):
                j += 1
                continue
            if c == "-" and (_is_letter(p) or _is_digit(p)) and (_is_letter(q) or _is_digit(q)):
                j += 1
                continue
            if c in ".," and _is_digit(p) and _is_digit(q):
                j += 1
                continue
        break
    return j


def _ends_sentence(text: str, punct: str, char_pos: int) -> bool:
    """Decide whether the sentence-ender at ``char_pos`` closes a sentence."""
    n = len(text)
    after = char_pos + 1
    if after >= n:
        final = True
    elif text[after].isspace():
        k = after
        while k < n and text[k].isspace():
            k += 1
        final = k >= n or text[k].isupper() or _is_digit(text[k])
    else:
        final = False
    if final and punct == ".":
        # abbreviation guard: look back at the chunk of letters/dots
        k = char_pos
        while k > 0 and (_is_letter(text[k - 1]) or text[k - 1] == "."):
            k -= 1
        if text[k:char_pos].strip(".").lower() in ABBREVIATIONS:
            final = False
    return final


def tokenize(source_text: str | bytes) -> TokenizedDocument:
    """Split text into a lossless, sentence-annotated token stream.

    Accepts ``bytes`` for convenience; they must decode as UTF-8 or an
    :class:`~thoth.errors.EncodingError` naming the byte offset is raised.
    Concatenating the returned token texts reproduces the input exactly.
    """
    if isinstance(source_text, bytes):
        source_text = decode_utf8(source_text)
    text = source_text
    n = len(text)

    # pass 1: raw segmentation with char offsets
    raw: list[tuple[TokenKind, str, int]] = []
    pos = 0
    while pos < n:
        c = text[pos]
        if c.isspace():
            j = pos + 1
            while j < n and text[j].isspace():
                j += 1
            raw.append((TokenKind.WHITESPACE, text[pos:j], pos))
            pos = j
        elif _is_letter(c) or _is_digit(c):
            j = _scan_wordlike(text, pos)
            run = text[pos:j]
            kind = TokenKind.WORD if any(_is_letter(ch) for ch in run) else TokenKind.NUMBER
            raw.append((kind, run, pos))
            pos = j
        else:
            raw.append((TokenKind.PUNCTUATION, c, pos))
            pos += 1

    # pass 2: sentence numbering; the index only advances once the next
    # non-whitespace token appears, so trailing whitespace stays in-sentence
    tokens: list[Token] = []
    byte_pos = 0
    current = 0
    pending = False
    any_nonspace = False
    for kind, t, char_pos in raw:
        if kind is not TokenKind.WHITESPACE:
            any_nonspace = True
            if pending:
                current += 1
                pending = False
        final = (
            kind is TokenKind.PUNCTUATION
            and t in SENTENCE_ENDERS
            and _ends_sentence(text, t, char_pos)
        )
        if final:
            pending = True
        end_byte = byte_pos + len(t.encode("utf-8"))
        tokens.append(Token(kind, t, (byte_pos, end_byte), current, final))
        byte_pos = end_byte

    sentence_count = current + 1 if any_nonspace else 0
    return TokenizedDocument(text, tuple(tokens), sentence_count)


@lru_cache(maxsize=1)
def _syllable_exceptions() -> dict[str, int]:
    table: dict[str, int] = {}
    data = resources.files("thoth").joinpath("data/syllable_exceptions.txt")
    for line in data.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word, count = line.split("\t")
        table[word.lower()] = int(count)
    return table


def _vowel_group_count(part: str) -> int:
    """Syllables of one lowercase hyphen-free chunk containing a letter."""
    groups = 0
    prev_vowel = False
    for i, c in enumerate(part):
        vowel = c in VOWELS or (c == "y" and i > 0)
        if vowel and not prev_vowel:
            groups += 1
        prev_vowel = vowel
    # silent final e, except a syllabic consonant+"le" ("table", "little")
    if part.endswith("e") and not (
        len(part) >= 3 and part.endswith("le")
        and part[-3].isalpha() and part[-3] not in "aeiouy"
    ):
        groups -= 1
    return max(groups, 1)


def count_syllables(word: str) -> int:
    """Estimate syllables by counting vowel groups.

    ``y`` is vocalic except word-initially; a final silent ``e`` is dropped
    unless it forms a consonant+"le" syllable; a small exception table
    overrides known misfires. Hyphenated words sum their parts and digit
    runs count one syllable per digit. Always at least 1.
    """
    if not any(_is_letter(c) for c in word):
        raise ValueError(f"count_syllables needs at least one letter: {word!r}")
    w = word.lower()
    exceptions = _syllable_exceptions()
    if w in exceptions:
        return exceptions[w]
    total = 0
    for part in w.split("-"):
        if not part:
            continue
        if part in exceptions:
            total += exceptions[part]
        elif any(_is_letter(c) for c in part):
            total += _vowel_group_count(part)
        else:
            total += sum(1 for c in part if _is_digit(c))
    return max(total, 1)


def normalize_word(word: str) -> str:
    """Lowercase and strip surrounding punctuation, keeping inner apostrophes.

    Curly apostrophes are canonicalized to ``'`` so lexicon lookups match.
    Idempotent; may return "" for input with no letters or digits.
    """
    w = word.replace("’", "'").lower()
    i, j = 0, len(w)
    while i < j and not (_is_letter(w[i]) or _is_digit(w[i])):
        i += 1
    while j > i and not (_is_letter(w[j - 1]) or _is_digit(w[j - 1])):
        j -= 1
    return w[i:j]
