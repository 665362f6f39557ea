"""Word-familiarity lexicons and familiar/unfamiliar classification.

A lexicon is a plain set of lowercase words loaded from a one-word-per-line
file. Lookups accept regular inflections of list words (plural -s/-es,
-ies, past -ed, progressive -ing, possessive -'s) so that "running" counts
as familiar when "run" is listed. Numbers are never familiar.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterator

from .errors import InsufficientTextError, LexiconError
from .ingest import TokenizedDocument, normalize_word

__all__ = [
    "DALE_CHALL",
    "SPACHE",
    "TOP1000",
    "LEXICON_NAMES",
    "FamiliarityLexicon",
    "load_lexicon",
    "builtin_lexicon",
    "is_familiar",
    "familiar_base",
    "difficult_fraction",
]

DALE_CHALL = "dale-chall"
SPACHE = "spache"
TOP1000 = "top1000"
LEXICON_NAMES = (DALE_CHALL, SPACHE, TOP1000)

_BUILTIN_FILES = {
    DALE_CHALL: "dale_chall.txt",
    SPACHE: "spache.txt",
    TOP1000: "top1000.txt",
}


@dataclass(frozen=True, slots=True)
class FamiliarityLexicon:
    name: str
    words: frozenset[str]
    allow_inflections: bool = True

    def __len__(self) -> int:
        return len(self.words)


def load_lexicon(name: str, path: str | Path) -> FamiliarityLexicon:
    """Load a lexicon file: one word per line, ``#`` comments, blanks ignored.

    Entries are lowercased and deduplicated. Raises
    :class:`~thoth.errors.LexiconError` for a missing file, undecodable
    bytes, or an empty result.
    """
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise LexiconError(f"cannot read lexicon {path}: {exc}") from exc
    try:
        content = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise LexiconError(f"lexicon {path} is not valid UTF-8") from exc
    words = set()
    for line in content.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    if not words:
        raise LexiconError(f"lexicon {path} contains no words")
    return FamiliarityLexicon(name=name, words=frozenset(words))


@lru_cache(maxsize=None)
def builtin_lexicon(name: str) -> FamiliarityLexicon:
    """One of the shipped lexicons: dale-chall, spache or top1000."""
    try:
        filename = _BUILTIN_FILES[name]
    except KeyError:
        raise LexiconError(f"unknown lexicon {name!r}; expected one of {LEXICON_NAMES}")
    with resources.as_file(resources.files("thoth").joinpath(f"data/{filename}")) as p:
        return load_lexicon(name, p)


def _base_candidates(w: str) -> Iterator[str]:
    # at most one suffix is stripped; order decides the reported base form
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
        yield w[:-1]       # hoped -> hope (restored e wins over the bare stem)
        yield w[:-2]       # jumped -> jump
        if len(w) >= 4 and w[-3] == w[-4]:
            yield w[:-3]   # stopped -> stop
    if w.endswith("ing") and len(w) > 3:
        yield w[:-3] + "e"  # hoping -> hope
        yield w[:-3]       # reading -> read
        if len(w) >= 5 and w[-4] == w[-5]:
            yield w[:-4]   # running -> run


def familiar_base(lexicon: FamiliarityLexicon, normalized_word: str) -> str | None:
    """The lexicon entry that makes the word familiar, or None.

    Expects an already-normalized word (see
    :func:`~thoth.ingest.normalize_word`). Words without letters (numbers)
    are never familiar.
    """
    if not normalized_word or not any(c.isalpha() for c in normalized_word):
        return None
    if not lexicon.allow_inflections:
        return normalized_word if normalized_word in lexicon.words else None
    for candidate in _base_candidates(normalized_word):
        if candidate in lexicon.words:
            return candidate
    return None


def is_familiar(lexicon: FamiliarityLexicon, normalized_word: str) -> bool:
    return familiar_base(lexicon, normalized_word) is not None


def difficult_fraction(doc: TokenizedDocument, lexicon: FamiliarityLexicon) -> float:
    """Fraction of word tokens that are unfamiliar under ``lexicon``."""
    words = doc.word_tokens()
    if not words:
        raise InsufficientTextError("no words to classify")
    unfamiliar = sum(
        1 for _, tok in words if not is_familiar(lexicon, normalize_word(tok.text))
    )
    return unfamiliar / len(words)
