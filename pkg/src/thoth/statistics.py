"""Aggregate text counts feeding the readability formulas."""

from __future__ import annotations

from dataclasses import dataclass

from .familiarity import FamiliarityLexicon, is_familiar
from .ingest import Token, TokenizedDocument, TokenKind, count_syllables, normalize_word

__all__ = ["TextStatistics", "compute_statistics"]

FOG_SUFFIXES = ("ing", "ed", "es")  # stripped (one only) before the 3-syllable test


@dataclass(frozen=True, slots=True)
class TextStatistics:
    char_count: int          # non-whitespace characters
    letter_count: int
    word_count: int          # Word and Number tokens
    sentence_count: int
    syllable_count: int
    polysyllable_count: int  # words with >= 3 syllables
    complex_word_count: int  # Gunning Fog definition
    difficult_word_count: int  # unfamiliar under the selected lexicon
    per_word_syllables: tuple[int, ...]


def _word_syllables(token: Token) -> int:
    if token.kind is TokenKind.NUMBER:
        # spoken-digit approximation: one syllable per digit
        return max(sum(1 for c in token.text if c.isdigit()), 1)
    return count_syllables(token.text)


def _is_complex(token: Token, at_sentence_start: bool) -> bool:
    """Gunning Fog complex word: >=3 syllables after stripping one of
    -es/-ed/-ing, excluding proper nouns (capitalized mid-sentence) and
    hyphenated compounds. Numbers are not eligible."""
    if token.kind is not TokenKind.WORD or "-" in token.text:
        return False
    if token.text[0].isupper() and not at_sentence_start:
        return False
    w = token.text.lower()
    for suffix in FOG_SUFFIXES:
        if w.endswith(suffix) and len(w) > len(suffix):
            w = w[: -len(suffix)]
            break
    if not any(c.isalpha() for c in w):
        return False
    return count_syllables(w) >= 3


def compute_statistics(doc: TokenizedDocument, lexicon: FamiliarityLexicon) -> TextStatistics:
    """All counts the formulas need, in one pass over the token stream."""
    text = doc.source_text
    char_count = sum(1 for c in text if not c.isspace())
    letter_count = sum(1 for c in text if c.isalpha())

    words = doc.word_tokens()
    per_word = tuple(_word_syllables(tok) for _, tok in words)

    complex_count = 0
    difficult = 0
    seen_sentences: set[int] = set()
    for _, tok in words:
        at_start = tok.sentence_index not in seen_sentences
        seen_sentences.add(tok.sentence_index)
        if _is_complex(tok, at_start):
            complex_count += 1
        if not is_familiar(lexicon, normalize_word(tok.text)):
            difficult += 1

    return TextStatistics(
        char_count=char_count,
        letter_count=letter_count,
        word_count=len(words),
        sentence_count=doc.sentence_count,
        syllable_count=sum(per_word),
        polysyllable_count=sum(1 for s in per_word if s >= 3),
        complex_word_count=complex_count,
        difficult_word_count=difficult,
        per_word_syllables=per_word,
    )
