"""Per-word display scheduling for RSVP playback.

Every Word/Number token becomes one frame. The base frame duration is
60000/wpm milliseconds; multiplicative modifiers lengthen frames for long
words, clause and sentence punctuation, and unfamiliar words. The
unfamiliar multiplier is applied last so that two schedules differing only
in that multiplier differ by exactly that factor on unfamiliar words.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InsufficientTextError, ProfileError
from .familiarity import DALE_CHALL, LEXICON_NAMES, FamiliarityLexicon, builtin_lexicon, is_familiar
from .gradient import DEFAULT_CONFIG, GradientConfig, assign_colors, wrap_lines
from .ingest import Token, TokenizedDocument, TokenKind, normalize_word, tokenize
from .readability import ReadabilityReport, analyze

__all__ = [
    "ReaderProfile",
    "ScheduleEntry",
    "DisplaySchedule",
    "base_duration_ms",
    "age_factor",
    "word_duration",
    "orp_index",
    "build_schedule",
    "schedule_text",
    "schedule_json",
]

WPM_MIN, WPM_MAX = 60.0, 1500.0
MULTIPLIER_MIN, MULTIPLIER_MAX = 1.0, 4.0
AGE_FACTOR_MIN, AGE_FACTOR_MAX = 0.5, 2.0
LENGTH_THRESHOLD = 8          # letters beyond this add 10% each
LENGTH_CAP = 2.0
SENTENCE_PAUSE = 2.0
CLAUSE_PAUSE = 1.5
CLAUSE_MARKS = ",;:"


@dataclass(frozen=True, slots=True)
class ReaderProfile:
    base_wpm: float = 300.0
    reader_age: float | None = None
    unfamiliar_multiplier: float = 1.5
    lexicon: str = DALE_CHALL
    length_modifier_enabled: bool = True
    punctuation_pauses_enabled: bool = True

    def __post_init__(self):
        if not WPM_MIN <= self.base_wpm <= WPM_MAX:
            raise ProfileError(f"base_wpm must be in [{WPM_MIN:g}, {WPM_MAX:g}]")
        if not MULTIPLIER_MIN <= self.unfamiliar_multiplier <= MULTIPLIER_MAX:
            raise ProfileError(
                f"unfamiliar_multiplier must be in [{MULTIPLIER_MIN}, {MULTIPLIER_MAX}]")
        if self.reader_age is not None and self.reader_age <= 0:
            raise ProfileError("reader_age must be positive")
        if self.lexicon not in LEXICON_NAMES:
            raise ProfileError(f"unknown lexicon {self.lexicon!r}")


@dataclass(frozen=True, slots=True)
class ScheduleEntry:
    token_index: int
    text: str
    duration_ms: float
    orp_index: int
    unfamiliar: bool
    color: str | None = None


@dataclass(frozen=True, slots=True)
class DisplaySchedule:
    entries: tuple[ScheduleEntry, ...]
    profile: ReaderProfile
    effective_wpm: float
    total_ms: float


def base_duration_ms(effective_wpm: float) -> float:
    """Frame duration at a uniform rate: 60000/wpm milliseconds."""
    if effective_wpm <= 0:
        raise ValueError("wpm must be positive")
    return 60000.0 / effective_wpm


def age_factor(profile: ReaderProfile, estimated_text_age: float) -> float:
    """Speed scale for the reader's age relative to the text's age.

    1.0 when no age is given; otherwise the ratio reader/text clamped to
    [0.5, 2.0] so extreme mismatches stay usable.
    """
    if profile.reader_age is None:
        return 1.0
    ratio = profile.reader_age / estimated_text_age
    return min(max(ratio, AGE_FACTOR_MIN), AGE_FACTOR_MAX)


def orp_index(word_text: str) -> int:
    """Optimal-recognition-point character index by word length."""
    n = len(word_text)
    if n < 1:
        raise ValueError("orp_index needs a non-empty word")
    if n == 1:
        return 0
    if n <= 5:
        return 1
    if n <= 9:
        return 2
    if n <= 13:
        return 3
    return 4


def word_duration(
    word_text: str,
    base_ms: float,
    profile: ReaderProfile,
    lexicon: FamiliarityLexicon,
    *,
    sentence_final: bool = False,
    clause_punctuation: bool = False,
) -> float:
    """Display time for one word; modifiers compose multiplicatively."""
    if base_ms <= 0:
        raise ValueError("base_ms must be positive")
    unfamiliar = not is_familiar(lexicon, normalize_word(word_text))
    return _duration(word_text, base_ms, profile, unfamiliar, sentence_final, clause_punctuation)


def _duration(
    text: str,
    base_ms: float,
    profile: ReaderProfile,
    unfamiliar: bool,
    sentence_final: bool,
    clause_punctuation: bool,
) -> float:
    d = base_ms
    if profile.length_modifier_enabled and len(text) > LENGTH_THRESHOLD:
        d *= min(1.0 + 0.1 * (len(text) - LENGTH_THRESHOLD), LENGTH_CAP)
    if profile.punctuation_pauses_enabled:
        if sentence_final:
            d *= SENTENCE_PAUSE
        elif clause_punctuation:
            d *= CLAUSE_PAUSE
    if unfamiliar:
        # applied last: schedules at multiplier m and 1.0 then differ by
        # exactly m on unfamiliar words (acceptance relies on this)
        d *= profile.unfamiliar_multiplier
    return d


def _trailing_puncts(tokens: tuple[Token, ...], word_pos: int, next_word_pos: int) -> list[Token]:
    return [t for t in tokens[word_pos + 1:next_word_pos] if t.kind is TokenKind.PUNCTUATION]


def build_schedule(
    doc: TokenizedDocument,
    report: ReadabilityReport | None,
    profile: ReaderProfile,
    lexicon: FamiliarityLexicon | None = None,
    gradient_config: GradientConfig = DEFAULT_CONFIG,
) -> DisplaySchedule:
    """One schedule entry per Word/Number token, in document order.

    ``report`` supplies the text's estimated age and is only required when
    the profile carries a reader age. Punctuation tokens get no frames; a
    word's pause comes from the punctuation that follows it before the
    next word.
    """
    words = doc.word_tokens()
    if not words:
        raise InsufficientTextError("nothing to schedule: no words")
    if profile.reader_age is not None and report is None:
        raise ValueError("a readability report is required to apply a reader age")

    factor = age_factor(profile, report.estimated_age) if report is not None else 1.0
    effective_wpm = profile.base_wpm * factor
    base_ms = base_duration_ms(effective_wpm)

    lexicon = lexicon or builtin_lexicon(profile.lexicon)
    colors = assign_colors(wrap_lines(doc, gradient_config.line_width_cpl), gradient_config)

    positions = [pos for pos, _ in words]
    entries: list[ScheduleEntry] = []
    durations: list[float] = []
    for w_idx, (pos, tok) in enumerate(words):
        next_pos = positions[w_idx + 1] if w_idx + 1 < len(words) else len(doc.tokens)
        puncts = _trailing_puncts(doc.tokens, pos, next_pos)
        sentence_final = any(p.sentence_final for p in puncts)
        clause = any(p.text in CLAUSE_MARKS for p in puncts)
        unfamiliar = not is_familiar(lexicon, normalize_word(tok.text))
        d = _duration(tok.text, base_ms, profile, unfamiliar, sentence_final, clause)
        durations.append(d)
        entries.append(ScheduleEntry(
            token_index=pos,
            text=tok.text,
            duration_ms=d,
            orp_index=orp_index(tok.text),
            unfamiliar=unfamiliar,
            color=colors[w_idx],
        ))

    return DisplaySchedule(
        entries=tuple(entries),
        profile=profile,
        effective_wpm=effective_wpm,
        total_ms=sum(durations),
    )


def schedule_text(
    text: str | bytes,
    profile: ReaderProfile | None = None,
    gradient_config: GradientConfig = DEFAULT_CONFIG,
) -> DisplaySchedule:
    """Tokenize, analyze (only when an age adjustment needs it) and schedule."""
    profile = profile or ReaderProfile()
    doc = tokenize(text)
    lexicon = builtin_lexicon(profile.lexicon)
    report = analyze(doc, lexicon) if profile.reader_age is not None else None
    return build_schedule(doc, report, profile, lexicon, gradient_config)


def schedule_json(schedule: DisplaySchedule) -> str:
    """Canonical schedule JSON: the byte-stable wire format the UI plays."""
    payload = {
        "version": 1,
        "effective_wpm": schedule.effective_wpm,
        "total_ms": schedule.total_ms,
        "entries": [
            {
                "i": e.token_index,
                "text": e.text,
                "ms": e.duration_ms,
                "orp": e.orp_index,
                "unfamiliar": e.unfamiliar,
                "color": e.color,
            }
            for e in schedule.entries
        ],
    }
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))
