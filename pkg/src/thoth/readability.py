"""Readability metrics and their fusion into a consensus grade and age.

Each formula is a pure function of :class:`~thoth.statistics.TextStatistics`
counts. The consensus grade is the median of the grade-bearing metrics
(Flesch Reading Ease is an ease score, not a grade, so it is reported but
excluded); the estimated reader age is consensus grade + 5 following the
US school-entry convention.
"""

from __future__ import annotations

import enum
import json
import math
import statistics as stats_mod
from dataclasses import dataclass

from .errors import InsufficientTextError
from .familiarity import (
    DALE_CHALL,
    SPACHE,
    FamiliarityLexicon,
    builtin_lexicon,
    difficult_fraction,
)
from .ingest import TokenizedDocument, tokenize
from .statistics import TextStatistics, compute_statistics

__all__ = [
    "Metric",
    "MetricScore",
    "ReadabilityReport",
    "score_ari",
    "score_flesch",
    "score_fog",
    "score_smog",
    "score_coleman_liau",
    "score_dale_chall",
    "score_spache",
    "consensus",
    "analyze",
    "analyze_text",
    "report_json",
]

GRADE_MIN = 0.0
GRADE_MAX = 22.0
SMOG_MIN_SENTENCES = 30  # published sampling guidance
DALE_CHALL_ADJUSTMENT = 3.6365
DALE_CHALL_THRESHOLD = 0.05


class Metric(str, enum.Enum):
    ARI = "ari"
    FLESCH_READING_EASE = "flesch_reading_ease"
    FLESCH_KINCAID_GRADE = "flesch_kincaid_grade"
    GUNNING_FOG = "gunning_fog"
    SMOG = "smog"
    COLEMAN_LIAU = "coleman_liau"
    DALE_CHALL = "dale_chall"
    SPACHE = "spache"


# metrics whose grade_level participates in the consensus median
CONSENSUS_METRICS = (
    Metric.ARI,
    Metric.FLESCH_KINCAID_GRADE,
    Metric.GUNNING_FOG,
    Metric.SMOG,
    Metric.COLEMAN_LIAU,
    Metric.DALE_CHALL,
    Metric.SPACHE,
)


@dataclass(frozen=True, slots=True)
class MetricScore:
    metric: Metric
    raw_score: float
    grade_level: float | None
    reliable: bool = True


@dataclass(frozen=True, slots=True)
class ReadabilityReport:
    scores: tuple[MetricScore, ...]
    consensus_grade: float
    estimated_age: float
    difficult_word_fraction: float

    def score(self, metric: Metric) -> MetricScore:
        for s in self.scores:
            if s.metric is metric:
                return s
        raise KeyError(metric)


def _clamp_grade(raw: float) -> float:
    return min(max(raw, GRADE_MIN), GRADE_MAX)


def _require_text(stats: TextStatistics) -> None:
    if stats.word_count < 1 or stats.sentence_count < 1:
        raise InsufficientTextError("readability formulas need at least one word and sentence")


def score_ari(stats: TextStatistics) -> MetricScore:
    """Automated Readability Index: characters per word, words per sentence."""
    _require_text(stats)
    raw = (4.71 * (stats.char_count / stats.word_count)
           + 0.5 * (stats.word_count / stats.sentence_count) - 21.43)
    return MetricScore(Metric.ARI, raw, _clamp_grade(raw))


def _fre_band_grade(raw: float) -> float:
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


def score_flesch(stats: TextStatistics) -> tuple[MetricScore, MetricScore]:
    """Flesch Reading Ease (unclamped raw, band grade for reporting only)
    and Flesch-Kincaid Grade Level."""
    _require_text(stats)
    wps = stats.word_count / stats.sentence_count
    spw = stats.syllable_count / stats.word_count
    fre = 206.835 - 1.015 * wps - 84.6 * spw
    fkg = 0.39 * wps + 11.8 * spw - 15.59
    return (
        MetricScore(Metric.FLESCH_READING_EASE, fre, _fre_band_grade(fre)),
        MetricScore(Metric.FLESCH_KINCAID_GRADE, fkg, _clamp_grade(fkg)),
    )


def score_fog(stats: TextStatistics) -> MetricScore:
    """Gunning Fog index from sentence length and complex-word share."""
    _require_text(stats)
    raw = 0.4 * ((stats.word_count / stats.sentence_count)
                 + 100.0 * (stats.complex_word_count / stats.word_count))
    return MetricScore(Metric.GUNNING_FOG, raw, _clamp_grade(raw))


def score_smog(stats: TextStatistics) -> MetricScore:
    """SMOG grade; flagged unreliable below 30 sentences."""
    _require_text(stats)
    raw = 1.0430 * math.sqrt(stats.polysyllable_count * 30.0 / stats.sentence_count) + 3.1291
    return MetricScore(Metric.SMOG, raw, _clamp_grade(raw),
                       reliable=stats.sentence_count >= SMOG_MIN_SENTENCES)


def score_coleman_liau(stats: TextStatistics) -> MetricScore:
    """Coleman-Liau index from letters and sentences per 100 words."""
    _require_text(stats)
    letters_per_100 = 100.0 * stats.letter_count / stats.word_count
    sentences_per_100 = 100.0 * stats.sentence_count / stats.word_count
    raw = 0.0588 * letters_per_100 - 0.296 * sentences_per_100 - 15.8
    return MetricScore(Metric.COLEMAN_LIAU, raw, _clamp_grade(raw))


def _dale_chall_band_grade(raw: float) -> float:
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


def score_dale_chall(stats: TextStatistics, difficult_fraction: float) -> MetricScore:
    """Dale-Chall score; the 3.6365 adjustment applies iff more than 5% of
    words are unfamiliar. Grade via the published band midpoints."""
    _require_text(stats)
    raw = (0.1579 * (100.0 * difficult_fraction)
           + 0.0496 * (stats.word_count / stats.sentence_count))
    if difficult_fraction > DALE_CHALL_THRESHOLD:
        raw += DALE_CHALL_ADJUSTMENT
    return MetricScore(Metric.DALE_CHALL, raw, _dale_chall_band_grade(raw))


def score_spache(stats: TextStatistics, unfamiliar_fraction: float) -> MetricScore:
    """Revised Spache formula; the unfamiliar fraction is measured against
    the Spache lexicon regardless of the report's selected lexicon."""
    _require_text(stats)
    raw = (0.121 * (stats.word_count / stats.sentence_count)
           + 0.082 * (100.0 * unfamiliar_fraction) + 0.659)
    return MetricScore(Metric.SPACHE, raw, _clamp_grade(raw))


def consensus(scores: tuple[MetricScore, ...]) -> tuple[float, float]:
    """Median grade over the grade-bearing metrics, and the implied age."""
    grades = [s.grade_level for s in scores
              if s.metric in CONSENSUS_METRICS and s.grade_level is not None]
    if not grades:
        raise InsufficientTextError("no grade-bearing scores to combine")
    grade = float(stats_mod.median(grades))
    return grade, grade + 5.0


def analyze(doc: TokenizedDocument, lexicon: FamiliarityLexicon | None = None) -> ReadabilityReport:
    """Full readability report for a tokenized document.

    ``lexicon`` selects the difficult-word basis for Dale-Chall and the
    reported fraction (default: the Dale-Chall list). The Spache metric
    always uses the Spache list.
    """
    lexicon = lexicon or builtin_lexicon(DALE_CHALL)
    stats = compute_statistics(doc, lexicon)
    _require_text(stats)
    df = difficult_fraction(doc, lexicon)
    spache_fraction = difficult_fraction(doc, builtin_lexicon(SPACHE))

    fre, fkg = score_flesch(stats)
    scores = (
        score_ari(stats),
        fre,
        fkg,
        score_fog(stats),
        score_smog(stats),
        score_coleman_liau(stats),
        score_dale_chall(stats, df),
        score_spache(stats, spache_fraction),
    )
    grade, age = consensus(scores)
    return ReadabilityReport(scores, grade, age, df)


def analyze_text(text: str | bytes, lexicon: FamiliarityLexicon | None = None) -> ReadabilityReport:
    return analyze(tokenize(text), lexicon)


def report_json(report: ReadabilityReport) -> str:
    """Canonical report JSON; shared verbatim by the CLI and the service."""
    payload = {
        "scores": {
            s.metric.value: {
                "raw": s.raw_score,
                "grade": s.grade_level,
                "reliable": s.reliable,
            }
            for s in report.scores
        },
        "consensus_grade": report.consensus_grade,
        "estimated_age": report.estimated_age,
        "difficult_word_fraction": report.difficult_word_fraction,
    }
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))
