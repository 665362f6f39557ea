import math
import random

import pytest

from thoth.errors import InsufficientTextError
from thoth.familiarity import builtin_lexicon
from thoth.ingest import tokenize
from thoth.readability import (
    Metric,
    MetricScore,
    analyze,
    consensus,
    report_json,
    score_ari,
    score_coleman_liau,
    score_dale_chall,
    score_flesch,
    score_fog,
    score_smog,
    score_spache,
)
from thoth.statistics import TextStatistics, compute_statistics


def make_stats(chars=0, letters=0, words=1, sentences=1, syllables=1,
               poly=0, complex_words=0, difficult=0):
    return TextStatistics(
        char_count=chars, letter_count=letters, word_count=words,
        sentence_count=sentences, syllable_count=syllables,
        polysyllable_count=poly, complex_word_count=complex_words,
        difficult_word_count=difficult,
        per_word_syllables=(1,) * words,
    )


class TestFormulas:
    def test_ari_hand_arithmetic(self):
        s = score_ari(make_stats(chars=100, words=20, sentences=2))
        assert s.raw_score == pytest.approx(4.71 * 5 + 0.5 * 10 - 21.43, abs=1e-12)
        assert s.raw_score == pytest.approx(7.12, abs=1e-12)

    def test_ari_clamps_to_zero(self):
        s = score_ari(make_stats(chars=1, words=1, sentences=1))
        assert s.raw_score == pytest.approx(4.71 + 0.5 - 21.43, abs=1e-12)
        assert s.grade_level == 0.0

    def test_ari_insufficient_text(self):
        with pytest.raises(InsufficientTextError):
            score_ari(make_stats(words=0, sentences=1))
        with pytest.raises(InsufficientTextError):
            score_ari(make_stats(words=1, sentences=0))

    def test_flesch_hand_arithmetic(self):
        fre, fkg = score_flesch(make_stats(words=100, sentences=10, syllables=120))
        assert fre.raw_score == pytest.approx(206.835 - 10.15 - 101.52, abs=1e-9)
        assert fre.raw_score == pytest.approx(95.165, abs=1e-9)
        assert fkg.raw_score == pytest.approx(3.9 + 14.16 - 15.59, abs=1e-9)
        assert fkg.raw_score == pytest.approx(2.47, abs=1e-9)

    def test_flesch_raw_unclamped(self):
        fre, _ = score_flesch(make_stats(words=1, sentences=1, syllables=1))
        assert fre.raw_score == pytest.approx(206.835 - 1.015 - 84.6, abs=1e-9)
        assert fre.raw_score > 100  # raw ease is reported unclamped

    def test_fog_hand_arithmetic(self):
        s = score_fog(make_stats(words=100, sentences=5, complex_words=10))
        assert s.raw_score == pytest.approx(0.4 * (20 + 10), abs=1e-12)

    def test_fog_no_complex_words(self):
        s = score_fog(make_stats(words=5, sentences=5))
        assert s.raw_score == pytest.approx(0.4, abs=1e-12)

    def test_smog_hand_arithmetic(self):
        s = score_smog(make_stats(words=30, sentences=30, poly=30))
        assert s.raw_score == pytest.approx(1.0430 * math.sqrt(30) + 3.1291, abs=1e-12)
        assert round(s.raw_score, 3) == 8.842
        assert s.reliable

    def test_smog_zero_polysyllables(self):
        s = score_smog(make_stats(words=40, sentences=40, poly=0))
        assert s.raw_score == pytest.approx(3.1291, abs=1e-12)

    def test_smog_unreliable_below_30_sentences(self):
        assert not score_smog(make_stats(words=10, sentences=10)).reliable

    def test_coleman_liau_hand_arithmetic(self):
        s = score_coleman_liau(make_stats(letters=450, words=100, sentences=5))
        assert s.raw_score == pytest.approx(0.0588 * 450 - 0.296 * 5 - 15.8, abs=1e-9)
        assert s.raw_score == pytest.approx(9.18, abs=1e-9)

    def test_coleman_liau_clamp_floor(self):
        s = score_coleman_liau(make_stats(letters=100, words=100, sentences=100))
        assert s.grade_level == 0.0

    def test_dale_chall_no_adjustment_at_or_below_5_percent(self):
        s = score_dale_chall(make_stats(words=10, sentences=1), 0.0)
        assert s.raw_score == pytest.approx(0.496, abs=1e-12)
        boundary = score_dale_chall(make_stats(words=20, sentences=2), 0.05)
        assert boundary.raw_score == pytest.approx(0.1579 * 5 + 0.0496 * 10, abs=1e-12)

    def test_dale_chall_adjustment_above_threshold(self):
        s = score_dale_chall(make_stats(words=15, sentences=1), 0.10)
        assert s.raw_score == pytest.approx(0.1579 * 10 + 0.0496 * 15 + 3.6365, abs=1e-12)
        assert s.raw_score == pytest.approx(5.9595, abs=1e-12)
        assert s.grade_level == 5.5  # band midpoint

    def test_dale_chall_monotone_in_difficulty(self):
        stats = make_stats(words=50, sentences=5)
        fractions = [i / 50 for i in range(51)]
        raws = [score_dale_chall(stats, f).raw_score for f in fractions]
        assert all(a <= b for a, b in zip(raws, raws[1:]))

    def test_spache_hand_arithmetic(self):
        s = score_spache(make_stats(words=5, sentences=1), 0.0)
        assert s.raw_score == pytest.approx(1.264, abs=1e-12)
        extreme = score_spache(make_stats(words=1, sentences=1), 1.0)
        assert extreme.raw_score == pytest.approx(0.121 + 8.2 + 0.659, abs=1e-12)

    def test_scale_invariance_under_doubling(self):
        base = make_stats(chars=500, letters=450, words=100, sentences=10,
                          syllables=150, poly=12, complex_words=9)
        double = make_stats(chars=1000, letters=900, words=200, sentences=20,
                            syllables=300, poly=24, complex_words=18)
        assert score_ari(base).raw_score == score_ari(double).raw_score
        assert score_flesch(base)[0].raw_score == score_flesch(double)[0].raw_score
        assert score_flesch(base)[1].raw_score == score_flesch(double)[1].raw_score
        assert score_fog(base).raw_score == score_fog(double).raw_score
        assert score_smog(base).raw_score == score_smog(double).raw_score
        assert score_coleman_liau(base).raw_score == score_coleman_liau(double).raw_score
        assert score_dale_chall(base, 0.2).raw_score == score_dale_chall(double, 0.2).raw_score
        assert score_spache(base, 0.2).raw_score == score_spache(double, 0.2).raw_score

    def test_all_raw_scores_finite(self):
        for words in (1, 7, 100):
            for sentences in (1, 3, words):
                stats = make_stats(chars=5 * words, letters=4 * words, words=words,
                                   sentences=min(sentences, words),
                                   syllables=2 * words, poly=words // 3,
                                   complex_words=words // 4)
                values = [score_ari(stats).raw_score,
                          *[s.raw_score for s in score_flesch(stats)],
                          score_fog(stats).raw_score,
                          score_smog(stats).raw_score,
                          score_coleman_liau(stats).raw_score,
                          score_dale_chall(stats, 0.5).raw_score,
                          score_spache(stats, 0.5).raw_score]
                assert all(math.isfinite(v) for v in values)


class TestConsensus:
    def grade(self, value):
        return MetricScore(Metric.ARI, value, value)

    def test_median_odd(self):
        scores = (MetricScore(Metric.ARI, 2, 2.0),
                  MetricScore(Metric.GUNNING_FOG, 4, 4.0),
                  MetricScore(Metric.SMOG, 10, 10.0))
        grade, age = consensus(scores)
        assert (grade, age) == (4.0, 9.0)

    def test_median_even(self):
        scores = (MetricScore(Metric.ARI, 4, 4.0),
                  MetricScore(Metric.GUNNING_FOG, 6, 6.0))
        grade, age = consensus(scores)
        assert (grade, age) == (5.0, 10.0)

    def test_fre_excluded(self):
        scores = (MetricScore(Metric.FLESCH_READING_EASE, 95.0, 5.0),
                  MetricScore(Metric.ARI, 12.0, 12.0))
        grade, _ = consensus(scores)
        assert grade == 12.0

    def test_permutation_invariant(self):
        rng = random.Random(7)
        scores = [MetricScore(m, g, float(g)) for m, g in
                  zip(list(Metric)[2:], (3, 9, 1, 14, 6))]
        reference = consensus(tuple(scores))
        for _ in range(10):
            rng.shuffle(scores)
            assert consensus(tuple(scores)) == reference

    def test_needs_grades(self):
        with pytest.raises(InsufficientTextError):
            consensus((MetricScore(Metric.ARI, 1.0, None),))

    def test_within_min_max(self):
        scores = tuple(MetricScore(m, g, float(g)) for m, g in
                       zip(list(Metric)[2:], (3, 9, 1, 14, 6)))
        grade, _ = consensus(scores)
        grades = [s.grade_level for s in scores]
        assert min(grades) <= grade <= max(grades)


class TestAnalyze:
    def test_fixture_scores_match_oracle(self, fixture_texts, fixture_expected):
        for name, text in fixture_texts.items():
            report = analyze(tokenize(text))
            expected = fixture_expected[name]
            for score in report.scores:
                exp = expected["scores"][score.metric.value]
                assert abs(score.raw_score - exp["raw"]) < 1e-9, (name, score.metric)
                assert abs(score.grade_level - exp["grade"]) < 1e-9, (name, score.metric)
                assert score.reliable == exp["reliable"], (name, score.metric)
            assert abs(report.consensus_grade - expected["consensus_grade"]) < 1e-9
            assert abs(report.estimated_age - expected["estimated_age"]) < 1e-9
            assert report.estimated_age == report.consensus_grade + 5.0

    def test_lexicon_changes_only_dale_chall_outputs(self, fixture_texts):
        base = analyze(tokenize(fixture_texts["sample_01"]), builtin_lexicon("dale-chall"))
        other = analyze(tokenize(fixture_texts["sample_01"]), builtin_lexicon("top1000"))
        for m in Metric:
            if m is Metric.DALE_CHALL:
                continue
            assert base.score(m).raw_score == other.score(m).raw_score, m
        assert base.difficult_word_fraction != other.difficult_word_fraction

    def test_insufficient_text(self):
        with pytest.raises(InsufficientTextError):
            analyze(tokenize("..."))

    def test_report_json_shape(self, fixture_texts):
        import json
        report = analyze(tokenize(fixture_texts["sample_01"]))
        payload = json.loads(report_json(report))
        assert set(payload) == {"scores", "consensus_grade", "estimated_age",
                                "difficult_word_fraction"}
        assert list(payload["scores"]) == [m.value for m in Metric]
        for entry in payload["scores"].values():
            assert set(entry) == {"raw", "grade", "reliable"}
