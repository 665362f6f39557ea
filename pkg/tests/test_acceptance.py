"""Acceptance suite: one test per release criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
summary. Tolerances are pinned here and nowhere else.
"""

import json
import random
import time

import pytest
from fastapi.testclient import TestClient

from thoth.familiarity import builtin_lexicon, difficult_fraction
from thoth.gradient import assign_colors, parse_color, wrap_lines
from thoth.ingest import tokenize
from thoth.readability import Metric, analyze, score_dale_chall
from thoth.scheduler import ReaderProfile, orp_index, schedule_json, schedule_text
from thoth.service import create_app
from thoth.statistics import compute_statistics

FIXTURE_NAMES = ("sample_01", "sample_02", "sample_03")


def ok(name):
    print(f"PASS {name}")


def test_wpm_baseline(fixture_texts):
    """700 wpm with all modifiers off: uniform 60000/700 ms frames."""
    profile = ReaderProfile(base_wpm=700, unfamiliar_multiplier=1.0,
                            length_modifier_enabled=False,
                            punctuation_pauses_enabled=False)
    started = time.perf_counter()
    schedule = schedule_text(fixture_texts["sample_01"], profile)
    elapsed = time.perf_counter() - started
    expected = 60000.0 / 700.0
    assert all(e.duration_ms == expected for e in schedule.entries)
    words_per_second = 1000.0 / expected
    assert abs(words_per_second - 11.67) < 0.01
    assert abs(words_per_second - 11.6) <= 0.1  # the "roughly 11.6" check
    assert elapsed < 1.0
    ok("wpm-baseline: 700 wpm -> 85.714 ms/word, 11.67 words/s (within 0.1 of 11.6)")


def test_familiarity_scaling(fixture_texts):
    """Unfamiliar words take exactly 1.5x their familiar-case duration."""
    text = fixture_texts["sample_01"]
    plain = schedule_text(text, ReaderProfile(unfamiliar_multiplier=1.0))
    scaled = schedule_text(text, ReaderProfile(unfamiliar_multiplier=1.5))
    unfamiliar_seen = 0
    for a, b in zip(plain.entries, scaled.entries):
        if a.unfamiliar:
            assert b.duration_ms == 1.5 * a.duration_ms  # exact
            unfamiliar_seen += 1
        else:
            assert b.duration_ms == a.duration_ms
    assert unfamiliar_seen > 0
    ok(f"familiarity-scaling: {unfamiliar_seen} unfamiliar words scaled by exactly 1.5x")


def test_formula_oracle(fixture_texts, fixture_expected):
    """All eight metrics match the independent oracle to 1e-9 on 3 fixtures."""
    started = time.perf_counter()
    for name in FIXTURE_NAMES:
        report = analyze(tokenize(fixture_texts[name]))
        expected = fixture_expected[name]["scores"]
        assert len(report.scores) == 8
        for score in report.scores:
            exp = expected[score.metric.value]
            assert abs(score.raw_score - exp["raw"]) < 1e-9, (name, score.metric)
            grade = score.grade_level
            assert grade is not None and abs(grade - exp["grade"]) < 1e-9
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    ok("formula-oracle: 8 metrics x 3 fixtures within 1e-9 of the oracle")


def test_dale_chall_adjustment_boundary():
    """+3.6365 applies iff the difficult fraction exceeds 5%, exactly."""
    dale = builtin_lexicon("dale-chall")
    at_boundary = ("The cat sat on the mat while the dog ran to the barn "
                   "and the boy held the old hagiography.")
    above = ("The cat sat on the mat while the dog ran to the barn "
             "and the boy held the lugubrious hagiography.")

    doc_at = tokenize(at_boundary)
    doc_above = tokenize(above)
    frac_at = difficult_fraction(doc_at, dale)
    frac_above = difficult_fraction(doc_above, dale)
    assert frac_at == 0.05  # exactly 1 unfamiliar word in 20
    assert frac_above == 0.10

    stats_at = compute_statistics(doc_at, dale)
    stats_above = compute_statistics(doc_above, dale)
    wps_at = stats_at.word_count / stats_at.sentence_count
    wps_above = stats_above.word_count / stats_above.sentence_count

    raw_at = score_dale_chall(stats_at, frac_at).raw_score
    raw_above = score_dale_chall(stats_above, frac_above).raw_score
    assert raw_at == 0.1579 * (100.0 * frac_at) + 0.0496 * wps_at  # no adjustment
    assert raw_above == 0.1579 * (100.0 * frac_above) + 0.0496 * wps_above + 3.6365
    ok("dale-chall-boundary: adjustment applied iff fraction > 0.05 (exact)")


def test_tokenizer_roundtrip_randomized():
    """1,000 random Unicode documents reconstruct byte-exactly in <10 s."""
    rng = random.Random(0xC0FFEE)
    pools = [
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ",
        "0123456789",
        " \t\n\r ",
        ".,;:!?\"'()[]{}<>-—’“”&%$#@*/\\",
        "éüñßœαωЖ中文あ\U0001f600",
    ]
    started = time.perf_counter()
    for _ in range(1000):
        length = rng.randrange(0, 300)
        text = "".join(rng.choice(rng.choice(pools)) for _ in range(length))
        doc = tokenize(text)
        assert "".join(t.text for t in doc.tokens) == text
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0
    ok(f"tokenizer-roundtrip: 1000 random documents byte-exact in {elapsed:.2f}s")


def test_scheduler_invariants(fixture_texts):
    """Proportionality, monotonicity, conservation, determinism."""
    text = fixture_texts["sample_01"]

    s300 = schedule_text(text, ReaderProfile(base_wpm=300))
    s600 = schedule_text(text, ReaderProfile(base_wpm=600))
    for a, b in zip(s300.entries, s600.entries):
        assert a.duration_ms == 2.0 * b.duration_ms  # exact under 2x scaling

    lo = schedule_text(text, ReaderProfile(unfamiliar_multiplier=1.0))
    hi = schedule_text(text, ReaderProfile(unfamiliar_multiplier=3.0))
    assert all(b.duration_ms >= a.duration_ms for a, b in zip(lo.entries, hi.entries))

    assert s300.total_ms == sum(e.duration_ms for e in s300.entries)  # conservation

    assert schedule_json(schedule_text(text)) == schedule_json(schedule_text(text))
    ok("scheduler-invariants: proportionality, monotonicity, conservation, determinism")


def test_orp_table_exhaustive():
    """ORP indices for lengths 1-30 match the table and stay inside the word."""
    expected = {1: 0, 2: 1, 3: 1, 4: 1, 5: 1, 6: 2, 7: 2, 8: 2, 9: 2,
                10: 3, 11: 3, 12: 3, 13: 3}
    previous = -1
    for n in range(1, 31):
        idx = orp_index("x" * n)
        assert idx == expected.get(n, 4)
        assert idx < n
        assert idx >= previous  # non-decreasing in word length
        previous = idx
    ok("orp-table: lengths 1-30 exhaustively match; orp < length always")


def test_gradient_continuity_randomized():
    """100 random documents, widths 20-120: serpentine breaks share colors."""
    rng = random.Random(2024)
    endpoints = {parse_color("#00429d"), parse_color("#d1495b")}
    for _ in range(100):
        words = ["w" * rng.randrange(1, 15) for _ in range(rng.randrange(1, 120))]
        width = rng.randrange(20, 121)
        doc = tokenize(" ".join(words))
        lines = wrap_lines(doc, width)
        colors = assign_colors(lines)
        assert len(colors) == len(words)
        for (s1, e1), (s2, e2) in zip(lines, lines[1:]):
            assert colors[e1 - 1] == colors[s2]
        for s, e in lines:
            assert parse_color(colors[s]) in endpoints
            assert parse_color(colors[e - 1]) in endpoints
    ok("gradient-continuity: 100 random docs, widths 20-120, breaks and endpoints exact")


def test_service_contract(tmp_path, fixtures_dir):
    """Golden request/response checks for every endpoint and error code."""
    with TestClient(create_app(data_dir=str(tmp_path / "store"))) as client:
        # analyze: 200 / 400 / 413 / 422
        assert client.post("/api/v1/analyze", json={"text": "The cat sat."}).status_code == 200
        assert client.post("/api/v1/analyze", json={"text": ""}).status_code == 400
        assert client.post("/api/v1/analyze",
                           json={"text": "x " * (1024 * 1024 + 8)}).status_code == 413
        assert client.post("/api/v1/analyze",
                           json={"text": "x", "lexicon": "klingon"}).status_code == 422

        # schedule: 200 / 400 / 404 / 422, byte-stable
        payload = {"text": "The cat sat.", "profile": {"base_wpm": 300}}
        first = client.post("/api/v1/schedule", json=payload)
        assert first.status_code == 200
        assert first.content == client.post("/api/v1/schedule", json=payload).content
        assert client.post("/api/v1/schedule",
                           json={"text": "x", "document_id": "0" * 64}).status_code == 400
        assert client.post("/api/v1/schedule",
                           json={"document_id": "0" * 64}).status_code == 404
        assert client.post("/api/v1/schedule",
                           json={"text": "x", "profile": {"base_wpm": 10}}).status_code == 422

        # documents: 201 / 200 idempotent, 415, 422, 404, case-exact ids
        up1 = client.post("/api/v1/documents",
                          files={"file": ("a.txt", b"Hello", "text/plain")})
        up2 = client.post("/api/v1/documents",
                          files={"file": ("b.txt", b"Hello", "text/plain")})
        assert (up1.status_code, up2.status_code) == (201, 200)
        assert up1.json()["id"] == up2.json()["id"]
        assert client.post("/api/v1/documents",
                           files={"file": ("x.bin", b"\xff\xfe\x01", "application/octet-stream")}
                           ).status_code == 415
        image_pdf = (fixtures_dir / "image_only.pdf").read_bytes()
        assert client.post("/api/v1/documents",
                           files={"file": ("i.pdf", image_pdf, "application/pdf")}
                           ).status_code == 422
        doc_id = up1.json()["id"]
        assert client.get(f"/api/v1/documents/{doc_id}").status_code == 200
        assert client.get(f"/api/v1/documents/{doc_id.upper()}").status_code == 404
        assert client.get(f"/api/v1/documents/{'0' * 64}").status_code == 404

        # gradient: 200 / 404 / 422
        assert client.get(f"/api/v1/gradient?document_id={doc_id}").status_code == 200
        assert client.get(f"/api/v1/gradient?document_id={'0' * 64}").status_code == 404
        assert client.get(f"/api/v1/gradient?document_id={doc_id}&width=10").status_code == 422

        # every error body carries the envelope
        for r in (client.post("/api/v1/analyze", json={"text": ""}),
                  client.post("/api/v1/schedule", json={}),
                  client.get(f"/api/v1/documents/{'0' * 64}")):
            body = r.json()
            assert set(body) == {"error"}
            assert set(body["error"]) == {"code", "message"}
    ok("service-contract: all endpoints and error codes verified, uploads idempotent")


def test_schedule_oracle_bytes(fixtures_dir, fixture_texts):
    """Default-profile schedule JSON equals the committed oracle output."""
    got = schedule_json(schedule_text(fixture_texts["sample_01"]))
    expected = (fixtures_dir / "sample_01.schedule.json").read_text(encoding="utf-8")
    assert got == expected
    ok("schedule-oracle: default-profile schedule byte-identical to oracle file")
