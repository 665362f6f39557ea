#!/usr/bin/env python3
"""Walkthrough: eight readability metrics fused into one grade and age."""

from pathlib import Path

from thoth import analyze_text, builtin_lexicon

simple = Path(__file__).resolve().parent.parent / "fixtures" / "sample_02.txt"
dense = Path(__file__).resolve().parent.parent / "fixtures" / "sample_03.txt"

for path in (simple, dense):
    report = analyze_text(path.read_text(encoding="utf-8"))
    print(f"== {path.name}")
    for score in report.scores:
        flag = "" if score.reliable else "  (unreliable: sample too small)"
        print(f"  {score.metric.value:<22} raw={score.raw_score:8.3f} "
              f"grade={score.grade_level:5.2f}{flag}")
    print(f"  consensus grade {report.consensus_grade:.2f} -> "
          f"reader age ~{report.estimated_age:.0f}, "
          f"{report.difficult_word_fraction:.0%} difficult words\n")

# swapping the lexicon moves only the familiarity-based outputs
report = analyze_text(dense.read_text(encoding="utf-8"), builtin_lexicon("top1000"))
print("with top-1000 lexicon, difficult fraction:", f"{report.difficult_word_fraction:.0%}")
