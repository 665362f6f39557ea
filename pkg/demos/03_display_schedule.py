#!/usr/bin/env python3
"""Walkthrough: turning text into the per-word RSVP schedule."""

from thoth import ReaderProfile, schedule_text

text = "The cat sat quietly. One extraordinarily incomprehensible word, then rest."

print("default profile (300 wpm, 1.5x unfamiliar, pauses on):")
schedule = schedule_text(text)
for e in schedule.entries:
    pivot = e.text[e.orp_index]
    print(f"  {e.text:<18} {e.duration_ms:7.1f} ms  orp={e.orp_index} ({pivot})"
          f"  {'unfamiliar' if e.unfamiliar else 'familiar':<10} {e.color}")
print(f"  total {schedule.total_ms:.0f} ms at {schedule.effective_wpm:g} wpm\n")

print("same text, 700 wpm, every modifier off (uniform frames):")
uniform = schedule_text(text, ReaderProfile(base_wpm=700, unfamiliar_multiplier=1.0,
                                            length_modifier_enabled=False,
                                            punctuation_pauses_enabled=False))
print(f"  every frame {uniform.entries[0].duration_ms:.3f} ms "
      f"({1000 / uniform.entries[0].duration_ms:.2f} words/second)")

print("\na 9-year-old reading the same text is slowed down:")
young = schedule_text(text, ReaderProfile(reader_age=9))
print(f"  effective wpm {young.effective_wpm:.0f} vs 300 for the default profile")
