#!/usr/bin/env python3
"""Walkthrough: lossless tokenization and the counts behind every formula."""

from thoth import builtin_lexicon, compute_statistics, count_syllables, tokenize

text = "Dr. Hale reads quickly. Unfamiliar terminology slows everyone down."
doc = tokenize(text)

print("tokens:")
for tok in doc.tokens:
    print(f"  {tok.kind.value:<12} {tok.text!r:<18} sentence={tok.sentence_index}"
          f"{'  <- sentence end' if tok.sentence_final else ''}")

print("\nround-trip:", "".join(t.text for t in doc.tokens) == text)
print("sentences:", doc.sentence_count)

for word in ("reads", "terminology", "gobbledygook"):
    print(f"syllables({word!r}) = {count_syllables(word)}")

stats = compute_statistics(doc, builtin_lexicon("dale-chall"))
print("\nstatistics:", stats)
