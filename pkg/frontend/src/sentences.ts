/** Sentence starts for arrow-key seeking.
 *
 * The schedule wire format intentionally carries no sentence ids, so the
 * reader derives boundaries itself: walk the source text, find each
 * scheduled word in order, and treat `.`/`!`/`?` in the gap between two
 * words as a sentence end (with the same abbreviation guard the service
 * uses). This is presentation-side navigation only; durations,
 * familiarity and colors always come from the service.
 */

const ABBREVIATIONS = new Set([
  "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "vs",
  "etc", "e.g", "i.e", "fig", "al",
]);

function stripDots(word: string): string {
  return word.replace(/^\.+|\.+$/g, "");
}

/** Indices of entries that open a sentence (always includes 0). */
export function sentenceStarts(sourceText: string, words: string[]): number[] {
  const starts: number[] = words.length > 0 ? [0] : [];
  let pos = 0;
  let prevEnd = 0;
  for (let k = 0; k < words.length; k += 1) {
    const word = words[k]!;
    const at = sourceText.indexOf(word, pos);
    if (at === -1) break; // schedule no longer matches the text; stop deriving
    if (k > 0) {
      const gap = sourceText.slice(prevEnd, at);
      if (endsSentence(gap, words[k - 1]!, word)) {
        starts.push(k);
      }
    }
    prevEnd = at + word.length;
    pos = prevEnd;
  }
  return starts;
}

function endsSentence(gap: string, previousWord: string, nextWord: string): boolean {
  // mirror the service rule: an ender counts only before an uppercase/digit
  if (!/^[\p{Lu}\d]/u.test(nextWord)) return false;
  if (/[!?]/.test(gap)) return true;
  if (!gap.includes(".")) return false;
  const prev = stripDots(previousWord.toLowerCase());
  return !ABBREVIATIONS.has(prev);
}

/** First word of the sentence containing `cursor`. */
export function currentSentenceStart(starts: number[], cursor: number): number {
  let found = 0;
  for (const s of starts) {
    if (s <= cursor) found = s;
    else break;
  }
  return found;
}

/** Seek target one sentence back; at a sentence start, the previous one. */
export function seekBack(starts: number[], cursor: number): number {
  const current = currentSentenceStart(starts, cursor);
  if (cursor > current) return current;
  let previous = 0;
  for (const s of starts) {
    if (s < current) previous = s;
    else break;
  }
  return previous;
}

/** Seek target one sentence forward; clamps at the last sentence. */
export function seekForward(starts: number[], cursor: number): number {
  for (const s of starts) {
    if (s > cursor) return s;
  }
  return currentSentenceStart(starts, cursor);
}
