/** Frame layout around the optimal recognition point.
 *
 * Frames render in a monospace font with the ORP character left-padded to
 * a fixed column, so the pivot letter never moves between words.
 */

/** Highest ORP index the service emits (words of 14+ characters). */
export const PIVOT_COLUMN = 4;

export interface FrameParts {
  /** spaces + characters before the pivot; length is always PIVOT_COLUMN */
  pre: string;
  pivot: string;
  post: string;
}

export function frameParts(text: string, orp: number): FrameParts {
  if (text.length === 0) {
    return { pre: " ".repeat(PIVOT_COLUMN), pivot: "", post: "" };
  }
  const index = Math.max(0, Math.min(orp, text.length - 1));
  const padding = " ".repeat(Math.max(PIVOT_COLUMN - index, 0));
  return {
    pre: padding + text.slice(0, index),
    pivot: text.charAt(index),
    post: text.slice(index + 1),
  };
}
