/** DOM rendering: the RSVP frame and the gradient paragraph view. */

import { frameParts } from "./orp.js";
import type { GradientResponse, ScheduleEntry } from "./types.js";

/** Render one frame with the pivot letter highlighted at a fixed column. */
export function renderFrame(el: HTMLElement, entry: ScheduleEntry): void {
  const { pre, pivot, post } = frameParts(entry.text, entry.orp);
  el.replaceChildren(
    span("frame-pre", pre),
    span("frame-pivot", pivot),
    span("frame-post", post),
  );
}

export function clearFrame(el: HTMLElement, message = "ready"): void {
  el.replaceChildren(span("frame-idle", message));
}

/** Render the colored paragraph; clicking word k seeks the reader to k. */
export function renderGradient(
  el: HTMLElement,
  gradient: GradientResponse,
  onWordClick: (index: number) => void,
  activeIndex = -1,
): void {
  el.replaceChildren();
  for (const [start, end] of gradient.lines) {
    const line = document.createElement("div");
    line.className = "gradient-line";
    for (let k = start; k < end; k += 1) {
      const word = document.createElement("span");
      word.className = k === activeIndex ? "gradient-word active" : "gradient-word";
      word.textContent = gradient.words[k] ?? "";
      word.style.color = gradient.colors[k] ?? "";
      word.addEventListener("click", () => onWordClick(k));
      line.appendChild(word);
      if (k + 1 < end) line.appendChild(document.createTextNode(" "));
    }
    el.appendChild(line);
  }
}

export function markActiveWord(el: HTMLElement, index: number): void {
  el.querySelectorAll(".gradient-word.active").forEach((n) => n.classList.remove("active"));
  const words = el.querySelectorAll(".gradient-word");
  const target = words[index];
  if (target) target.classList.add("active");
}

function span(className: string, text: string): HTMLSpanElement {
  const node = document.createElement("span");
  node.className = className;
  node.textContent = text;
  return node;
}
