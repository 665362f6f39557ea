/** Application bootstrap: wires the controls, keyboard map and views. */

import { ApiClient, ApiError } from "./api.js";
import { ReaderController, type Source } from "./controller.js";
import { clearFrame, markActiveWord, renderFrame, renderGradient } from "./render.js";
import type { GradientResponse } from "./types.js";

const API_BASE =
  new URLSearchParams(location.search).get("api") ?? "http://localhost:8080";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

const frameEl = byId<HTMLDivElement>("frame");
const gradientEl = byId<HTMLDivElement>("gradient");
const statusEl = byId<HTMLDivElement>("status");
const errorEl = byId<HTMLDivElement>("error");
const playBtn = byId<HTMLButtonElement>("play");
const textInput = byId<HTMLTextAreaElement>("text-input");
const fileInput = byId<HTMLInputElement>("file-input");
const loadBtn = byId<HTMLButtonElement>("load");
const wpmValue = byId<HTMLSpanElement>("wpm-value");
const wpmDown = byId<HTMLButtonElement>("wpm-down");
const wpmUp = byId<HTMLButtonElement>("wpm-up");
const ageInput = byId<HTMLInputElement>("age");
const multiplierInput = byId<HTMLInputElement>("multiplier");
const lexiconSelect = byId<HTMLSelectElement>("lexicon");
const widthSlider = byId<HTMLInputElement>("width");
const widthValue = byId<HTMLSpanElement>("width-value");

const api = new ApiClient(API_BASE);
let gradientData: GradientResponse | null = null;
let documentId: string | null = null;

function showError(message: string): void {
  errorEl.textContent = message;
  errorEl.hidden = message === "";
}

const controller = new ReaderController(api, {
  onFrame(index, entry) {
    renderFrame(frameEl, entry);
    if (gradientData) markActiveWord(gradientEl, index);
  },
  onFinish() {
    statusEl.textContent = "finished";
  },
  onPlayState(playing) {
    playBtn.textContent = playing ? "pause" : "play";
  },
  onScheduleLoaded(schedule) {
    statusEl.textContent =
      `${schedule.entries.length} words · ${(schedule.total_ms / 1000).toFixed(1)} s ` +
      `@ ${schedule.effective_wpm.toFixed(0)} wpm`;
    showError("");
  },
  onProfileChange(profile) {
    wpmValue.textContent = String(profile.base_wpm);
  },
  onError: showError,
});

async function refreshGradient(): Promise<void> {
  if (!documentId) {
    gradientEl.replaceChildren();
    gradientData = null;
    return;
  }
  try {
    gradientData = await api.gradient(documentId, Number(widthSlider.value));
    renderGradient(gradientEl, gradientData, (k) => controller.seekToWord(k),
                   controller.engine?.cursor ?? -1);
  } catch (error) {
    showError(error instanceof ApiError ? error.message : "gradient request failed");
  }
}

async function loadSource(): Promise<void> {
  showError("");
  try {
    const file = fileInput.files?.[0];
    let source: Source;
    if (file) {
      // PDFs go straight to the service; the browser never parses them
      const uploaded = await api.upload(file, file.name);
      const doc = await api.getDocument(uploaded.id);
      documentId = doc.id;
      source = { kind: "document", id: doc.id, text: doc.text };
    } else {
      const text = textInput.value;
      if (!text.trim()) {
        showError("enter some text or choose a file first");
        return;
      }
      const uploaded = await api.upload(new Blob([text]), "typed.txt");
      documentId = uploaded.id;
      source = { kind: "document", id: uploaded.id, text };
    }
    await controller.load(source);
    clearFrame(frameEl, "press space or play");
    await refreshGradient();
  } catch (error) {
    showError(error instanceof ApiError ? `${error.code}: ${error.message}` : String(error));
  }
}

loadBtn.addEventListener("click", () => void loadSource());
playBtn.addEventListener("click", () => controller.togglePlay());
wpmDown.addEventListener("click", () => void controller.adjustWpm(-1));
wpmUp.addEventListener("click", () => void controller.adjustWpm(1));

ageInput.addEventListener("change", () => {
  const age = ageInput.value ? Number(ageInput.value) : null;
  void controller.applyProfileChange({ reader_age: age });
});
multiplierInput.addEventListener("change", () => {
  void controller.applyProfileChange({
    unfamiliar_multiplier: Number(multiplierInput.value),
  });
});
lexiconSelect.addEventListener("change", () => {
  void controller.applyProfileChange({ lexicon: lexiconSelect.value });
});
widthSlider.addEventListener("change", () => {
  widthValue.textContent = widthSlider.value;
  void refreshGradient();
});

document.addEventListener("keydown", (event) => {
  if (event.target instanceof HTMLTextAreaElement ||
      event.target instanceof HTMLInputElement ||
      event.target instanceof HTMLSelectElement) {
    return;
  }
  switch (event.key) {
    case " ":
      event.preventDefault();
      controller.togglePlay();
      break;
    case "ArrowLeft":
      controller.seekSentenceBack();
      break;
    case "ArrowRight":
      controller.seekSentenceForward();
      break;
    case "+":
    case "=":
      void controller.adjustWpm(1);
      break;
    case "-":
      void controller.adjustWpm(-1);
      break;
  }
});

clearFrame(frameEl);
wpmValue.textContent = String(controller.profile.base_wpm);
widthValue.textContent = widthSlider.value;
