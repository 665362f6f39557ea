/** Wire formats, copied verbatim from the service contracts. */

export interface ScheduleEntry {
  /** token index into the service-side document */
  i: number;
  text: string;
  /** display duration in milliseconds; the UI never recomputes this */
  ms: number;
  /** optimal-recognition-point character index */
  orp: number;
  unfamiliar: boolean;
  color: string | null;
}

export interface Schedule {
  version: number;
  effective_wpm: number;
  total_ms: number;
  entries: ScheduleEntry[];
}

export interface MetricScore {
  raw: number;
  grade: number;
  reliable: boolean;
}

export interface Report {
  scores: Record<string, MetricScore>;
  consensus_grade: number;
  estimated_age: number;
  difficult_word_fraction: number;
}

export interface GradientResponse {
  document_id: string;
  width: number;
  serpentine: boolean;
  words: string[];
  colors: string[];
  lines: [number, number][];
}

export interface UploadResponse {
  id: string;
  media_type: "text" | "pdf";
  char_count: number;
}

export interface StoredDocument {
  id: string;
  original_filename: string;
  media_type: "text" | "pdf";
  text: string;
  created_at: string;
}

/** Reader profile fields, as accepted by POST /api/v1/schedule. */
export interface Profile {
  base_wpm: number;
  reader_age?: number | null;
  unfamiliar_multiplier: number;
  lexicon: string;
  length_modifier_enabled: boolean;
  punctuation_pauses_enabled: boolean;
}

export const DEFAULT_PROFILE: Profile = {
  base_wpm: 300,
  reader_age: null,
  unfamiliar_multiplier: 1.5,
  lexicon: "dale-chall",
  length_modifier_enabled: true,
  punctuation_pauses_enabled: true,
};

export const WPM_MIN = 60;
export const WPM_MAX = 1500;
export const WPM_STEP = 25;
