/** Glue between the API, the playback engine and the rendering layer.
 *
 * Owns the reader profile and the document source, re-fetches schedules
 * when the profile changes mid-session, and keeps at most one schedule
 * request in flight: every request takes a token and stale responses are
 * dropped, so the latest edit always wins.
 */

import { ApiClient, ApiError } from "./api.js";
import { PlaybackEngine, type Clock, type PlaybackEvents, type Timer, realClock, realTimer } from "./playback.js";
import { seekBack, seekForward, sentenceStarts } from "./sentences.js";
import {
  DEFAULT_PROFILE,
  WPM_MAX,
  WPM_MIN,
  WPM_STEP,
  type Profile,
  type Schedule,
} from "./types.js";

export type Source =
  | { kind: "text"; text: string }
  | { kind: "document"; id: string; text: string };

export interface ControllerEvents extends PlaybackEvents {
  onScheduleLoaded?(schedule: Schedule): void;
  onProfileChange?(profile: Profile): void;
  onError?(message: string): void;
}

export class ReaderController {
  profile: Profile = { ...DEFAULT_PROFILE };
  engine: PlaybackEngine | null = null;
  source: Source | null = null;
  private starts: number[] = [];
  private requestToken = 0;

  constructor(
    private readonly api: ApiClient,
    private readonly events: ControllerEvents = {},
    private readonly clock: Clock = realClock,
    private readonly timer: Timer = realTimer,
  ) {}

  /** Load a new source and build its first schedule from word zero. */
  async load(source: Source): Promise<void> {
    this.source = source;
    const schedule = await this.fetchSchedule();
    if (schedule === null) return;
    this.engine = new PlaybackEngine(schedule, this.events, this.clock, this.timer);
    this.starts = sentenceStarts(source.text, schedule.entries.map((e) => e.text));
    this.events.onScheduleLoaded?.(schedule);
  }

  togglePlay(): void {
    if (!this.engine) return;
    if (this.engine.playing) this.engine.pause();
    else this.engine.play();
  }

  seekSentenceBack(): void {
    if (!this.engine) return;
    this.engine.seek(seekBack(this.starts, this.engine.cursor));
  }

  seekSentenceForward(): void {
    if (!this.engine) return;
    this.engine.seek(seekForward(this.starts, this.engine.cursor));
  }

  seekToWord(index: number): void {
    this.engine?.seek(index);
  }

  adjustWpm(direction: 1 | -1): Promise<void> {
    const wpm = Math.max(
      WPM_MIN,
      Math.min(this.profile.base_wpm + direction * WPM_STEP, WPM_MAX),
    );
    return this.applyProfileChange({ base_wpm: wpm });
  }

  /** Apply profile edits: re-fetch the schedule, resume at the same word.
   *
   * The word on screen keeps its current dwell; new durations apply from
   * the next word. A stale response (older token) is discarded.
   */
  async applyProfileChange(edits: Partial<Profile>): Promise<void> {
    this.profile = { ...this.profile, ...edits };
    this.events.onProfileChange?.(this.profile);
    if (!this.source) return;
    const schedule = await this.fetchSchedule();
    if (schedule === null || !this.engine) return;
    this.engine.swapSchedule(schedule, this.engine.cursor);
    this.starts = sentenceStarts(this.source.text, schedule.entries.map((e) => e.text));
    this.events.onScheduleLoaded?.(schedule);
  }

  /** null means: fetch failed or a newer request superseded this one. */
  private async fetchSchedule(): Promise<Schedule | null> {
    if (!this.source) return null;
    this.requestToken += 1;
    const token = this.requestToken;
    try {
      const schedule =
        this.source.kind === "text"
          ? await this.api.scheduleForText(this.source.text, this.profile)
          : await this.api.scheduleForDocument(this.source.id, this.profile);
      if (token !== this.requestToken) return null; // stale: a newer edit won
      return schedule;
    } catch (error) {
      if (token !== this.requestToken) return null;
      const message =
        error instanceof ApiError ? error.message : "schedule request failed";
      this.events.onError?.(message);
      return null;
    }
  }
}
