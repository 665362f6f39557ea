/** Drift-corrected RSVP playback over an injectable clock and timer.
 *
 * Frames are scheduled against absolute deadlines on a monotonic clock:
 * each deadline is the previous one plus the entry's duration, and the
 * timer is re-armed with (deadline - now), so timer jitter never
 * accumulates. Dwell times come straight from the schedule entries; the
 * engine does no duration arithmetic of its own beyond that chaining.
 */

import type { Schedule, ScheduleEntry } from "./types.js";

export interface Clock {
  /** monotonic milliseconds */
  now(): number;
}

export interface Timer {
  set(callback: () => void, delayMs: number): number;
  clear(id: number): void;
}

export const realClock: Clock = {
  now: () => performance.now(),
};

export const realTimer: Timer = {
  set: (cb, delay) => setTimeout(cb, delay) as unknown as number,
  clear: (id) => clearTimeout(id),
};

export interface PlaybackEvents {
  /** a frame became visible */
  onFrame?(index: number, entry: ScheduleEntry): void;
  /** cursor reached the end of the schedule */
  onFinish?(): void;
  /** playing state flipped */
  onPlayState?(playing: boolean): void;
}

export class PlaybackEngine {
  private schedule: Schedule;
  private cursorIndex = 0;
  private playingFlag = false;
  private timerId: number | null = null;
  private deadline = 0;
  /** remaining dwell of the current frame while paused */
  private remaining: number | null = null;

  constructor(
    schedule: Schedule,
    private readonly events: PlaybackEvents = {},
    private readonly clock: Clock = realClock,
    private readonly timer: Timer = realTimer,
  ) {
    this.schedule = schedule;
  }

  get cursor(): number {
    return this.cursorIndex;
  }

  get playing(): boolean {
    return this.playingFlag;
  }

  get finished(): boolean {
    return this.cursorIndex >= this.schedule.entries.length;
  }

  get entries(): ScheduleEntry[] {
    return this.schedule.entries;
  }

  currentEntry(): ScheduleEntry | null {
    return this.schedule.entries[this.cursorIndex] ?? null;
  }

  play(): void {
    if (this.playingFlag) return;
    if (this.finished) {
      this.cursorIndex = 0; // replay from the top
      this.remaining = null;
    }
    const entry = this.currentEntry();
    if (!entry) return;
    this.playingFlag = true;
    this.events.onPlayState?.(true);
    const dwell = this.remaining ?? entry.ms;
    if (this.remaining === null) {
      this.events.onFrame?.(this.cursorIndex, entry);
    }
    this.remaining = null;
    this.deadline = this.clock.now() + dwell;
    this.arm();
  }

  pause(): void {
    if (!this.playingFlag) return;
    this.remaining = Math.max(this.deadline - this.clock.now(), 0);
    this.disarm();
    this.playingFlag = false;
    this.events.onPlayState?.(false);
  }

  /** Jump to an entry; while playing the new frame starts immediately. */
  seek(index: number): void {
    const clamped = Math.max(0, Math.min(index, this.schedule.entries.length));
    this.cursorIndex = clamped;
    this.remaining = null;
    if (this.playingFlag) {
      this.disarm();
      const entry = this.currentEntry();
      if (!entry) {
        this.stopAtEnd();
        return;
      }
      this.events.onFrame?.(this.cursorIndex, entry);
      this.deadline = this.clock.now() + entry.ms;
      this.arm();
    } else {
      const entry = this.currentEntry();
      if (entry) this.events.onFrame?.(this.cursorIndex, entry);
    }
  }

  /** Swap in a re-fetched schedule, keeping the position.
   *
   * The frame on screen keeps its already-scheduled deadline; the new
   * durations take effect from the next word.
   */
  swapSchedule(schedule: Schedule, atIndex: number = this.cursorIndex): void {
    this.schedule = schedule;
    this.cursorIndex = Math.max(0, Math.min(atIndex, schedule.entries.length));
    if (!this.playingFlag) {
      this.remaining = null;
    }
  }

  private arm(): void {
    const delay = Math.max(this.deadline - this.clock.now(), 0);
    this.timerId = this.timer.set(() => this.advance(), delay);
  }

  private disarm(): void {
    if (this.timerId !== null) {
      this.timer.clear(this.timerId);
      this.timerId = null;
    }
  }

  private advance(): void {
    this.timerId = null;
    this.cursorIndex += 1;
    const entry = this.currentEntry();
    if (!entry) {
      this.stopAtEnd();
      return;
    }
    this.events.onFrame?.(this.cursorIndex, entry);
    // absolute chaining: late timers shorten the next arm, never the dwell sum
    this.deadline += entry.ms;
    this.arm();
  }

  private stopAtEnd(): void {
    this.disarm();
    this.playingFlag = false;
    this.remaining = null;
    this.events.onPlayState?.(false);
    this.events.onFinish?.();
  }
}
