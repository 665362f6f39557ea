import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { ReaderController } from "../src/controller.js";
import type { Profile, Schedule } from "../src/types.js";
import { FakeTime } from "./fake_time.js";

function schedule(durations: number[], wpm = 300): Schedule {
  return {
    version: 1,
    effective_wpm: wpm,
    total_ms: durations.reduce((a, b) => a + b, 0),
    entries: durations.map((ms, k) => ({
      i: k * 2,
      text: `word${k}`,
      ms,
      orp: 1,
      unfamiliar: false,
      color: null,
    })),
  };
}

interface Deferred<T> {
  promise: Promise<T>;
  resolve: (value: T) => void;
  reject: (error: unknown) => void;
}

function deferred<T>(): Deferred<T> {
  let resolve!: (value: T) => void;
  let reject!: (error: unknown) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

/** ApiClient stub: hands out one deferred per scheduleForText call. */
function stubApi() {
  const calls: { profile: Profile; deferred: Deferred<Schedule> }[] = [];
  const api = {
    scheduleForText(_text: string, profile: Profile): Promise<Schedule> {
      const d = deferred<Schedule>();
      calls.push({ profile: { ...profile }, deferred: d });
      return d.promise;
    },
    scheduleForDocument(_id: string, profile: Profile): Promise<Schedule> {
      const d = deferred<Schedule>();
      calls.push({ profile: { ...profile }, deferred: d });
      return d.promise;
    },
  } as unknown as ApiClient;
  return { api, calls };
}

async function loadedController(events = {}) {
  const { api, calls } = stubApi();
  const time = new FakeTime();
  const controller = new ReaderController(api, events, time, time);
  const loading = controller.load({ kind: "text", text: "word0 word1 word2" });
  calls[0]!.deferred.resolve(schedule([200, 200, 200]));
  await loading;
  return { controller, calls, time };
}

describe("ReaderController", () => {
  it("loads a schedule and exposes the engine", async () => {
    const { controller } = await loadedController();
    expect(controller.engine).not.toBeNull();
    expect(controller.engine!.entries.length).toBe(3);
  });

  it("discards stale schedule responses: the latest edit wins", async () => {
    const { controller, calls } = await loadedController();
    const first = controller.applyProfileChange({ base_wpm: 400 });
    const second = controller.applyProfileChange({ base_wpm: 500 });
    // the newer request resolves first
    calls[2]!.deferred.resolve(schedule([120, 120, 120], 500));
    await second;
    expect(controller.engine!.entries[0]!.ms).toBe(120);
    // the older, slower response arrives late and must be ignored
    calls[1]!.deferred.resolve(schedule([150, 150, 150], 400));
    await first;
    expect(controller.engine!.entries[0]!.ms).toBe(120);
    expect(controller.profile.base_wpm).toBe(500);
  });

  it("keeps the playback position across a profile change", async () => {
    const { controller, calls, time } = await loadedController();
    controller.engine!.play();
    time.advance(250); // on word 1
    const change = controller.applyProfileChange({ base_wpm: 600 });
    calls[1]!.deferred.resolve(schedule([100, 100, 100], 600));
    await change;
    expect(controller.engine!.cursor).toBe(1);
  });

  it("surfaces service validation errors inline", async () => {
    const errors: string[] = [];
    const { controller, calls } = await loadedController({
      onError: (m: string) => errors.push(m),
    });
    const change = controller.applyProfileChange({ base_wpm: 400 });
    calls[1]!.deferred.reject(
      new ApiError(422, "invalid_profile", "base_wpm must be in [60, 1500]"),
    );
    await change;
    expect(errors).toEqual(["base_wpm must be in [60, 1500]"]);
    expect(controller.engine!.entries[0]!.ms).toBe(200); // old schedule kept
  });

  it("adjusts wpm in 25-step increments within bounds", async () => {
    const { controller, calls } = await loadedController();
    const up = controller.adjustWpm(1);
    calls[1]!.deferred.resolve(schedule([100, 100, 100]));
    await up;
    expect(controller.profile.base_wpm).toBe(325);

    controller.profile.base_wpm = 1500;
    const clamped = controller.adjustWpm(1);
    calls[2]!.deferred.resolve(schedule([100, 100, 100]));
    await clamped;
    expect(controller.profile.base_wpm).toBe(1500);
  });

  it("seeks by sentences derived from the source text", async () => {
    const { api, calls } = stubApi();
    const time = new FakeTime();
    const controller = new ReaderController(api, {}, time, time);
    const loading = controller.load({ kind: "text", text: "One two. Three four" });
    calls[0]!.deferred.resolve({
      version: 1,
      effective_wpm: 300,
      total_ms: 800,
      entries: ["One", "two", "Three", "four"].map((text, k) => ({
        i: k * 2, text, ms: 200, orp: 1, unfamiliar: false, color: null,
      })),
    });
    await loading;
    controller.seekToWord(3); // mid second sentence
    controller.seekSentenceBack();
    expect(controller.engine!.cursor).toBe(2); // back to its first word
    controller.seekSentenceBack();
    expect(controller.engine!.cursor).toBe(0); // at a start: previous sentence
    controller.seekSentenceForward();
    expect(controller.engine!.cursor).toBe(2);
  });
});
