/** Thin typed client for the scheduling service. */

import type {
  GradientResponse,
  Profile,
  Report,
  Schedule,
  StoredDocument,
  UploadResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

type FetchLike = typeof fetch;

async function unwrap<T>(response: Response): Promise<T> {
  if (response.ok) {
    return (await response.json()) as T;
  }
  let code = "http_error";
  let message = `request failed with status ${response.status}`;
  try {
    const body = await response.json();
    if (body && body.error) {
      code = body.error.code ?? code;
      message = body.error.message ?? message;
    }
  } catch {
    // non-JSON error body; keep the generic message
  }
  throw new ApiError(response.status, code, message);
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "http://localhost:8080",
    private readonly fetchImpl: FetchLike = fetch.bind(globalThis),
  ) {}

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.fetchImpl(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    }).then((r) => unwrap<T>(r));
  }

  analyze(text: string, lexicon?: string): Promise<Report> {
    return this.post("/api/v1/analyze", lexicon ? { text, lexicon } : { text });
  }

  scheduleForText(text: string, profile: Profile): Promise<Schedule> {
    return this.post("/api/v1/schedule", { text, profile: wireProfile(profile) });
  }

  scheduleForDocument(documentId: string, profile: Profile): Promise<Schedule> {
    return this.post("/api/v1/schedule", {
      document_id: documentId,
      profile: wireProfile(profile),
    });
  }

  async upload(file: File | Blob, filename: string): Promise<UploadResponse> {
    const form = new FormData();
    form.append("file", file, filename);
    const response = await this.fetchImpl(`${this.baseUrl}/api/v1/documents`, {
      method: "POST",
      body: form,
    });
    return unwrap<UploadResponse>(response);
  }

  async getDocument(id: string): Promise<StoredDocument> {
    const response = await this.fetchImpl(`${this.baseUrl}/api/v1/documents/${id}`);
    return unwrap<StoredDocument>(response);
  }

  async gradient(documentId: string, width: number): Promise<GradientResponse> {
    const query = `document_id=${encodeURIComponent(documentId)}&width=${width}`;
    const response = await this.fetchImpl(`${this.baseUrl}/api/v1/gradient?${query}`);
    return unwrap<GradientResponse>(response);
  }
}

/** Drop null age so the service treats it as absent. */
function wireProfile(profile: Profile): Record<string, unknown> {
  const wire: Record<string, unknown> = { ...profile };
  if (wire.reader_age === null || wire.reader_age === undefined) {
    delete wire.reader_age;
  }
  return wire;
}
