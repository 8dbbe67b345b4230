// Thin client for the coxknot service. All knot/group math happens
// server-side; the viewer only renders what comes back.

import type { CorpusEntry, GalleryReport, GeometryDocument } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    private base: string,
    private fetcher: FetchLike = (u, i) => fetch(u, i),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const resp = await this.fetcher(`${this.base}${path}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    const text = await resp.text();
    if (!resp.ok) {
      let reason = text;
      try {
        reason = JSON.parse(text).error ?? text;
      } catch {
        /* non-JSON error body */
      }
      throw new ApiError(resp.status, String(reason));
    }
    return JSON.parse(text) as T;
  }

  analyze(word: string, repeat: number): Promise<GalleryReport> {
    return this.post<GalleryReport>("/gallery/analyze", { word, repeat });
  }

  geometry(word: string, repeat: number): Promise<GeometryDocument> {
    return this.post<GeometryDocument>("/gallery/geometry", { word, repeat });
  }

  async corpus(): Promise<CorpusEntry[]> {
    const resp = await this.fetcher(`${this.base}/corpus/words`);
    if (!resp.ok) throw new ApiError(resp.status, "corpus unavailable");
    return parseCorpus(await resp.text());
  }
}

export function parseCorpus(text: string): CorpusEntry[] {
  const out: CorpusEntry[] = [];
  for (const raw of text.split("\n")) {
    const line = raw.trim();
    if (!line || line.startsWith("#")) continue;
    const [word, repeat, knot] = line.split(/\s+/);
    if (!word || !repeat || !knot) continue;
    out.push({ word, repeat: Number(repeat), knot });
  }
  return out;
}
