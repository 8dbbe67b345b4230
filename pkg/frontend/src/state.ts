// Session state: the edited word, its repeat mode, and the last service
// responses. Responses carry the request sequence number that produced
// them; anything stale is discarded, so the display always corresponds to
// the current word.

import type { GalleryReport, GeometryDocument } from "./types.js";

export const LETTERS = ["A", "B", "C", "D"] as const;
export type Letter = (typeof LETTERS)[number];

export interface StateSnapshot {
  word: string;
  repeat: 1 | 3;
  report: GalleryReport | null;
  geometry: GeometryDocument | null;
  error: string | null;
  pending: boolean;
}

export class SessionState {
  private word = "";
  private repeat: 1 | 3 = 1;
  private seq = 0;           // latest request sequence number
  private appliedSeq = 0;    // sequence of the data on display
  private report: GalleryReport | null = null;
  private geometry: GeometryDocument | null = null;
  private error: string | null = null;
  private listeners: Array<(s: StateSnapshot) => void> = [];

  get currentWord(): string {
    return this.word;
  }

  get currentRepeat(): 1 | 3 {
    return this.repeat;
  }

  subscribe(fn: (s: StateSnapshot) => void): void {
    this.listeners.push(fn);
  }

  snapshot(): StateSnapshot {
    return {
      word: this.word,
      repeat: this.repeat,
      report: this.report,
      geometry: this.geometry,
      error: this.error,
      pending: this.appliedSeq < this.seq,
    };
  }

  private emit(): void {
    const snap = this.snapshot();
    for (const fn of this.listeners) fn(snap);
  }

  /** Letter appended twice in a row is legal but worth a soft warning. */
  repeatsLastLetter(g: Letter): boolean {
    return this.word.length > 0 && this.word[this.word.length - 1] === g;
  }

  appendLetter(g: Letter): number {
    if (!LETTERS.includes(g)) throw new Error(`not a generator: ${g}`);
    this.word += g;
    return this.bump();
  }

  undo(): number | null {
    if (this.word.length === 0) return null; // no-op on empty
    this.word = this.word.slice(0, -1);
    return this.bump();
  }

  clear(): number {
    this.word = "";
    return this.bump();
  }

  setWord(word: string, repeat: 1 | 3): number {
    this.word = word;
    this.repeat = repeat;
    return this.bump();
  }

  setRepeat(repeat: 1 | 3): number {
    this.repeat = repeat;
    return this.bump();
  }

  private bump(): number {
    this.seq += 1;
    this.error = null;
    this.emit();
    return this.seq;
  }

  /** Install a response pair; only the current sequence may display. */
  applyResponse(seq: number, report: GalleryReport,
                geometry: GeometryDocument): boolean {
    if (seq !== this.seq) return false; // stale: a newer edit exists
    this.appliedSeq = seq;
    this.report = report;
    this.geometry = geometry;
    this.error = null;
    this.emit();
    return true;
  }

  applyError(seq: number, message: string): boolean {
    if (seq !== this.seq) return false;
    this.appliedSeq = seq;
    this.error = message;
    this.emit();
    return true;
  }
}
