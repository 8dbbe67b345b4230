// Wires edits to the service: every word change fires one analyze and
// one geometry request tagged with the edit's sequence number.

import { ApiClient, ApiError } from "./api.js";
import { SessionState, type Letter } from "./state.js";

export class Controller {
  constructor(
    readonly state: SessionState,
    private api: ApiClient,
  ) {}

  private async refresh(seq: number | null): Promise<void> {
    if (seq === null) return;
    const word = this.state.currentWord;
    const repeat = this.state.currentRepeat;
    if (word === "") {
      // nothing to analyze; the empty gallery is a single chamber
      this.state.applyResponse(seq, emptyReport(repeat), emptyGeometry(repeat));
      return;
    }
    try {
      const [report, geometry] = await Promise.all([
        this.api.analyze(word, repeat),
        this.api.geometry(word, repeat),
      ]);
      this.state.applyResponse(seq, report, geometry);
    } catch (err) {
      const message = err instanceof ApiError
        ? `service: ${err.message}`
        : `request failed: ${String(err)}`;
      this.state.applyError(seq, message);
    }
  }

  appendLetter(g: Letter): Promise<void> {
    return this.refresh(this.state.appendLetter(g));
  }

  undo(): Promise<void> {
    return this.refresh(this.state.undo());
  }

  clear(): Promise<void> {
    return this.refresh(this.state.clear());
  }

  setRepeat(repeat: 1 | 3): Promise<void> {
    return this.refresh(this.state.setRepeat(repeat));
  }

  loadWord(word: string, repeat: 1 | 3): Promise<void> {
    return this.refresh(this.state.setWord(word, repeat));
  }
}

function emptyReport(repeat: number) {
  return {
    word: "", repeat, is_closed: true, order: 1 as const,
    is_self_avoiding: true, d_count: 0, cube_visits: 1,
    knot: null, knot_certainty: null, reduced_word: "",
  };
}

function emptyGeometry(repeat: number) {
  const fundamental = {
    vertices: { A: [0, 0, 0], B: [8, 0, 0], C: [4, 4, 0], D: [4, 4, 4] },
    centroid: [4, 2, 1],
  };
  return {
    word: "", repeat, chambers: [fundamental], path: [[4, 2, 1]],
    diagnostics: emptyReport(repeat),
  };
}
