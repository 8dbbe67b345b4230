import { describe, expect, it } from "vitest";

import { SessionState } from "./state.js";
import type { GalleryReport, GeometryDocument } from "./types.js";

function fakeReport(word: string): GalleryReport {
  return {
    word, repeat: 1, is_closed: false, order: 2, is_self_avoiding: true,
    d_count: 0, cube_visits: 1, knot: null, knot_certainty: null,
    reduced_word: word,
  };
}

function fakeGeometry(word: string): GeometryDocument {
  return {
    word, repeat: 1, chambers: [], path: [], diagnostics: fakeReport(word),
  };
}

describe("SessionState", () => {
  it("appends, undoes and clears", () => {
    const s = new SessionState();
    s.appendLetter("A");
    s.appendLetter("D");
    expect(s.currentWord).toBe("AD");
    s.undo();
    expect(s.currentWord).toBe("A");
    s.clear();
    expect(s.currentWord).toBe("");
  });

  it("undo on an empty word is a no-op", () => {
    const s = new SessionState();
    expect(s.undo()).toBeNull();
    expect(s.snapshot().pending).toBe(false);
  });

  it("soft-warns on a repeated letter without forbidding it", () => {
    const s = new SessionState();
    s.appendLetter("A");
    expect(s.repeatsLastLetter("A")).toBe(true);
    expect(s.repeatsLastLetter("B")).toBe(false);
    s.appendLetter("A"); // still legal
    expect(s.currentWord).toBe("AA");
  });

  it("discards out-of-order responses", () => {
    const s = new SessionState();
    const seq1 = s.appendLetter("A");
    const seq2 = s.appendLetter("B");
    // the slow response for seq1 lands after seq2 was requested
    expect(s.applyResponse(seq1, fakeReport("A"), fakeGeometry("A")))
      .toBe(false);
    expect(s.snapshot().report).toBeNull();
    expect(s.applyResponse(seq2, fakeReport("AB"), fakeGeometry("AB")))
      .toBe(true);
    expect(s.snapshot().report?.word).toBe("AB");
    // a very late duplicate of seq1 cannot overwrite newer state
    expect(s.applyResponse(seq1, fakeReport("A"), fakeGeometry("A")))
      .toBe(false);
    expect(s.snapshot().report?.word).toBe("AB");
  });

  it("errors surface only for the current request", () => {
    const s = new SessionState();
    const seq1 = s.appendLetter("A");
    const seq2 = s.appendLetter("B");
    expect(s.applyError(seq1, "boom")).toBe(false);
    expect(s.snapshot().error).toBeNull();
    expect(s.applyError(seq2, "bad word")).toBe(true);
    expect(s.snapshot().error).toBe("bad word");
  });

  it("displayed report is byte-equal to the applied response", () => {
    const s = new SessionState();
    const seq = s.appendLetter("A");
    const report = fakeReport("A");
    s.applyResponse(seq, report, fakeGeometry("A"));
    expect(JSON.stringify(s.snapshot().report)).toBe(JSON.stringify(report));
  });
});
