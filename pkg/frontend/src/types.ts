// Wire types of the coxknot HTTP API (snake_case, integer coordinates).

export interface GalleryReport {
  word: string;
  repeat: number;
  is_closed: boolean;
  order: number | "infinite";
  is_self_avoiding: boolean;
  d_count: number;
  cube_visits: number;
  knot: string | null;
  knot_certainty: string | null;
  reduced_word: string;
}

export interface ChamberData {
  vertices: { A: number[]; B: number[]; C: number[]; D: number[] };
  centroid: number[];
}

export interface GeometryDocument {
  word: string;
  repeat: number;
  chambers: ChamberData[];
  path: number[][];
  diagnostics: GalleryReport;
}

export interface CorpusEntry {
  word: string;
  repeat: number;
  knot: string;
}
