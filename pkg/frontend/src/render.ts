// Scene construction: one tetrahedron mesh per chamber, vertices colored
// by their label, optional centroid polyline. In piece-coloring mode each
// third of a repeat-3 gallery gets its own tint (the red/green/blue piece
// presentation). Pure scene-graph code: runs headless.

import * as THREE from "three";

import type { ChamberData, GeometryDocument } from "./types.js";

export const LABEL_COLORS: Record<string, number> = {
  A: 0xd62728, // corners (first color)
  B: 0x1f77b4, // corners (second color)
  C: 0x2ca02c, // face centers
  D: 0xffbf00, // cube centers
};

export const BAND_COLORS = [0xd62728, 0x2ca02c, 0x1f77b4];

export interface RenderOptions {
  pieceColoring?: boolean; // tint each third of a repeat-3 gallery
  centroidPath?: boolean;  // add the polyline through chamber centroids
}

const FACES = [
  [0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2],
];

function chamberMesh(ch: ChamberData, tint: number | null): THREE.Mesh {
  const order = ["A", "B", "C", "D"] as const;
  const pos: number[] = [];
  const col: number[] = [];
  const color = new THREE.Color();
  for (const face of FACES) {
    for (const idx of face) {
      const label = order[idx];
      const v = ch.vertices[label];
      pos.push(v[0], v[1], v[2]);
      color.setHex(tint ?? LABEL_COLORS[label]);
      col.push(color.r, color.g, color.b);
    }
  }
  const geo = new THREE.BufferGeometry();
  geo.setAttribute("position", new THREE.Float32BufferAttribute(pos, 3));
  geo.setAttribute("color", new THREE.Float32BufferAttribute(col, 3));
  geo.computeVertexNormals();
  const mat = new THREE.MeshLambertMaterial({
    vertexColors: true, transparent: true, opacity: 0.85,
    side: THREE.DoubleSide,
  });
  const mesh = new THREE.Mesh(geo, mat);
  mesh.name = "chamber";
  return mesh;
}

/** Chambers to draw: a closed gallery's final chamber repeats the first
 * and is skipped, so a repeat-3 gallery shows exactly 3 x piece bands. */
export function drawableChambers(doc: GeometryDocument): ChamberData[] {
  const { chambers, path } = doc;
  if (chambers.length > 1 &&
      JSON.stringify(path[0]) === JSON.stringify(path[path.length - 1])) {
    return chambers.slice(0, -1);
  }
  return chambers;
}

export function buildScene(doc: GeometryDocument,
                           opts: RenderOptions = {}): THREE.Group {
  const group = new THREE.Group();
  group.name = "gallery";
  const chambers = drawableChambers(doc);
  const bandSize = doc.repeat === 3 ? chambers.length / 3 : chambers.length;
  chambers.forEach((ch, i) => {
    let tint: number | null = null;
    if (opts.pieceColoring && doc.repeat === 3) {
      tint = BAND_COLORS[Math.min(Math.floor(i / bandSize), 2)];
    }
    const mesh = chamberMesh(ch, tint);
    mesh.userData.band = opts.pieceColoring && doc.repeat === 3
      ? Math.min(Math.floor(i / bandSize), 2)
      : 0;
    group.add(mesh);
  });
  if (opts.centroidPath !== false) {
    const pts = doc.path.map((p) => new THREE.Vector3(p[0], p[1], p[2]));
    const geo = new THREE.BufferGeometry().setFromPoints(pts);
    const line = new THREE.Line(
      geo, new THREE.LineBasicMaterial({ color: 0x111111 }));
    line.name = "centroid-path";
    group.add(line);
  }
  return group;
}

export function chamberMeshes(group: THREE.Group): THREE.Mesh[] {
  return group.children.filter(
    (c): c is THREE.Mesh => c.name === "chamber");
}

export function bandsOf(group: THREE.Group): Set<number> {
  return new Set(chamberMeshes(group).map((m) => m.userData.band as number));
}
