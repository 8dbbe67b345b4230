// Browser entry: letter buttons, diagnostics panel, corpus browser and
// the three.js viewport. All math lives server-side.

import * as THREE from "three";
import { OrbitControls } from "three/examples/jsm/controls/OrbitControls.js";

import { ApiClient } from "./api.js";
import { Controller } from "./controller.js";
import { buildScene } from "./render.js";
import { LETTERS, SessionState, type StateSnapshot } from "./state.js";
import type { CorpusEntry } from "./types.js";

const apiBase =
  new URLSearchParams(window.location.search).get("api") ??
  "http://127.0.0.1:8000";

const api = new ApiClient(apiBase);
const state = new SessionState();
const controller = new Controller(state, api);

// --- DOM ------------------------------------------------------------------

const el = (id: string) => document.getElementById(id)!;
const wordEl = el("word");
const badgeEl = el("badge");
const diagEl = el("diagnostics");
const warnEl = el("warning");
const corpusEl = el("corpus") as HTMLSelectElement;

for (const g of LETTERS) {
  const btn = document.createElement("button");
  btn.textContent = g;
  btn.onclick = () => {
    warnEl.textContent = state.repeatsLastLetter(g)
      ? `note: ${g}${g} backtracks through the same face`
      : "";
    void controller.appendLetter(g);
  };
  el("letters").appendChild(btn);
}
(el("undo") as HTMLButtonElement).onclick = () => void controller.undo();
(el("clear") as HTMLButtonElement).onclick = () => void controller.clear();
(el("repeat") as HTMLInputElement).onchange = (ev) => {
  const on = (ev.target as HTMLInputElement).checked;
  void controller.setRepeat(on ? 3 : 1);
};

api.corpus().then((entries: CorpusEntry[]) => {
  for (const entry of entries) {
    const opt = document.createElement("option");
    opt.value = JSON.stringify(entry);
    opt.textContent = `${entry.word.slice(0, 24)}${entry.word.length > 24 ? "…" : ""}  ×${entry.repeat}  (${entry.knot})`;
    corpusEl.appendChild(opt);
  }
}).catch(() => { warnEl.textContent = "corpus unavailable"; });

corpusEl.onchange = () => {
  if (!corpusEl.value) return;
  const entry = JSON.parse(corpusEl.value) as CorpusEntry;
  (el("repeat") as HTMLInputElement).checked = entry.repeat === 3;
  void controller.loadWord(entry.word, entry.repeat === 3 ? 3 : 1);
};

// --- three.js viewport ------------------------------------------------

const viewport = el("viewport");
const renderer = new THREE.WebGLRenderer({ antialias: true });
renderer.setSize(viewport.clientWidth, viewport.clientHeight);
viewport.appendChild(renderer.domElement);
const scene = new THREE.Scene();
scene.background = new THREE.Color(0xf4f4f4);
const camera = new THREE.PerspectiveCamera(
  50, viewport.clientWidth / viewport.clientHeight, 0.1, 4000);
camera.position.set(60, 40, 80);
const controls = new OrbitControls(camera, renderer.domElement);
scene.add(new THREE.AmbientLight(0xffffff, 0.7));
const sun = new THREE.DirectionalLight(0xffffff, 0.8);
sun.position.set(1, 2, 1.5);
scene.add(sun);

let gallery: THREE.Group | null = null;

state.subscribe((snap: StateSnapshot) => {
  wordEl.textContent = snap.word || "(empty)";
  if (snap.error) {
    warnEl.textContent = snap.error;
  }
  if (snap.report) {
    badgeEl.textContent = snap.report.knot ?? "—";
    diagEl.textContent = JSON.stringify(snap.report, null, 1);
  }
  if (snap.geometry) {
    if (gallery) scene.remove(gallery);
    gallery = buildScene(snap.geometry, {
      pieceColoring: snap.repeat === 3,
      centroidPath: true,
    });
    scene.add(gallery);
  }
});

function animate() {
  requestAnimationFrame(animate);
  controls.update();
  renderer.render(scene, camera);
}
animate();
void controller.clear(); // initial empty gallery
