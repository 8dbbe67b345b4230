"""Deterministic pruned enumeration of closed and order-3 galleries.

The tree is split at a fixed depth into independent subtrees processed by a
thread pool (the numba kernels drop the GIL); results concatenate in
subtree order, so any worker count yields the identical record stream.
Canonical survivors are the lexicographically least cyclic shifts, checked
statelessly at each leaf.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path

import numpy as np

from . import coxeter as cx
from ._kernels import MODE_CLOSED, MODE_ORDER3, decode_word, dfs_enumerate
from .knots import PolygonalKnot, identify

SPLIT_DEPTH = 4
UNLIMITED = 10 ** 9


@dataclass(frozen=True)
class SearchConfig:
    mode: str  # "closed" or "order3"
    max_piece_length: int
    max_d_count: int | None = None
    seed: int = 0
    workers: int = 1
    checkpoint_dir: str | None = None

    def __post_init__(self):
        if self.mode not in ("closed", "order3"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.max_piece_length < 1:
            raise ValueError("maxPieceLength must be >= 1")


@dataclass(frozen=True)
class ResultRecord:
    word: str
    total_length: int
    knot: str
    certainty: str
    d_count: int
    cube_visits: int
    candidates: tuple = ()

    def line(self) -> str:
        return (f"{self.word} {self.total_length} {self.knot} "
                f"{self.d_count} {self.cube_visits}")


def _subtree_prefixes(length: int):
    """Lexicographic subtree roots at the split depth (no letter repeats)."""
    depth = SPLIT_DEPTH if length > SPLIT_DEPTH else 0
    if depth == 0:
        return [()]
    out = []
    for letters in product(range(4), repeat=depth):
        if all(letters[i] != letters[i + 1] for i in range(depth - 1)):
            out.append(letters)
    return out


def survivors(config: SearchConfig, length: int) -> list[str]:
    """Canonical survivor words of exactly this piece length, in lex order."""
    mode = MODE_CLOSED if config.mode == "closed" else MODE_ORDER3
    maxd = config.max_d_count if config.max_d_count is not None else UNLIMITED
    prefixes = _subtree_prefixes(length)

    def run(prefix):
        packed = dfs_enumerate(np.array(prefix, dtype=np.int64), length,
                               mode, maxd)
        return [decode_word(p, length) for p in packed]

    if config.workers > 1 and len(prefixes) > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            chunks = list(pool.map(run, prefixes))
    else:
        chunks = [run(p) for p in prefixes]
    return [w for chunk in chunks for w in chunk]


def _record_for(config: SearchConfig, word: str) -> ResultRecord:
    if config.mode == "order3":
        full = word * 3
    else:
        full = word
    pts = cx.centroid_path(full)
    polygon = PolygonalKnot(tuple(pts[:-1]))
    name = identify(polygon, seed=config.seed)
    return ResultRecord(
        word=word,
        total_length=len(full),
        knot=name.label,
        certainty=name.certainty,
        d_count=cx.d_count(word),
        cube_visits=cx.cube_visits(full),
        candidates=tuple(name.candidates),
    )


def _checkpoint_path(config: SearchConfig, length: int) -> Path | None:
    if config.checkpoint_dir is None:
        return None
    tag = (f"{config.mode}-L{length}-d"
           f"{config.max_d_count if config.max_d_count is not None else 'inf'}"
           f"-s{config.seed}")
    return Path(config.checkpoint_dir) / f"{tag}.jsonl"


def enumerate_records(config: SearchConfig):
    """Stream ResultRecords sorted by (total length, word)."""
    for length in range(1, config.max_piece_length + 1):
        if length % 2 == 1:
            # generators are reflections, so closure forces even length
            continue
        path = _checkpoint_path(config, length)
        if path is not None and path.exists():
            for line in path.read_text().splitlines():
                rec = json.loads(line)
                rec["candidates"] = tuple(rec.get("candidates", ()))
                yield ResultRecord(**rec)
            continue
        records = [_record_for(config, w) for w in survivors(config, length)]
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            with open(tmp, "w") as fh:
                for rec in records:
                    fh.write(json.dumps(rec.__dict__) + "\n")
            os.replace(tmp, path)
        yield from records


def is_nontrivial(record: ResultRecord) -> bool:
    """Alexander distinguishes the record from the unknot."""
    if record.knot == "0_1":
        return False
    if record.knot == "unknown" and "0_1" in record.candidates:
        # trivial Alexander but not certified unknot: undetermined, and
        # reported separately rather than counted as knotted
        return False
    return True


def undetermined(records) -> list[ResultRecord]:
    """Records with trivial Alexander polynomial not certified unknots."""
    return [r for r in records
            if r.knot == "unknown" and "0_1" in r.candidates]


def find_minimum(config: SearchConfig):
    """First nontrivially-knotted record in stream order, or None."""
    for record in enumerate_records(config):
        if is_nontrivial(record):
            return record
    return None
