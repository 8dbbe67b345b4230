import random
from pathlib import Path

import pytest

from coxknot import coxeter as cx
from coxknot.knots import PolygonalKnot

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"


def corpus_entries():
    out = []
    for line in (CORPUS_DIR / "words.txt").read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word, repeat, knot = line.split()
        out.append((word, int(repeat), knot))
    return out


def polygon_of(word: str, repeat: int = 1) -> PolygonalKnot:
    pts = cx.centroid_path(word * repeat)
    assert pts[0] == pts[-1], "gallery is not closed"
    return PolygonalKnot(tuple(pts[:-1]))


def random_words(count, max_len, seed=7, min_len=0):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_len, max_len)
        out.append("".join(rng.choice("ABCD") for _ in range(n)))
    return out


@pytest.fixture(scope="session")
def corpus():
    return corpus_entries()
