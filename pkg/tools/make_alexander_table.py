#!/usr/bin/env python3
"""Generate src/coxknot/data/alexander_table.json.

Run before the main build.  Every polynomial entered here is verified
against an independently constructed diagram where one exists:

  3_1   closure of the braid s1^3, and the (1,1,1) pretzel
  4_1   closure of the braid s1 s2^-1 s1 s2^-1
  9_35  the (3,3,3) pretzel; its Alexander polynomial also follows from
        the classical pretzel formula  ((pq+qr+rp)(t-2+1/t)+(t+2+1/t))/4
  9_40, 9_41, 9_47
        published-table values (Rolfsen numbering); re-verified inside the
        test suite against the cubic-lattice constructions shipped in the
        corpus, which pass through an entirely different code path
  12_503
        no authoritative source is reachable offline and the project rule
        is to never hard-code unverified constants, so the label ships
        without an invariant and is never matched

Bracket entries (writhe-normalized Kauffman bracket, variable A) are stored
for both chiralities of each constructed diagram.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from coxknot.knots.alexander import alexander, determinant  # noqa: E402
from coxknot.knots.bracket import kauffman_bracket  # noqa: E402
from coxknot.knots.constructions import braid_closure, pretzel  # noqa: E402
from coxknot.knots.laurent import LaurentPolynomial  # noqa: E402

OUT = Path(__file__).resolve().parent.parent / "src/coxknot/data/alexander_table.json"

PUBLISHED = {
    "0_1": {0: 1},
    "3_1": {-1: 1, 0: -1, 1: 1},
    "4_1": {-1: -1, 0: 3, 1: -1},
    "9_35": {-1: 7, 0: -13, 1: 7},
    "9_40": {-3: 1, -2: -7, -1: 18, 0: -23, 1: 18, 2: -7, 3: 1},
    "9_41": {-2: 3, -1: -12, 0: 19, 1: -12, 2: 3},
    "9_47": {-3: 1, -2: -4, -1: 6, 0: -5, 1: 6, 2: -4, 3: 1},
}


def corpus_diagrams():
    """Fixed diagrams of the 9-crossing knots obtained by projecting the
    cubic-lattice constructions shipped in corpus/pieces (an independent
    code path from the braid/pretzel builders)."""
    from coxknot import cubic
    from coxknot.cli import parse_piece_file
    from coxknot.knots import reduce_polygon, project, simplify

    out = {}
    pieces = Path(__file__).resolve().parent.parent / "corpus/pieces"
    for name in ("9_35", "9_41", "9_47"):
        fields = parse_piece_file(str(pieces / f"{name}.piece"))
        sigma = cubic.StaticRotation.parse(fields["sigma"])
        asm = cubic.assemble_threefold(fields["static"], sigma)
        out[name] = simplify(project(reduce_polygon(asm), 0))
    return out


def main():
    diagrams = {
        "3_1": [braid_closure([1, 1, 1], 2), pretzel([1, 1, 1])],
        "4_1": [braid_closure([1, -2, 1, -2], 3)],
        "9_35": [pretzel([3, 3, 3])],
    }
    for label, d in corpus_diagrams().items():
        diagrams.setdefault(label, []).append(d)
    # classical pretzel formula, the second route for 9_35
    e = 27
    formula_935 = LaurentPolynomial(
        {-1: (e + 1) // 4, 0: (-2 * e + 2) // 4, 1: (e + 1) // 4})
    assert formula_935 == LaurentPolynomial(PUBLISHED["9_35"]), \
        "pretzel formula disagrees with the published 9_35 value"

    table = {}
    for label, coeffs in PUBLISHED.items():
        expected = LaurentPolynomial(coeffs)
        rec = {
            "alexander": {str(k): v for k, v in coeffs.items()},
            "determinant": abs(int(expected.evaluate(-1))),
            "pd": [],
            "brackets": [],
            "source": "published knot tables",
        }
        for d in diagrams.get(label, []):
            got = alexander(d)
            assert got == expected, (label, str(got), str(expected))
            assert determinant(d) == rec["determinant"], label
            rec["pd"].append([list(t) for t in d.pd_code()])
            for var in (d, d.mirror()):
                b = kauffman_bracket(var)
                enc = {str(k): v for k, v in b.coeffs.items()}
                if enc not in rec["brackets"]:
                    rec["brackets"].append(enc)
            rec["source"] = "published knot tables; verified on constructed diagrams"
        table[label] = rec
    if "0_1" in table:
        table["0_1"]["brackets"] = [{"0": 1}]
    table["12_503"] = {
        "alexander": None,
        "note": "no authoritative offline source; label recognised, never matched",
    }
    # identification relies on Alexander values being pairwise distinct
    polys = [json.dumps(rec["alexander"], sort_keys=True)
             for rec in table.values() if rec.get("alexander")]
    assert len(polys) == len(set(polys)), "table has an Alexander collision"
    OUT.write_text(json.dumps({"knots": table}, indent=1, sort_keys=True) + "\n")
    print(f"wrote {OUT} with {len(table)} entries")


if __name__ == "__main__":
    main()
