"""cubic-lattice: static/TNB codification, torsion, and the compiler."""

import numpy as np
import pytest

from coxknot import coxeter as cx
from coxknot import cubic
from coxknot.knots import identify
from coxknot.cli import parse_piece_file
from conftest import CORPUS_DIR

TREFOIL = ("FFFUURBB", "(FDR)(BUL)")
PIECES = sorted((CORPUS_DIR / "pieces").glob("*.piece"))


def load_pieces():
    out = []
    for path in PIECES:
        fields = parse_piece_file(str(path))
        out.append((fields["name"], fields["static"],
                    cubic.StaticRotation.parse(fields["sigma"]), fields["knot"]))
    return out


def test_static_path_examples():
    assert cubic.static_path("F", (0, 0, 0)) == [(0, 0, 0), (1, 0, 0)]
    pts = cubic.static_path("FFFUURBB")
    assert len(pts) == 9 and len(set(pts)) == 9
    with pytest.raises(cubic.CubicError, match="backtrack"):
        cubic.static_path("FB")


def test_apply_sigma_paper_example():
    sigma = cubic.StaticRotation.parse("(FDR)(BUL)")
    assert cubic.apply_sigma("FFFUURBB", sigma) == "DDDLLFUU"
    assert cubic.apply_sigma("DDDLLFUU", sigma) == "RRRBBDLL"
    w = "FFFUURBB"
    for _ in range(3):
        w = cubic.apply_sigma(w, sigma)
    assert w == "FFFUURBB"


def test_sigma_validation():
    with pytest.raises(cubic.CubicError):
        cubic.StaticRotation.parse("(FRU)(BLD)(X)")
    with pytest.raises(cubic.CubicError):
        cubic.StaticRotation.parse("(FRB)(LUD)")  # opposites not respected
    s = cubic.StaticRotation.parse("(FUR)(BDL)")
    assert s.serialize() in ("(FUR)(BDL)", "(BDL)(FUR)")


def test_sigma_equivariance_of_paths():
    sigma = cubic.StaticRotation.parse("(FDR)(BUL)")
    m = np.array(sigma.matrix())
    p1 = cubic.static_path("FFFUURBB")
    p2 = cubic.static_path(cubic.apply_sigma("FFFUURBB", sigma))
    for a, b in zip(p1, p2):
        assert tuple(m @ np.array(a)) == b


def test_assemble_threefold():
    sigma = cubic.StaticRotation.parse(TREFOIL[1])
    asm = cubic.assemble_threefold(TREFOIL[0], sigma)
    assert len(asm) == 24
    assert identify(asm).label == "3_1"
    with pytest.raises(cubic.CubicError, match="close"):
        cubic.assemble_threefold("FFF", sigma)
    with pytest.raises(cubic.CubicError, match="self-inters552ecting|self-intersecting|close"):
        cubic.assemble_threefold("FFRBBL", cubic.StaticRotation.parse("(FRU)(BLD)"))


def test_static_to_tnb_trefoil():
    sigma = cubic.StaticRotation.parse(TREFOIL[1])
    moves = cubic.loop_moves(TREFOIL[0], sigma)
    tnb, frame, tau = cubic.static_to_tnb(moves, 0)
    assert tnb == "fffufruf"
    assert tnb[1:] == "ffufruf"  # the printed 7-letter codification
    # tau(T) = -B, tau(N) = N, tau(B) = T: a corner gluing
    assert tau.image(0) == (0, 0, -1)
    assert tau.image(1) == (0, 1, 0)
    assert tau.image(2) == (1, 0, 0)
    assert cubic.classify_gluing(tau).kind == "corner"


def test_planar_words_stay_planar():
    # with T and N spanning the xy-plane, words without l/r never leave it;
    # the frame transport is torsion-free along straight and planar turns
    frame = cubic.Frame.make((1, 0, 0), (0, 1, 0))
    pts = cubic.tnb_to_path("fuffud", frame)
    assert len(pts) == 7
    assert all(p[2] == 0 for p in pts)


def test_tau_well_definedness(corpus=None):
    for name, word, sigma, _ in load_pieces():
        moves = cubic.loop_moves(word, sigma)
        k = len(moves) // 3
        taus = {cubic.static_to_tnb(moves, j * k)[2].matrix for j in range(3)}
        assert len(taus) == 1, name


def test_classify_gluing_rows():
    ident = cubic.TorsionMap(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert cubic.classify_gluing(ident) == cubic.GluingClass("bar", "1")
    # tau(N) = B, tau(B) = -N  ->  s = -i
    minus_i = cubic.TorsionMap(((1, 0, 0), (0, 0, -1), (0, 1, 0)))
    assert cubic.classify_gluing(minus_i) == cubic.GluingClass("bar", "-i")
    plus_i = cubic.TorsionMap(((1, 0, 0), (0, 0, 1), (0, -1, 0)))
    assert cubic.classify_gluing(plus_i) == cubic.GluingClass("bar", "i")
    half = cubic.TorsionMap(((1, 0, 0), (0, -1, 0), (0, 0, -1)))
    assert cubic.classify_gluing(half) == cubic.GluingClass("bar", "-1")


def test_round_trip_tnb(corpus=None):
    for name, word, sigma, _ in load_pieces():
        moves = cubic.loop_moves(word, sigma)
        shift, refinement = cubic.shift_to_bar(word, sigma)
        assert refinement == 1
        w = word if refinement == 1 else cubic.refine_static(word, refinement)
        moves = cubic.loop_moves(w, sigma)
        tnb, frame0, tau = cubic.static_to_tnb(moves, shift)
        k = len(moves) // 3
        path = cubic.tnb_to_path(tnb, frame0, start=(0, 0, 0))
        steps = [tuple(b[i] - a[i] for i in range(3))
                 for a, b in zip(path, path[1:])]
        assert steps == [tuple(moves[(shift + i) % len(moves)])
                         for i in range(k)], name


def test_walkthrough_piece_round_trips_to_printed_tnb():
    fields = parse_piece_file(str(CORPUS_DIR / "pieces" / "9_47.piece"))
    sigma = cubic.StaticRotation.parse(fields["sigma"])
    moves = cubic.loop_moves(fields["static"], sigma)
    tnb, _, tau = cubic.static_to_tnb(moves, 0)
    assert tnb == "fulrfffufffflffufffffuffffffflfffffuffffflffffff"
    assert tau.is_identity()
    assert cubic.classify_gluing(tau) == cubic.GluingClass("bar", "1")


def test_shift_to_bar():
    sigma = cubic.StaticRotation.parse(TREFOIL[1])
    assert cubic.shift_to_bar(TREFOIL[0], sigma) == (1, 1)
    fields = parse_piece_file(str(CORPUS_DIR / "pieces" / "9_47.piece"))
    s47 = cubic.StaticRotation.parse(fields["sigma"])
    assert cubic.shift_to_bar(fields["static"], s47) == (0, 1)


def test_shift_to_bar_needs_refinement_on_all_turn_loops():
    # FRFR under (FUL)(BDR) tiles an all-turn 12-cube loop: no seam is
    # mid-bar, so a bar gluing only appears after halving the cube scale
    sigma = cubic.StaticRotation.parse("(FUL)(BDR)")
    asm = cubic.assemble_threefold("FRFR", sigma)
    moves = cubic.loop_moves("FRFR", sigma)
    assert all(moves[i] != moves[(i + 1) % len(moves)]
               for i in range(len(moves)))
    assert cubic.shift_to_bar("FRFR", sigma) == (1, 2)
    res = cubic.translate_piece("FRFR", sigma)
    assert res["refinement"] == 2
    w = res["coxeter_word"]
    assert cx.element_order(w) == 3
    assert cx.is_closed(w * 3) and cx.is_self_avoiding(w * 3)
    assert identify(asm).label == "0_1"
    from coxknot.knots import PolygonalKnot
    pts = cx.centroid_path(w * 3)
    assert identify(PolygonalKnot(tuple(pts[:-1]))).label == "0_1"


def test_refine_static():
    assert cubic.refine_static("FRU", 2) == "FFRRUU"
    assert cubic.refine_static("FRU", 1) == "FRU"
    with pytest.raises(cubic.CubicError):
        cubic.refine_static("FRU", 0)
    # refinement preserves the knot type of the assembly
    sigma = cubic.StaticRotation.parse(TREFOIL[1])
    asm = cubic.assemble_threefold(cubic.refine_static(TREFOIL[0], 2), sigma)
    assert identify(asm).label == "3_1"


def test_translate_letter_words():
    # 'd' alone maps to DC blocks
    assert cubic.LETTER_WORDS["d"] == ("DC", "DC")
    g = cubic.GluingClass("bar", "1")
    with pytest.raises(cubic.CubicError, match="shift first"):
        cubic.translate_to_coxeter("fudl", cubic.GluingClass("corner"))
    with pytest.raises(cubic.CubicError, match="shift first"):
        cubic.translate_to_coxeter("ufdl", g)
    with pytest.raises(cubic.CubicError, match="even"):
        cubic.translate_to_coxeter("fud", g)


def test_torsion_words_compose_from_corrections():
    # T(i) = (ACA)(f-word), T(-1) = (BCBACA)(f-word), T(-i) = (BCB)(f-word)
    f = cx.word_to_isometry(cubic.TORSION_WORDS["1"])
    for s, corr in (("i", "ACA"), ("-1", "BCBACA"), ("-i", "BCB")):
        lhs = cx.word_to_isometry(cubic.TORSION_WORDS[s])
        rhs = cx.word_to_isometry(corr) * f
        assert lhs == rhs, s


def normalize_rotation(frame0):
    """Lattice rotation g with g(T0, N0, B0) = (y, z, x); as a matrix."""
    t, n = np.array(frame0.T), np.array(frame0.N)
    b = np.cross(t, n)
    src = np.stack([t, n, b], axis=1)          # columns T0, N0, B0
    dst = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]])  # columns y, z, x
    return dst @ src.T  # src is orthogonal, so src^-1 = src^T


def test_pivot_walk_oracle():
    """Each emitted block moves the pivot chamber exactly as the cube path
    and transported frame dictate: the geometric content of the
    translation tables, letter by letter, on every corpus piece."""
    for name, word, sigma, _ in load_pieces():
        shift, refinement = cubic.shift_to_bar(word, sigma)
        w = cubic.refine_static(word, refinement)
        moves = cubic.loop_moves(w, sigma)
        n = len(moves)
        k = n // 3
        tnb, frame0, tau = cubic.static_to_tnb(moves, shift)
        gluing = cubic.classify_gluing(tau)
        g = normalize_rotation(frame0)
        # normalized moves m_1 .. m_{k+1}: the glue move into cube 1, the
        # piece's interior moves, and the exit glue into the next piece
        piece = [tuple(int(x) for x in g @ np.array(moves[(shift + i) % n]))
                 for i in range(k + 1)]
        assert piece[0] == (0, 1, 0)  # T0 normalized to +y

        blocks = []
        parity = 0
        for ch in tnb[1:]:
            blocks.append(cubic.LETTER_WORDS[ch][parity])
            if blocks[-1] in cubic._FLIPS:
                parity ^= 1
        blocks.append(cubic.TORSION_WORDS[gluing.s])

        cube = [0, 0, 0]  # piece cube 1 normalized to the fundamental cube
        frame = cubic.Frame.make((0, 1, 0), (0, 0, 1))
        element = cx.IDENTITY
        assert cubic.pivot_chamber(cube, frame).element == element
        for j, block in enumerate(blocks):
            move = piece[j + 1]  # block j executes move m_{j+2}
            element = element * cx.word_to_isometry(block)
            cube = [a + b for a, b in zip(cube, move)]
            if j < len(blocks) - 1:
                frame = frame.transport(move)
                expected = cubic.pivot_chamber(cube, frame)
                assert cx.Chamber(element) == expected, (name, j, block)
        # after T(s) the pivot sits at the next piece's start pivot, with
        # the frame reset to that piece's canonical initial frame
        nxt = [tuple(moves[(shift + k + i) % n]) for i in range(k)]
        nf = cubic.initial_frame(nxt)
        nf_norm = cubic.Frame.make(
            tuple(int(x) for x in g @ np.array(nf.T)),
            tuple(int(x) for x in g @ np.array(nf.N)))
        expected = cubic.pivot_chamber(cube, nf_norm)
        assert cx.Chamber(element) == expected, name
        assert element == cx.word_to_isometry(
            cubic.translate_to_coxeter(tnb, gluing))


def test_translate_full_pipeline():
    for name, word, sigma, expected in load_pieces():
        res = cubic.translate_piece(word, sigma)
        w = res["coxeter_word"]
        assert cx.element_order(w) == 3, name
        triple = w * 3
        assert cx.is_closed(triple) and cx.is_self_avoiding(triple), name
        pts = cx.centroid_path(triple)
        from coxknot.knots import PolygonalKnot
        assert identify(PolygonalKnot(tuple(pts[:-1]))).label == expected, name
        # translation bookkeeping invariants
        k = len(res["tnb_word"])
        assert cx.d_count(w) == k  # N_D(g) = l_C(g_C)
        assert len(w) >= 2 * k
        assert len(w) == sum(cubic.block_lengths(res["tnb_word"],
                                                 res["gluing"]))
        # unshifted word is conjugate with the same knot
        wu = res["unshifted_word"]
        assert cx.element_order(wu) == 3
        pts2 = cx.centroid_path(wu * 3)
        assert identify(PolygonalKnot(tuple(pts2[:-1]))).label == expected, name


def test_translated_gallery_walks_the_cubes():
    for name, word, sigma, _ in load_pieces():
        res = cubic.translate_piece(word, sigma)
        w3 = res["coxeter_word"] * 3
        chambers = cx.gallery_of(w3).chambers
        cubes = []
        for ch in chambers:
            c = cx.chamber_cube(ch)
            if not cubes or cubes[-1] != c:
                cubes.append(c)
        n_cubes = 3 * len(res["tnb_word"])
        assert cubes[0] == cubes[-1], name
        assert len(cubes) - 1 == n_cubes, name
        assert len(set(cubes[:-1])) == n_cubes, name


def test_unshift_coxeter():
    res = cubic.translate_piece(*[TREFOIL[0],
                                  cubic.StaticRotation.parse(TREFOIL[1])])
    w = res["coxeter_word"]
    assert cubic.unshift_coxeter(w, 0) == w
    for off in (5, 13):
        assert cx.element_order(cubic.unshift_coxeter(w, off)) == 3


def test_pivot_chamber_fundamental():
    frame = cubic.Frame.make((0, 1, 0), (0, 0, 1))
    ch = cubic.pivot_chamber((0, 0, 0), frame)
    assert ch.element.is_identity
