"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import sys

from . import coxeter as cx
from . import cubic
from .report import gallery_report, geometry_document
from .search import SearchConfig, enumerate_records, find_minimum


class CliError(Exception):
    pass


def _print_report(report: dict):
    order = report["order"]
    for key in ("word", "repeat", "is_closed", "order", "is_self_avoiding",
                "d_count", "cube_visits", "knot", "knot_certainty",
                "reduced_word"):
        value = report[key]
        print(f"{key}: {value if value is not None else '-'}")
    return order


def cmd_verify(args):
    _print_report(gallery_report(args.word, args.repeat, args.seed))


def cmd_order(args):
    print(cx.element_order(args.word))


def cmd_reduce(args):
    print(cx.reduce_word(args.word))


def cmd_identify(args):
    report = gallery_report(args.word, args.repeat, args.seed)
    if not report["is_closed"]:
        raise CliError("gallery is not closed; no knot to identify")
    if not report["is_self_avoiding"]:
        raise CliError("gallery is not self-avoiding; no knot to identify")
    print(f"{report['knot']} ({report['knot_certainty']})")


def cmd_search(args):
    config = SearchConfig(mode=args.mode, max_piece_length=args.max_piece_len,
                          max_d_count=args.max_d, seed=args.seed,
                          workers=args.workers,
                          checkpoint_dir=args.checkpoint_dir)
    if args.minimum:
        record = find_minimum(config)
        print(record.line() if record else "none")
        return
    for record in enumerate_records(config):
        print(record.line())


def parse_piece_file(path: str) -> dict:
    """Line-oriented piece file: name, static word, sigma, optional
    ``shift``/``refinement`` overrides (``key: value`` lines)."""
    fields = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if ":" not in line:
                raise CliError(f"bad piece line: {line!r}")
            key, value = line.split(":", 1)
            fields[key.strip().lower()] = value.strip()
    for needed in ("name", "static", "sigma"):
        if needed not in fields:
            raise CliError(f"piece file missing field {needed!r}")
    return fields


def cmd_translate(args):
    piece = parse_piece_file(args.piece)
    sigma = cubic.StaticRotation.parse(piece["sigma"])
    result = cubic.translate_piece(piece["static"], sigma,
                                   max_refine=int(piece.get("max_refine", 4)))
    word = result["unshifted_word"]
    print(f"name: {piece['name']}")
    print(f"shift: {result['shift']}  refinement: {result['refinement']}")
    print(f"tnb_word: {result['tnb_word']}")
    print(f"tau: {result['tau'].describe() or 'identity'}")
    print(f"gluing: {result['gluing'].kind} s={result['gluing'].s}")
    print(f"coxeter_word: {result['coxeter_word']}")
    print(f"unshifted_word: {word}")
    report = gallery_report(word, 3, args.seed)
    _print_report(report)


def cmd_export(args):
    doc = geometry_document(args.word, args.repeat, args.seed)
    with open(args.out, "w") as fh:
        json.dump(doc, fh, indent=1)
    print(f"wrote {args.out} ({len(doc['chambers'])} chambers)")


def cmd_serve(args):
    import uvicorn

    from .service import app
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="coxknot",
        description="Gallery knots in the B3-tilde Coxeter tessellation")
    sub = p.add_subparsers(dest="command", required=True)

    def word_cmd(name, fn, help_, repeat=False):
        c = sub.add_parser(name, help=help_)
        c.add_argument("--word", required=True)
        if repeat:
            c.add_argument("--repeat", type=int, default=1)
        c.add_argument("--seed", type=int, default=0)
        c.set_defaults(fn=fn)
        return c

    word_cmd("verify", cmd_verify, "full gallery report", repeat=True)
    word_cmd("order", cmd_order, "element order of a word")
    word_cmd("reduce", cmd_reduce, "lex-least reduced word")
    word_cmd("identify", cmd_identify, "knot type of a closed gallery",
             repeat=True)

    c = sub.add_parser("search", help="enumerate closed / order-3 galleries")
    c.add_argument("--mode", choices=("closed", "order3"), required=True)
    c.add_argument("--max-piece-len", type=int, required=True)
    c.add_argument("--max-d", type=int, default=None)
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--checkpoint-dir", default=None)
    c.add_argument("--minimum", action="store_true",
                   help="print only the first nontrivially-knotted record")
    c.set_defaults(fn=cmd_search)

    c = sub.add_parser("translate", help="compile a cubic piece file")
    c.add_argument("--piece", required=True)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(fn=cmd_translate)

    c = sub.add_parser("export", help="write a GeometryDocument JSON")
    c.add_argument("--word", required=True)
    c.add_argument("--repeat", type=int, default=1)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out", required=True)
    c.set_defaults(fn=cmd_export)

    c = sub.add_parser("serve", help="run the HTTP service")
    c.add_argument("--port", type=int, default=8000)
    c.add_argument("--host", default="127.0.0.1")
    c.set_defaults(fn=cmd_serve)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.fn(args)
    except (cx.WordError, cubic.CubicError, CliError, ValueError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
