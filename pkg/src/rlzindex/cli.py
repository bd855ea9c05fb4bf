"""Command-line interface: ``rlzi build|query|extract|stats``.

Exit codes: 0 success, 1 usage error, 2 data error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import RLZError
from .sequence import to_text

EXIT_USAGE = 1
EXIT_DATA = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rlzi", description="Relative Lempel-Ziv self-index")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="index a reference and a collection")
    b.add_argument("--ref", required=True)
    b.add_argument("--text", required=True, nargs="+")
    b.add_argument("--format", choices=("fasta", "raw"), default="fasta")
    b.add_argument("--out", required=True)
    b.add_argument("--augment-reference", action="store_true",
                   help="append collection symbols missing from the reference")
    b.add_argument("--workers", type=int, default=1)

    q = sub.add_parser("query", help="locate patterns")
    q.add_argument("--index", required=True)
    src = q.add_mutually_exclusive_group(required=True)
    src.add_argument("--pattern")
    src.add_argument("--patterns", help="file with one pattern per line")
    q.add_argument("--count-only", action="store_true")
    q.add_argument("--json", action="store_true")

    e = sub.add_parser("extract", help="print a substring of a document")
    e.add_argument("--index", required=True)
    e.add_argument("--doc", required=True, type=int)
    e.add_argument("--start", required=True, type=int)
    e.add_argument("--len", required=True, type=int, dest="length")

    s = sub.add_parser("stats", help="print index statistics")
    s.add_argument("--index", required=True)
    return parser


def _cmd_build(args, out, err) -> int:
    from .index_io import ingest, save
    from .query_engine import RLZIndex

    ref_records = ingest([args.ref], args.format)
    reference = b"".join(seq for _, seq in ref_records)
    docs = ingest(args.text, args.format)
    if args.augment_reference:
        present = set(reference)
        missing = sorted({c for _, seq in docs for c in seq} - present)
        if missing:
            reference += bytes(missing)
            print(f"augmented reference with {len(missing)} symbol(s): "
                  + " ".join(repr(chr(c)) for c in missing), file=err)
    index = RLZIndex.build(reference, [seq for _, seq in docs],
                           names=[name for name, _ in docs], workers=args.workers)
    size = save(index, args.out)
    print(f"wrote {args.out}: n={index.n} N={index.N} r={index.r} d={index.d} bytes={size}", file=err)
    return 0


def _read_patterns(args) -> list[str]:
    if args.pattern is not None:
        return [args.pattern]
    with open(args.patterns, encoding="latin-1") as fh:
        return [line.rstrip("\r\n") for line in fh if line.strip()]


def _cmd_query(args, out, err) -> int:
    from .index_io import load

    index = load(args.index)
    patterns = _read_patterns(args)
    records = []
    for pat in patterns:
        res = index.locate(pat)
        if args.count_only:
            occ0, occ1, occ2 = res.counts
            if args.json:
                records.append({"pattern": pat, "ref": occ0, "primary": occ1, "secondary": occ2})
            else:
                print(f"{pat}\t{occ0}\t{occ1}\t{occ2}", file=out)
            continue
        hits = [("G", pos, "ref") for pos in res.ref_hits]
        hits += [(doc, off, kind) for doc, off, kind in res.text_hits]
        if args.json:
            records.append({"pattern": pat,
                            "hits": [{"doc": d, "offset": o, "kind": k} for d, o, k in hits]})
        else:
            for doc, off, kind in hits:
                print(f"{pat}\t{doc}:{off}\t{kind}", file=out)
    if args.json:
        json.dump(records, out, indent=None)
        out.write("\n")
    return 0


def _cmd_extract(args, out, err) -> int:
    from .index_io import load

    index = load(args.index)
    print(to_text(index.extract(args.doc, args.start, args.length)), file=out)
    return 0


def _cmd_stats(args, out, err) -> int:
    from .index_io import REFERENCE_SECTIONS, load

    index = load(args.index)
    st = index.stats()
    print(f"n={st['n']} N={st['N']} r={st['r']} d={st['d']} docs={st['docs']} sigma={st['sigma']}", file=out)
    pl = st["phrase_length"]
    print(f"phrase_length min={pl['min']} max={pl['max']} mean={pl['mean']:.2f} median={pl['median']:.1f}",
          file=out)
    collection = 0
    for name, size in st["sections"].items():
        print(f"section {name} {size}", file=out)
        if name not in REFERENCE_SECTIONS:
            collection += size
    ratio = collection / st["N"] if st["N"] else 0.0
    print(f"collection_sections {collection} raw_collection {st['N']} ratio {ratio:.4f}", file=out)
    return 0


COMMANDS = {"build": _cmd_build, "query": _cmd_query, "extract": _cmd_extract, "stats": _cmd_stats}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out, err)
    except (RLZError, OSError, ValueError) as exc:
        print(f"rlzi: {type(exc).__name__}: {exc}", file=err)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
