"""FASTA/raw ingestion and the binary index file.

File layout (all integers little-endian)::

    "RLZI" | u32 version | u64 n, N, r, d, docs, sigma | sigma alphabet bytes
    | u64 section count | (u64 offset, u64 length) per section | sections
    | u64 checksum (blake2b-64 of every preceding byte)

Integer-array sections are ``u64 rows | u64 cols | u64 width`` followed by
row-major unsigned integers of ``width`` bytes.  Positions on disk are
0-based.
"""
from __future__ import annotations

import hashlib
import struct
from pathlib import Path

import numpy as np

from .errors import BadMagic, ChecksumMismatch, IndexFormatError, MalformedFasta, VersionMismatch
from .primary_index import PrimaryIndex, build_boundary_grid, build_r_sequence
from .query_engine import RLZIndex
from .reference_index import ReferenceIndex
from .rlz_parser import Parse, PhraseDict
from .secondary_index import build_source_grid

MAGIC = b"RLZI"
VERSION = 1

SECTIONS = (
    "reference", "sa", "lcp", "rev_sa", "rev_lcp",
    "parse", "documents", "dict_keys", "rdict_keys", "r_sequence",
    "boundary_grid", "source_grid",
)
REFERENCE_SECTIONS = SECTIONS[:5]


# ---------------------------------------------------------------- ingestion

def read_fasta(path) -> list[tuple[str, bytes]]:
    records = []
    name = None
    chunks: list[bytes] = []
    with open(path, "rb") as fh:
        for lineno, line in enumerate(fh, 1):
            if line.startswith(b">"):
                if name is not None:
                    records.append((name, b"".join(chunks)))
                name = line[1:].strip().decode("utf-8", "replace")
                chunks = []
            elif line.strip():
                if name is None:
                    raise MalformedFasta(f"{path}:{lineno}: sequence data before the first header")
                chunks.append(b"".join(line.split()).upper())
    if name is not None:
        records.append((name, b"".join(chunks)))
    if not records:
        raise MalformedFasta(f"{path}: no FASTA records")
    for rec_name, seq in records:
        if not seq:
            raise MalformedFasta(f"{path}: record {rec_name!r} has an empty sequence")
    return records


def read_raw(path) -> list[tuple[str, bytes]]:
    data = Path(path).read_bytes().rstrip(b"\r\n")
    return [(Path(path).stem, data)]


def ingest(paths, format: str = "fasta") -> list[tuple[str, bytes]]:
    if format not in ("fasta", "raw"):
        raise ValueError(f"unknown format {format!r}")
    reader = read_fasta if format == "fasta" else read_raw
    out = []
    for path in ([paths] if isinstance(paths, (str, Path)) else paths):
        out.extend(reader(path))
    return out


# ---------------------------------------------------------------- encoding

def _width(values: np.ndarray) -> int:
    top = int(values.max()) if values.size else 0
    if values.size and int(values.min()) < 0:
        raise IndexFormatError("negative value in an integer section")
    for w in (1, 2, 4):
        if top < 1 << (8 * w):
            return w
    return 8


def _int_section(values, width: int | None = None) -> bytes:
    a = np.asarray(values, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    width = width or _width(a)
    head = struct.pack("<QQQ", a.shape[0], a.shape[1], width)
    return head + a.astype(f"<u{width}").tobytes()


def _read_int_section(buf: bytes) -> np.ndarray:
    rows, cols, width = struct.unpack_from("<QQQ", buf)
    if width not in (1, 2, 4, 8) or 24 + rows * cols * width != len(buf):
        raise IndexFormatError("malformed integer section")
    a = np.frombuffer(buf, dtype=f"<u{width}", offset=24).astype(np.int64)
    return a.reshape(rows, cols)


def _documents_section(index: RLZIndex) -> bytes:
    names = [nm.encode("utf-8") for nm in index.names]
    counts = np.diff(index.parse.doc_phrase_start)
    table = np.column_stack([counts, index.parse.doc_lengths,
                             np.array([len(nm) for nm in names], dtype=np.int64)])
    return _int_section(table.reshape(-1, 3)) + b"".join(names)


def encode_sections(index: RLZIndex) -> list[tuple[str, bytes]]:
    ref = index.ref
    parse = index.parse
    pi = index.primary
    grid = pi.grid
    return [
        ("reference", ref.text.tobytes()),
        ("sa", _int_section(ref.fwd.sa)),
        ("lcp", _int_section(ref.fwd.lcp[1:])),
        ("rev_sa", _int_section(ref.rev.sa)),
        ("rev_lcp", _int_section(ref.rev.lcp[1:])),
        ("parse", _int_section(np.column_stack([parse.src - 1, parse.lens]).reshape(-1, 2), width=8)),
        ("documents", _documents_section(index)),
        ("dict_keys", _int_section(pi.dict.keys)),
        ("rdict_keys", _int_section(pi.rdict.keys)),
        ("r_sequence", _int_section(pi.rseq.syms)),
        ("boundary_grid", _int_section(np.column_stack([grid.phrase_by_x, grid.y_by_x - 1]).reshape(-1, 2))),
        ("source_grid", _int_section(index.sgrid.order)),
    ]


def section_sizes(index: RLZIndex) -> dict[str, int]:
    return {name: len(body) for name, body in encode_sections(index)}


def dumps(index: RLZIndex) -> bytes:
    sections = encode_sections(index)
    alphabet = index.ref.alphabet.tobytes()
    head = MAGIC + struct.pack("<I", VERSION)
    head += struct.pack("<6Q", index.n, index.N, index.r, index.d, index.parse.n_docs, len(alphabet))
    head += alphabet
    head += struct.pack("<Q", len(sections))
    offset = len(head) + 16 * len(sections)
    table = b""
    for _, body in sections:
        table += struct.pack("<QQ", offset, len(body))
        offset += len(body)
    blob = head + table + b"".join(body for _, body in sections)
    return blob + struct.pack("<Q", _checksum(blob))


def _checksum(data: bytes) -> int:
    return int.from_bytes(hashlib.blake2b(data, digest_size=8).digest(), "little")


def save(index: RLZIndex, path) -> int:
    blob = dumps(index)
    Path(path).write_bytes(blob)
    return len(blob)


# ---------------------------------------------------------------- decoding

def loads(blob: bytes) -> RLZIndex:
    if len(blob) < 4 or blob[:4] != MAGIC:
        raise BadMagic("not an RLZI index file")
    if len(blob) < 8 + 8:
        raise ChecksumMismatch("index file is truncated")
    (version,) = struct.unpack_from("<I", blob, 4)
    if version != VERSION:
        raise VersionMismatch(f"index version {version}, expected {VERSION}")
    body, (stored,) = blob[:-8], struct.unpack("<Q", blob[-8:])
    if _checksum(body) != stored:
        raise ChecksumMismatch("index checksum does not match contents")
    try:
        return _decode(body)
    except (struct.error, ValueError, IndexError) as exc:
        raise IndexFormatError(f"malformed index: {exc}") from exc


def _decode(body: bytes) -> RLZIndex:
    n, N, r, d, n_docs, sigma = struct.unpack_from("<6Q", body, 8)
    pos = 8 + 48 + sigma
    (count,) = struct.unpack_from("<Q", body, pos)
    if count != len(SECTIONS):
        raise IndexFormatError(f"expected {len(SECTIONS)} sections, found {count}")
    pos += 8
    raw = {}
    for name in SECTIONS:
        off, length = struct.unpack_from("<QQ", body, pos)
        pos += 16
        if off + length > len(body):
            raise IndexFormatError(f"section {name} out of bounds")
        raw[name] = body[off:off + length]
    ints = {k: _read_int_section(v) for k, v in raw.items() if k not in ("reference", "documents")}

    text = np.frombuffer(raw["reference"], dtype=np.uint8).copy()
    lcp = np.concatenate(([-1], ints["lcp"][:, 0]))
    rev_lcp = np.concatenate(([-1], ints["rev_lcp"][:, 0]))
    ref = ReferenceIndex.from_arrays(text, ints["sa"][:, 0], lcp, ints["rev_sa"][:, 0], rev_lcp)

    docs_buf = raw["documents"]
    rows, cols, width = struct.unpack_from("<QQQ", docs_buf)
    table_len = 24 + rows * cols * width
    table = _read_int_section(docs_buf[:table_len])
    names, cursor = [], table_len
    for name_len in table[:, 2].tolist():
        names.append(docs_buf[cursor:cursor + name_len].decode("utf-8"))
        cursor += name_len

    phrases = ints["parse"]
    parse = Parse.from_arrays(phrases[:, 0] + 1, phrases[:, 1], table[:, 0], table[:, 1])
    if (ref.n, parse.N, parse.r, parse.n_docs) != (n, N, r, n_docs):
        raise IndexFormatError("header counts disagree with section contents")
    pdict = PhraseDict(ints["dict_keys"][:, 0], ref.n)
    rdict = PhraseDict(ints["rdict_keys"][:, 0], ref.n)
    if pdict.d != d:
        raise IndexFormatError("dictionary size disagrees with header")

    r_pos = np.arange(parse.r, dtype=np.int64) + (parse.doc_of_phrase() - 1)
    bgrid = ints["boundary_grid"]
    rseq = build_r_sequence(ints["r_sequence"][:, 0], pdict.d, x_pos=r_pos[bgrid[:, 0]])
    primary = PrimaryIndex(ref, parse, pdict, rdict, rseq,
                           build_boundary_grid(bgrid[:, 0], bgrid[:, 1] + 1))
    sgrid = build_source_grid(parse, ints["source_grid"][:, 0])
    return RLZIndex(ref, primary, sgrid, names)


def load(path) -> RLZIndex:
    return loads(Path(path).read_bytes())

