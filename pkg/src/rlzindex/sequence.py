from __future__ import annotations

import numpy as np


def as_symbols(seq) -> np.ndarray:
    """Coerce bytes, str (latin-1), or an integer sequence to a uint8 array."""
    if isinstance(seq, np.ndarray):
        if seq.dtype == np.uint8:
            return seq
        if seq.size and (seq.min() < 0 or seq.max() > 255):
            raise ValueError("symbol codes must lie in [0, 255]")
        return seq.astype(np.uint8)
    if isinstance(seq, str):
        seq = seq.encode("latin-1")
    if isinstance(seq, (bytes, bytearray, memoryview)):
        return np.frombuffer(bytes(seq), dtype=np.uint8).copy()
    return as_symbols(np.asarray(list(seq), dtype=np.int64))


def to_text(symbols) -> str:
    return as_symbols(symbols).tobytes().decode("latin-1")
