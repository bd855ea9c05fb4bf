"""Relative Lempel-Ziv self-index for collections of similar sequences."""
from ._accel import NUMBA_ENABLED, backend_name
from .errors import (BadMagic, BuildError, ChecksumMismatch, IndexFormatError, InvalidPattern,
                     MalformedFasta, MissingSymbol, OutOfRange, RLZError, VersionMismatch)
from .query_engine import PRIMARY, SECONDARY, QueryResult, RLZIndex
from .reference_index import EMPTY, SuffixInterval, build_reference_index
from .rlz_parser import Phrase, build_dict, parse_collection, phrase_key, rlz_parse

__version__ = "0.1.0"
