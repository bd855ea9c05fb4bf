class RLZError(Exception):
    """Base class for all index errors."""


class BuildError(RLZError):
    pass


class MissingSymbol(RLZError):
    """A document symbol does not occur in the reference."""

    def __init__(self, position, symbol, doc=None):
        self.position = position
        self.symbol = symbol
        self.doc = doc
        where = f"position {position}" if doc is None else f"document {doc}, position {position}"
        super().__init__(f"symbol {chr(symbol)!r} at {where} does not occur in the reference")


class InvalidPattern(RLZError):
    pass


class OutOfRange(RLZError):
    pass


class MalformedFasta(RLZError):
    pass


class IndexFormatError(RLZError):
    """Base for unreadable index files."""


class BadMagic(IndexFormatError):
    pass


class VersionMismatch(IndexFormatError):
    pass


class ChecksumMismatch(IndexFormatError):
    pass
