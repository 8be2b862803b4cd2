"""Exception types raised across the library.

Everything subclasses StegError so callers can catch one base class.
"""


class StegError(Exception):
    """Base class for all library errors."""


class BadMagic(StegError):
    """Input does not start with the expected magic value."""


class BadHeader(StegError):
    """Header fields are malformed (non-numeric, nonpositive, ...)."""


class UnsupportedMaxval(StegError):
    """PGM maxval is neither 255 nor 65535."""


class Truncated(StegError):
    """Fewer raw samples than the header declares."""


class NotBlockAligned(StegError):
    """Image dimensions are not multiples of 8."""


class EmptyInput(StegError):
    """Operation requires nonempty input data."""


class SymbolNotInTable(StegError):
    """A byte has no codeword in the Huffman table."""


class InvalidCode(StegError):
    """Bit pattern does not correspond to any codeword."""


class TruncatedStream(StegError):
    """Bitstream ended mid-codeword or before the promised symbol count."""


class WrongLength(StegError):
    """Serialized table is not exactly 2048 bits."""


class KraftViolation(StegError):
    """Code lengths cannot form a prefix code."""


class DimensionMismatch(StegError):
    """Operands have different dimensions."""


class UnsupportedVersion(StegError):
    """Frame version is not understood."""


class TruncatedFrame(StegError):
    """Frame holds fewer bits than its header promises."""


class PayloadTooLarge(StegError):
    """Frame does not fit in the cover's coefficient slots."""
