"""Canonical Huffman coding over byte symbols, and the Bitstream carrier.

Codes are defined entirely by their lengths: codewords are assigned in
(length, symbol) order, so a 256-entry length array is the whole table.
"""

import heapq

import numpy as np

from .errors import (
    EmptyInput,
    InvalidCode,
    KraftViolation,
    SymbolNotInTable,
    TruncatedStream,
    WrongLength,
)

TABLE_BITS = 2048  # 256 symbols x 8-bit code length


class Bitstream:
    """Ordered bit sequence. Byte packing is MSB-first within each byte."""

    __slots__ = ("bits",)

    def __init__(self, bits=()):
        self.bits = np.asarray(bits, dtype=np.uint8).reshape(-1)

    @property
    def bit_length(self):
        return int(self.bits.size)

    @classmethod
    def from_string(cls, text):
        """Build from a '0'/'1' string, e.g. '010'."""
        if not text:
            return cls()
        return cls(np.frombuffer(text.encode("ascii"), dtype=np.uint8) - ord("0"))

    @classmethod
    def from_packed(cls, data, bit_length):
        """Unpack bit_length bits from MSB-first packed bytes."""
        bits = np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8))
        if bits.size < bit_length:
            raise TruncatedStream(f"need {bit_length} bits, have {bits.size}")
        return cls(bits[:bit_length])

    def pack(self):
        """MSB-first packed bytes, zero padded to a whole byte."""
        return np.packbits(self.bits).tobytes()

    def to_string(self):
        return "".join("01"[b] for b in self.bits.tolist())

    @staticmethod
    def concat(parts):
        arrays = [p.bits for p in parts]
        if not arrays:
            return Bitstream()
        return Bitstream(np.concatenate(arrays))

    def __len__(self):
        return self.bits.size

    def __getitem__(self, key):
        if isinstance(key, slice):
            return Bitstream(self.bits[key])
        return int(self.bits[key])

    def __eq__(self, other):
        if not isinstance(other, Bitstream):
            return NotImplemented
        return self.bits.size == other.bits.size and bool(np.all(self.bits == other.bits))

    def __repr__(self):
        head = self.to_string() if self.bit_length <= 64 else self.to_string()[:61] + "..."
        return f"Bitstream({self.bit_length} bits: {head})"


class HuffmanTable:
    """Canonical prefix code over the 256 byte symbols, held as code lengths.

    code_lengths[s] == 0 means symbol s has no codeword.
    """

    def __init__(self, code_lengths):
        lengths = np.asarray(code_lengths, dtype=np.int64).reshape(-1)
        if lengths.shape != (256,):
            raise ValueError("code_lengths must have 256 entries")
        if lengths.min() < 0 or lengths.max() > 255:
            raise ValueError("code lengths must be in [0, 255]")
        self.code_lengths = lengths
        self._build_codes()

    def _build_codes(self):
        # canonical assignment: walk symbols in (length, symbol) order
        order = sorted(
            (int(l), s) for s, l in enumerate(self.code_lengths.tolist()) if l > 0
        )
        self.codewords = {}  # symbol -> (code value, length)
        self._first_code = {}  # length -> first canonical code of that length
        self._first_index = {}  # length -> index into _order of that first code
        self._order = [s for _, s in order]
        code = 0
        prev_len = order[0][0] if order else 0
        for idx, (length, symbol) in enumerate(order):
            code <<= length - prev_len
            if length not in self._first_code:
                self._first_code[length] = code
                self._first_index[length] = idx
            self.codewords[symbol] = (code, length)
            code += 1
            prev_len = length
        self.max_length = order[-1][0] if order else 0

    def bit_string(self, symbol):
        """Codeword of symbol as a '0'/'1' string."""
        code, length = self.codewords[symbol]
        return format(code, f"0{length}b")

    def __eq__(self, other):
        if not isinstance(other, HuffmanTable):
            return NotImplemented
        return bool(np.all(self.code_lengths == other.code_lengths))

    def __repr__(self):
        present = int(np.count_nonzero(self.code_lengths))
        return f"HuffmanTable({present} symbols, max length {self.max_length})"


def build_table(data):
    """Optimal prefix code lengths for the byte frequencies of data, canonicalized.

    A single distinct symbol gets code length 1 so it still occupies bits.
    """
    data = bytes(data)
    if not data:
        raise EmptyInput("cannot build a code from empty data")
    freqs = np.bincount(np.frombuffer(data, dtype=np.uint8), minlength=256)
    lengths = np.zeros(256, dtype=np.int64)
    present = np.flatnonzero(freqs)
    if present.size == 1:
        lengths[present[0]] = 1
        return HuffmanTable(lengths)
    # heap entries: (weight, leaf-before-internal, symbol or creation order, depth map)
    heap = [(int(freqs[s]), 0, int(s), {int(s): 0}) for s in present]
    heapq.heapify(heap)
    counter = 0
    while len(heap) > 1:
        w1, _, _, d1 = heapq.heappop(heap)
        w2, _, _, d2 = heapq.heappop(heap)
        merged = {s: d + 1 for s, d in d1.items()}
        merged.update({s: d + 1 for s, d in d2.items()})
        heapq.heappush(heap, (w1 + w2, 1, counter, merged))
        counter += 1
    for symbol, depth in heap[0][3].items():
        lengths[symbol] = depth
    return HuffmanTable(lengths)


def encode(data, table):
    """Concatenate canonical codewords for data in input order."""
    data = bytes(data)
    if not data:
        return Bitstream()
    used = np.bincount(np.frombuffer(data, dtype=np.uint8), minlength=256) > 0
    missing = np.flatnonzero(used & (table.code_lengths == 0))
    if missing.size:
        raise SymbolNotInTable(f"symbol 0x{missing[0]:02x} has no codeword")
    strings = [None] * 256
    for s in np.flatnonzero(used):
        strings[s] = table.bit_string(int(s))
    joined = "".join(map(strings.__getitem__, data))
    return Bitstream.from_string(joined)


def decode(bits, table, symbol_count):
    """Decode exactly symbol_count symbols from a canonical-code bitstream."""
    if symbol_count == 0:
        return b""
    if not table.codewords:
        raise InvalidCode("empty table cannot decode symbols")
    first_code = table._first_code
    first_index = table._first_index
    order = table._order
    counts = {}
    for _, length in table.codewords.values():
        counts[length] = counts.get(length, 0) + 1
    max_length = table.max_length
    out = bytearray()
    code = 0
    length = 0
    for bit in bits.bits.tolist():
        code = (code << 1) | bit
        length += 1
        n = counts.get(length)
        if n is not None:
            offset = code - first_code[length]
            if 0 <= offset < n:
                out.append(order[first_index[length] + offset])
                if len(out) == symbol_count:
                    return bytes(out)
                code = 0
                length = 0
                continue
        if length >= max_length:
            raise InvalidCode(f"no codeword matches prefix of length {length}")
    raise TruncatedStream(
        f"stream ended after {len(out)} of {symbol_count} symbols"
    )


def serialize_table(table):
    """256 code lengths, each an 8-bit big-endian integer, symbol order 0..255."""
    lengths = table.code_lengths.astype(np.uint8)
    return Bitstream(np.unpackbits(lengths))


def parse_table(bits):
    """Inverse of serialize_table; rejects length sets that overfill the code space."""
    if bits.bit_length != TABLE_BITS:
        raise WrongLength(f"expected {TABLE_BITS} bits, got {bits.bit_length}")
    lengths = np.packbits(bits.bits).astype(np.int64)
    nonzero = lengths[lengths > 0]
    if nonzero.size >= 2:
        # Kraft sum over 2^-len, computed exactly in integers
        top = int(nonzero.max())
        total = sum(1 << (top - int(l)) for l in nonzero)
        if total > (1 << top):
            raise KraftViolation("code lengths overfill the prefix code space")
    return HuffmanTable(lengths)
