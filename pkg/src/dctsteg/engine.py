"""Embedding engine: carry frame bits in coefficient LSBs and recover them.

Two output modes. Container mode keeps the modified integer coefficients as
the stego artifact itself, which makes recovery lossless by construction.
spatial8 mode renders an ordinary 8-bit image and runs a verify/adjust loop
per payload block, because rounding pixels to integers perturbs coefficient
LSBs; residual errors are reported honestly instead of hidden.
"""

import struct
from dataclasses import dataclass

import numpy as np

from . import blockdct, framing, huffman, metrics
from .blockdct import BLOCK, round_half_away
from .errors import (
    BadHeader,
    BadMagic,
    NotBlockAligned,
    PayloadTooLarge,
    Truncated,
)
from .image_io import Image8

CONTAINER_MAGIC = 0x44535431  # file magic "DST1"
COEFF_MIN = -4096
COEFF_MAX = 4095
FRAME_OVERHEAD_BITS = framing.HEADER_BITS + framing.TABLE_BITS

_CONTAINER_HEADER = struct.Struct(">IHH")


class StegoContainer:
    """Quantized coefficient blocks of a stego image, the lossless artifact.

    Wire format (.dsc): magic u32 0x44535431, width u16, height u16, then one
    16-bit big-endian two's-complement integer per coefficient, blocks
    row-major and coefficients row-major within each block.
    """

    def __init__(self, width, height, coeffs):
        if width % BLOCK or height % BLOCK:
            raise NotBlockAligned(f"{width}x{height} is not a multiple of 8")
        coeffs = np.asarray(coeffs, dtype=np.int64)
        expected = (width // BLOCK) * (height // BLOCK)
        if coeffs.shape != (expected, BLOCK, BLOCK):
            raise ValueError(
                f"expected {expected} coefficient blocks, got shape {coeffs.shape}"
            )
        if coeffs.size and (coeffs.min() < COEFF_MIN or coeffs.max() > COEFF_MAX):
            raise ValueError(f"coefficients must lie in [{COEFF_MIN}, {COEFF_MAX}]")
        self.width = int(width)
        self.height = int(height)
        self.coeffs = coeffs

    def to_bytes(self):
        header = _CONTAINER_HEADER.pack(CONTAINER_MAGIC, self.width, self.height)
        return header + self.coeffs.astype(">i2").tobytes()

    @classmethod
    def from_bytes(cls, data):
        data = bytes(data)
        if len(data) < _CONTAINER_HEADER.size:
            raise Truncated("container shorter than its fixed header")
        magic, width, height = _CONTAINER_HEADER.unpack_from(data)
        if magic != CONTAINER_MAGIC:
            raise BadMagic(f"container magic 0x{magic:08x} != 0x{CONTAINER_MAGIC:08x}")
        if width == 0 or height == 0:
            raise BadHeader("container declares zero dimensions")
        if width % BLOCK or height % BLOCK:
            raise NotBlockAligned(f"{width}x{height} is not a multiple of 8")
        count = width * height
        offset = _CONTAINER_HEADER.size
        if len(data) - offset < 2 * count:
            raise Truncated(f"need {2 * count} coefficient bytes, have {len(data) - offset}")
        coeffs = np.frombuffer(data, dtype=">i2", count=count, offset=offset).astype(np.int64)
        if coeffs.size and (coeffs.min() < COEFF_MIN or coeffs.max() > COEFF_MAX):
            raise BadHeader(f"coefficient outside [{COEFF_MIN}, {COEFF_MAX}]")
        return cls(width, height, coeffs.reshape(-1, BLOCK, BLOCK))

    def __eq__(self, other):
        if not isinstance(other, StegoContainer):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and bool(np.array_equal(self.coeffs, other.coeffs))
        )

    def __repr__(self):
        return f"StegoContainer({self.width}x{self.height}, {len(self.coeffs)} blocks)"


@dataclass(frozen=True)
class EmbedReport:
    """What an embed call did: block usage, payload size, render fidelity."""

    blocks_used: int
    payload_bits: int
    psnr_db: float
    spatial_mode_bit_errors: int


def set_lsb(c, b):
    """Replace two's-complement bit 0 of c with b; works on ints and arrays."""
    return (c & ~1) | b


def get_lsb(c):
    """Two's-complement bit 0 of c."""
    return c & 1


def capacity(width, height):
    """Payload bits a cover can carry: one per coefficient minus frame overhead.

    The 128-bit header and 2048-bit code table always ride along, so small
    covers bottom out at zero.
    """
    if width % BLOCK or height % BLOCK:
        raise NotBlockAligned(f"{width}x{height} is not a multiple of 8")
    return max(0, width * height - FRAME_OVERHEAD_BITS)


def _render_blocks(coeffs):
    """Integer coefficient blocks to 8-bit pixel values (still float dtype)."""
    samples = blockdct.inverse_dct(blockdct.dequantize(coeffs))
    return np.clip(round_half_away(samples), 0.0, 255.0)


def _recovered_lsb_mismatch(cands, bits):
    """Render candidate blocks, re-transform, and compare LSBs against bits.

    Every parity decision in the library flows through this one batched code
    path: reordering float operations can flip a coefficient sitting on a
    rounding boundary, so verify and extract must share the same pipeline.
    Returns (mismatch masks (k,8,8), pixels (k,8,8) float).
    """
    pixels = _render_blocks(cands)
    recovered = blockdct.quantize(blockdct.forward_dct(pixels))
    return get_lsb(recovered) != bits[None, :, :], pixels


_POOL_COEFFS = 7  # offenders enumerated per round (3^7 - 1 = 2186 patterns)
_POOL_CAP = 2048  # candidate perturbations evaluated per round
_MIN_FANOUT = 7   # re-anchor where the next offender set is at least this big
_MAX_ROUNDS = 16

_PATTERNS = {}


def _sign_patterns(n):
    """All nonzero {0, +2, -2} rows over n slots, sparsest first, capped."""
    if n not in _PATTERNS:
        k = np.arange(1, 3 ** n)
        digits = (k[:, None] // 3 ** np.arange(n)) % 3
        values = np.where(digits == 0, 0, np.where(digits == 1, 2, -2)).astype(np.int64)
        order = np.argsort((digits != 0).sum(axis=1), kind="stable")
        _PATTERNS[n] = values[order][:_POOL_CAP]
    return _PATTERNS[n]


def verify_adjust_block(coeffs, bits):
    """Render one payload block to 8-bit pixels that reproduce bits on re-DCT.

    coeffs must already carry bits in its LSBs. Pixel rounding re-rolls the
    recovered parity of all 64 coefficients at once, so there is no way to
    repair one coefficient in isolation; instead each round batch-renders
    candidate +-2 nudges of the currently offending coefficients (LSBs are
    preserved by even steps) and commits the sparsest clean candidate. When
    no candidate is clean the search re-anchors on an unseen candidate whose
    own offender set is wide, keeping later rounds' candidate pools large.
    At most 16 rounds; returns (pixels, residual_errors) with failures
    reported rather than raised.
    """
    cur = np.asarray(coeffs, dtype=np.int64).reshape(BLOCK, BLOCK).copy()
    bits = np.asarray(bits, dtype=np.int64).reshape(BLOCK, BLOCK)
    seen = {cur.tobytes()}
    best_pixels = None
    best_residual = BLOCK * BLOCK + 1
    masks, pixels = _recovered_lsb_mismatch(cur[None], bits)
    mask, pix = masks[0], pixels[0]
    for round_no in range(_MAX_ROUNDS + 1):
        wrong = int(mask.sum())
        if wrong < best_residual:
            best_residual = wrong
            best_pixels = pix
        if wrong == 0 or round_no == _MAX_ROUNDS:
            break
        offenders = np.flatnonzero(mask.ravel())[:_POOL_COEFFS]
        rows = _sign_patterns(len(offenders))
        pool = np.zeros((len(rows), BLOCK * BLOCK), dtype=np.int64)
        pool[:, offenders] = rows
        cands = (cur.reshape(-1)[None, :] + pool).reshape(-1, BLOCK, BLOCK)
        masks, pixels = _recovered_lsb_mismatch(cands, bits)
        counts = masks.sum(axis=(1, 2))
        clean = np.flatnonzero(counts == 0)
        if clean.size:
            best_residual = 0
            best_pixels = pixels[clean[0]]
            break
        chosen = None
        for k in np.flatnonzero(counts >= _MIN_FANOUT):
            if cands[k].tobytes() not in seen:
                chosen = int(k)
                break
        if chosen is None:
            for k in np.argsort(-counts, kind="stable"):
                if cands[int(k)].tobytes() not in seen:
                    chosen = int(k)
                    break
        if chosen is None:
            break
        cur = cands[chosen]
        seen.add(cur.tobytes())
        mask, pix = masks[chosen], pixels[chosen]
    return best_pixels.astype(np.uint8), best_residual


def embed(cover, frame, mode="container"):
    """Embed a payload frame into a cover image.

    Bit group i of the frame lands in the LSBs of coefficient block i; blocks
    past the frame keep their plain quantized coefficients. Returns
    (StegoContainer, report) in container mode or (Image8, report) in
    spatial8 mode.
    """
    if mode not in ("container", "spatial8"):
        raise ValueError(f"unknown mode {mode!r}")
    pixel_blocks = blockdct.partition(cover)
    slots = pixel_blocks.shape[0] * BLOCK * BLOCK
    if frame.bit_length > slots:
        raise PayloadTooLarge(
            f"frame of {frame.bit_length} bits exceeds {slots} coefficient slots"
        )
    groups = framing.chunk_bits(frame)
    used = groups.shape[0]
    coeffs = blockdct.quantize(blockdct.forward_dct(pixel_blocks))
    bit_blocks = groups.reshape(used, BLOCK, BLOCK).astype(np.int64)
    coeffs[:used] = set_lsb(coeffs[:used], bit_blocks)
    payload_bits = frame.header.payload_bit_length
    if mode == "container":
        container = StegoContainer(cover.width, cover.height, coeffs)
        score = metrics.psnr(cover, render(container))
        return container, EmbedReport(used, payload_bits, score.psnr_db, 0)
    rendered = _render_blocks(coeffs)
    residual = 0
    for i in range(used):
        pixels, errors = verify_adjust_block(coeffs[i], bit_blocks[i])
        rendered[i] = pixels
        residual += errors
    stego = Image8(blockdct.assemble(rendered, cover.width, cover.height).astype(np.uint8))
    score = metrics.psnr(cover, stego)
    return stego, EmbedReport(used, payload_bits, score.psnr_db, residual)


def render(container):
    """8-bit view of a container: dequantize, inverse transform, round, clamp.

    For viewing and fidelity scoring; extraction in container mode reads the
    coefficients directly.
    """
    blocks = _render_blocks(container.coeffs)
    pixels = blockdct.assemble(blocks, container.width, container.height)
    return Image8(pixels.astype(np.uint8))


def extract(stego):
    """Recover (secret bytes, header) from a container or an 8-bit stego image."""
    if isinstance(stego, StegoContainer):
        coeffs = stego.coeffs
    else:
        blocks = blockdct.partition(stego)
        coeffs = blockdct.quantize(blockdct.forward_dct(blocks))
    bits = huffman.Bitstream(get_lsb(coeffs).reshape(-1).astype(np.uint8))
    header, table, payload = framing.parse_frame(bits)
    secret = huffman.decode(payload, table, header.symbol_count)
    return secret, header
