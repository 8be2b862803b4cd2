"""8x8 block partitioning and the orthonormal 2-D DCT applied per block.

The transform is the matrix form of

    F(u,v) = 1/4 C(u)C(v) sum_x sum_y f(x,y) cos((2x+1)u pi/16) cos((2y+1)v pi/16)

with C(0) = 1/sqrt(2) and C(k) = 1 otherwise, i.e. F = M b M^T for the basis
matrix M below. All operations accept a single (8, 8) block or an (n, 8, 8)
stack and always evaluate through the same batched code path, so results are
bit-identical regardless of how work is grouped.
"""

import numpy as np

from .errors import NotBlockAligned

BLOCK = 8


def _basis_matrix():
    u = np.arange(BLOCK).reshape(-1, 1)
    x = np.arange(BLOCK).reshape(1, -1)
    m = 0.5 * np.cos((2 * x + 1) * u * np.pi / (2 * BLOCK))
    m[0, :] /= np.sqrt(2.0)
    return m


_M = _basis_matrix()
_MT = _M.T.copy()


def _batched(op, blocks):
    arr = np.asarray(blocks, dtype=np.float64)
    single = arr.ndim == 2
    if single:
        arr = arr.reshape(1, BLOCK, BLOCK)
    if arr.shape[-2:] != (BLOCK, BLOCK):
        raise ValueError(f"blocks must be {BLOCK}x{BLOCK}")
    out = op(arr)
    return out[0] if single else out


def round_half_away(values):
    """Round to nearest integer, halves away from zero (2.5 -> 3, -2.5 -> -3)."""
    values = np.asarray(values, dtype=np.float64)
    return np.trunc(values + np.copysign(0.5, values))


def partition(img):
    """Split an image into row-major 8x8 pixel blocks, shape (n, 8, 8)."""
    pixels = np.asarray(getattr(img, "pixels", img))
    h, w = pixels.shape
    if w % BLOCK or h % BLOCK:
        raise NotBlockAligned(f"{w}x{h} is not a multiple of {BLOCK}x{BLOCK}")
    grid = pixels.reshape(h // BLOCK, BLOCK, w // BLOCK, BLOCK)
    return grid.transpose(0, 2, 1, 3).reshape(-1, BLOCK, BLOCK).astype(np.float64)


def assemble(blocks, width, height):
    """Inverse of partition: row-major blocks back into an (height, width) array."""
    blocks = np.asarray(blocks)
    bw = width // BLOCK
    bh = height // BLOCK
    grid = blocks.reshape(bh, bw, BLOCK, BLOCK)
    return grid.transpose(0, 2, 1, 3).reshape(height, width)


def forward_dct(blocks):
    """Real DCT coefficients of one block or a stack of blocks."""
    return _batched(lambda a: _M @ a @ _MT, blocks)


def inverse_dct(coeffs):
    """Pixel-domain samples of one coefficient block or a stack."""
    return _batched(lambda a: _MT @ a @ _M, coeffs)


def quantize(coeffs):
    """Round real coefficients half-away-from-zero to integers."""
    return round_half_away(coeffs).astype(np.int64)


def dequantize(coeffs):
    """Exact widening of integer coefficients back to reals."""
    return np.asarray(coeffs, dtype=np.int64).astype(np.float64)
