"""Shared test helpers: independent oracles and synthetic fixtures.

The transform oracles here are deliberate transcriptions of the defining
summations, not the separable matrix form the library uses, so agreement is
meaningful.
"""

import itertools
import math

import numpy as np


def _c(k):
    return 1.0 / math.sqrt(2.0) if k == 0 else 1.0


def literal_forward(block):
    """Quadruple-sum forward transform, straight off the definition."""
    out = np.zeros((8, 8))
    for u in range(8):
        for v in range(8):
            total = 0.0
            for x in range(8):
                for y in range(8):
                    total += (
                        float(block[x][y])
                        * math.cos((2 * x + 1) * u * math.pi / 16)
                        * math.cos((2 * y + 1) * v * math.pi / 16)
                    )
            out[u, v] = 0.25 * _c(u) * _c(v) * total
    return out


def literal_inverse(coeffs):
    """Quadruple-sum inverse transform, straight off the definition."""
    out = np.zeros((8, 8))
    for x in range(8):
        for y in range(8):
            total = 0.0
            for u in range(8):
                for v in range(8):
                    total += (
                        _c(u)
                        * _c(v)
                        * float(coeffs[u][v])
                        * math.cos((2 * x + 1) * u * math.pi / 16)
                        * math.cos((2 * y + 1) * v * math.pi / 16)
                    )
            out[x, y] = 0.25 * total
    return out


def cosine_tensor():
    """T[u,v,x,y] such that F[u,v] = sum_xy T[u,v,x,y] f[x,y].

    A direct tensor transcription of the same definition, for bulk oracle
    use; the per-coefficient contraction is the literal double sum.
    """
    u = np.arange(8)
    x = np.arange(8)
    cos = np.cos((2 * x[None, :] + 1) * u[:, None] * np.pi / 16)
    c = np.ones(8)
    c[0] = 1.0 / np.sqrt(2.0)
    return 0.25 * np.einsum("u,v,ux,vy->uvxy", c, c, cos, cos)


def oracle_forward_many(blocks):
    return np.einsum("uvxy,kxy->kuv", cosine_tensor(), blocks, optimize=True)


def oracle_inverse_many(coeffs):
    # the inverse sum weights coefficients by the same C(u)C(v) cosines
    return np.einsum("uvxy,kuv->kxy", cosine_tensor(), coeffs, optimize=True)


def min_prefix_cost(freqs):
    """Cheapest weighted length over all prefix codes, by exhaustive search.

    Feasibility of a length assignment is exactly the Kraft sum <= 1.
    """
    n = len(freqs)
    if n == 1:
        return freqs[0]  # lone symbol still needs a 1-bit code
    max_len = n - 1
    scale = 1 << max_len
    best = math.inf
    for lengths in itertools.product(range(1, max_len + 1), repeat=n):
        if sum(scale >> l for l in lengths) <= scale:
            cost = sum(f * l for f, l in zip(freqs, lengths))
            best = min(best, cost)
    return best


def _bilinear(coarse, height, width):
    ys = np.linspace(0, coarse.shape[0] - 1, height)
    xs = np.linspace(0, coarse.shape[1] - 1, width)
    y0 = np.floor(ys).astype(int)
    x0 = np.floor(xs).astype(int)
    y1 = np.minimum(y0 + 1, coarse.shape[0] - 1)
    x1 = np.minimum(x0 + 1, coarse.shape[1] - 1)
    wy = (ys - y0)[:, None]
    wx = (xs - x0)[None, :]
    return (
        coarse[np.ix_(y0, x0)] * (1 - wy) * (1 - wx)
        + coarse[np.ix_(y0, x1)] * (1 - wy) * wx
        + coarse[np.ix_(y1, x0)] * wy * (1 - wx)
        + coarse[np.ix_(y1, x1)] * wy * wx
    )


def natural_cover(width, height, seed):
    """Photograph-like cover: smooth large-scale structure plus fine texture.

    Pixel range stays inside [16, 239] so block renders avoid clamping.
    """
    rng = np.random.default_rng(seed)
    coarse = rng.uniform(48.0, 208.0, (height // 16 + 2, width // 16 + 2))
    base = _bilinear(coarse, height, width)
    texture = rng.normal(0.0, 6.0, (height, width))
    texture = 0.25 * (
        texture
        + np.roll(texture, 1, axis=0)
        + np.roll(texture, 1, axis=1)
        + np.roll(texture, (1, 1), axis=(0, 1))
    )
    grain = rng.normal(0.0, 2.0, (height, width))
    img = np.clip(base + texture + grain, 16.0, 239.0)
    return img.astype(np.uint8)


def low_entropy_secret(width=192, height=195):
    """Deterministic few-level secret image; entropy well under 6 bits/symbol."""
    yy, xx = np.mgrid[0:height, 0:width]
    img = 20 + 32 * (((xx + yy) // 48) % 5)
    img = img + 3 * ((xx * 7 + yy * 13) % 97 == 0)
    return img.astype(np.uint8)


def shannon_entropy(data):
    """Bits per symbol of the byte distribution of data."""
    counts = np.bincount(np.frombuffer(bytes(data), dtype=np.uint8), minlength=256)
    p = counts[counts > 0] / len(data)
    return float(-(p * np.log2(p)).sum())
