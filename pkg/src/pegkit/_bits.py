"""Vector kernels over arrays of position codes.

Codes travel as int64 numpy arrays (every board fits in 37 bits, so the
sign bit is never touched).  Symmetry transforms go through the per-board
byte tables: eight table lookups replace a 37-step bit loop, which is what
makes canonicalizing hundred-million-code levels practical.
"""

from __future__ import annotations

import numpy as np

_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)


def mix64(codes):
    """splitmix64 finalizer; spreads codes for hash partitioning."""
    x = np.asarray(codes, dtype=np.uint64).copy()
    x ^= x >> np.uint64(30)
    x *= _M1
    x ^= x >> np.uint64(27)
    x *= _M2
    x ^= x >> np.uint64(31)
    return x


def popcount(codes):
    return np.bitwise_count(np.asarray(codes, dtype=np.uint64)).astype(np.int64)


def transform_codes(board, codes, g):
    """Image of each code under group element g."""
    t = board.byte_tables[g]
    out = t[0][codes & 0xFF]
    for b in range(1, t.shape[0]):
        out |= t[b][(codes >> (8 * b)) & 0xFF]
    return out


def mincode_codes(board, codes):
    """Canonical (smallest-transform) code of each entry."""
    best = codes.copy()
    for g in range(1, board.group_order):
        np.minimum(best, transform_codes(board, codes, g), out=best)
    return best


def stabilizer_bits(board, codes):
    """Per-code bit mask of the group elements fixing it (bit g set when
    element g fixes the code); bit 0 is always set."""
    bits = np.ones(len(codes), dtype=np.uint16)
    for g in range(1, board.group_order):
        hit = transform_codes(board, codes, g) == codes
        bits |= hit.astype(np.uint16) << np.uint16(g)
    return bits


def chunks(a, size):
    for i in range(0, len(a), size):
        yield a[i : i + size]
