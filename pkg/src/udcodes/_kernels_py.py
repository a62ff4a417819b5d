"""Pure-Python (numpy) versions of the enumeration kernels."""
from __future__ import annotations

from typing import Optional, Sequence, Tuple

import numpy as np

IMPLEMENTATION = "python"

# rows of the pairwise block; bounds the temporary at _BLOCK * N * n int64s
_BLOCK = 256


def tuple_sum_keys(user_keys: Sequence[np.ndarray]) -> np.ndarray:
    """Sum keys of every tuple in row-major order (last user varies fastest)."""
    out = np.zeros(1, dtype=np.int64)
    for keys in user_keys:
        keys = np.asarray(keys, dtype=np.int64)
        out = (out[:, None] + keys[None, :]).ravel()
    return out


def find_collision(user_keys: Sequence[np.ndarray]) -> Optional[Tuple[int, int]]:
    """Flat indices ``(i, j)``, i < j, of the first two tuples with equal sum key."""
    keys = tuple_sum_keys(user_keys)
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    dup = np.flatnonzero(sorted_keys[1:] == sorted_keys[:-1])
    if dup.size == 0:
        return None
    # among all duplicate pairs report the one whose later index is smallest,
    # which matches a sequential scan with early exit
    later = order[dup + 1]
    pos = int(np.argmin(later))
    j = int(later[pos])
    target = keys[j]
    i = int(np.flatnonzero(keys[:j] == target)[0])
    return i, j


def min_l1_pairwise(points: np.ndarray) -> int:
    """Minimum L1 distance over distinct row pairs."""
    p = np.asarray(points, dtype=np.int64)
    N = p.shape[0]
    if N < 2:
        raise ValueError("need at least two points")
    best = None
    for start in range(0, N - 1, _BLOCK):
        block = p[start:start + _BLOCK]
        d = np.abs(block[:, None, :] - p[None, :, :]).sum(axis=2)
        rows = np.arange(block.shape[0])[:, None] + start
        d[np.arange(N)[None, :] <= rows] = np.iinfo(np.int64).max
        m = int(d.min())
        best = m if best is None else min(best, m)
        if best == 0:
            break
    return best
