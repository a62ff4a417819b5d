"""Noiseless adder channel and its cascade with a discrete memoryless channel.

Noise draws use numpy's PCG64 bit generator seeded with the caller's
integer seed, so a given (input, matrix, seed) reproduces bit-for-bit.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .codebook import MultiUserCode, Word, sum_tuple
from .errors import MembershipError

ROW_TOLERANCE = 1e-12


class TransitionMatrix:
    """Row-stochastic matrix P[i, j] = P(output j | input i) on {0..size-1}."""

    def __init__(self, probabilities):
        p = np.array(probabilities, dtype=float)
        if p.ndim != 2 or p.shape[0] != p.shape[1] or p.shape[0] == 0:
            raise ValueError(f"transition matrix must be square, got shape {p.shape}")
        if (p < 0).any():
            raise ValueError("transition probabilities must be nonnegative")
        bad = np.abs(p.sum(axis=1) - 1.0) > ROW_TOLERANCE
        if bad.any():
            raise ValueError(f"rows {np.flatnonzero(bad).tolist()} do not sum to 1")
        self.p = p
        self._cdf = np.cumsum(p, axis=1)
        self._cdf[:, -1] = 1.0

    @property
    def size(self) -> int:
        return self.p.shape[0]

    @classmethod
    def for_code(cls, code: MultiUserCode, probabilities) -> "TransitionMatrix":
        m = cls(probabilities)
        expected = code.max_sum_symbol() + 1
        if m.size != expected:
            raise ValueError(f"matrix size {m.size} does not match (k-1)T+1 = {expected}")
        return m

    @classmethod
    def identity(cls, size: int) -> "TransitionMatrix":
        return cls(np.eye(size))

    @classmethod
    def symmetric(cls, size: int, p: float) -> "TransitionMatrix":
        """Demo noise: move to i-1 or i+1 with probability p/2 each.

        At the two boundary symbols the whole p goes to the only neighbour.
        """
        if not 0.0 <= p <= 1.0:
            raise ValueError("p must lie in [0, 1]")
        m = np.zeros((size, size))
        for i in range(size):
            if size == 1:
                m[i, i] = 1.0
                continue
            m[i, i] = 1.0 - p
            if i == 0:
                m[i, 1] += p
            elif i == size - 1:
                m[i, i - 1] += p
            else:
                m[i, i - 1] += p / 2
                m[i, i + 1] += p / 2
        return cls(m)

    def to_list(self) -> list:
        return self.p.tolist()


def transmit(code: MultiUserCode, words: Sequence[Sequence[int]]) -> Word:
    """Noiseless channel output for one codeword per user."""
    if len(words) != code.T:
        raise MembershipError(f"expected {code.T} words, got {len(words)}")
    for i, (c, w) in enumerate(zip(code, words)):
        if tuple(w) not in c:
            raise MembershipError(f"word {tuple(w)} is not in constituent {i + 1}")
    y = sum_tuple(words)
    lo = code.T * code.alphabet.low
    hi = code.max_sum_symbol()
    assert all(lo <= s <= hi for s in y), "sum symbol out of range"
    return y


def apply_dmc(y: Sequence[int], matrix: TransitionMatrix, seed: int) -> Word:
    """Resample each symbol independently from its row of ``matrix``."""
    y = np.asarray(y, dtype=np.int64)
    if y.size and (y.min() < 0 or y.max() >= matrix.size):
        raise ValueError(f"sum symbols must lie in 0..{matrix.size - 1}")
    rng = np.random.Generator(np.random.PCG64(seed))
    u = rng.random(y.size)
    cdf = matrix._cdf[y]
    out = (u[:, None] >= cdf).sum(axis=1)
    return tuple(int(s) for s in np.minimum(out, matrix.size - 1))
