"""Recover per-user codewords from a noiseless sum word.

:class:`LookupTable` enumerates every tuple once and stores sorted sum
keys, so any UD code within the enumeration cap can be decoded; it is the
reference every other decoder is checked against.

:func:`decode_recursive` uses only the construction trace. At an Omega
node of lengths (f, g) the received word splits as (s1, s2); the first g
symbols of s1 minus s2 equal the sum of the difference-set words, which
after adding back T_g * offset is a sum word of the right child. Once the
right users are known their contribution is removed and the left child
decodes the first f symbols.
"""
from __future__ import annotations

from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from . import kernels
from .analysis import DEFAULT_TUPLE_CAP, SumEncoder, _check_cap
from .codebook import MultiUserCode, Word, sum_tuple
from .construction import InitialTrace, OmegaTrace, Trace, floor_log2, split_signed
from .errors import DecodingError, NotUniquelyDecodableError

DecodedTuple = Tuple[Word, ...]


class LookupTable:
    """Map from every achievable sum word to its unique codeword tuple."""

    def __init__(self, code: MultiUserCode, keys: Optional[np.ndarray],
                 order: Optional[np.ndarray], table: Optional[Dict[Word, DecodedTuple]]):
        self.code = code
        self._keys = keys
        self._order = order
        self._table = table
        self._enc = SumEncoder(code)

    def __len__(self) -> int:
        return len(self._keys) if self._table is None else len(self._table)

    def __contains__(self, y) -> bool:
        try:
            self.decode(y)
        except DecodingError:
            return False
        return True

    def decode(self, y: Sequence[int]) -> DecodedTuple:
        y = tuple(int(s) for s in y)
        if self._table is not None:
            try:
                return self._table[y]
            except KeyError:
                raise DecodingError(f"{y} is not the sum of any codeword tuple") from None
        if not self._enc.in_range(y):
            raise DecodingError(f"{y} is outside the channel output range")
        key = self._enc.sum_key(y)
        pos = int(np.searchsorted(self._keys, key))
        if pos == len(self._keys) or self._keys[pos] != key:
            raise DecodingError(f"{y} is not the sum of any codeword tuple")
        idx = np.unravel_index(int(self._order[pos]), self.code.sizes)
        return tuple(c.words[int(i)] for c, i in zip(self.code, idx))

    def items(self):
        """(sum word, tuple) pairs in key order."""
        if self._table is not None:
            yield from self._table.items()
            return
        for pos in range(len(self._keys)):
            idx = np.unravel_index(int(self._order[pos]), self.code.sizes)
            tup = tuple(c.words[int(i)] for c, i in zip(self.code, idx))
            yield sum_tuple(tup), tup


def build_lookup(code: MultiUserCode, cap: Optional[int] = DEFAULT_TUPLE_CAP) -> LookupTable:
    _check_cap(code, cap)
    enc = SumEncoder(code)
    if not enc.fits_int64:
        import itertools
        table: Dict[Word, DecodedTuple] = {}
        for tup in itertools.product(*(c.words for c in code)):
            y = sum_tuple(tup)
            if y in table:
                raise NotUniquelyDecodableError(
                    f"tuples {table[y]} and {tup} share the sum {y}")
            table[y] = tup
        return LookupTable(code, None, None, table)
    keys = kernels.tuple_sum_keys(enc.user_keys(code))
    order = np.argsort(keys, kind="stable")
    keys = keys[order]
    dup = np.flatnonzero(keys[1:] == keys[:-1])
    if dup.size:
        a, b = (np.unravel_index(int(order[i]), code.sizes) for i in (dup[0], dup[0] + 1))
        ta = tuple(c.words[int(i)] for c, i in zip(code, a))
        tb = tuple(c.words[int(i)] for c, i in zip(code, b))
        raise NotUniquelyDecodableError(f"tuples {ta} and {tb} share the sum {sum_tuple(ta)}")
    return LookupTable(code, keys, order, None)


def decode_lookup(y: Sequence[int], table: LookupTable) -> DecodedTuple:
    return table.decode(y)


def decode_leaf(y: int, arity: int) -> Tuple[Word, Word]:
    """Decode a scalar sum of the initial two-user code over ``arity``.

    User 1 sends 0..2**l - 1 and user 2 sends 0 or arity - 1, where
    2**l <= arity - 1; so y >= 2**l exactly when user 2 sent arity - 1.
    """
    top = arity - 1
    ones = 2 ** floor_log2(top)
    a2 = top if y >= ones else 0
    a1 = y - a2
    if not 0 <= a1 < ones:
        raise DecodingError(f"sum {y} is not achievable by the initial {arity}-ary code")
    return (a1,), (a2,)


def decode_recursive(y: Sequence[int], trace: Trace) -> DecodedTuple:
    """Structural decoder driven by the construction trace."""
    y = tuple(int(s) for s in y)
    if len(y) != trace.length:
        raise DecodingError(f"sum word has length {len(y)}, trace expects {trace.length}")
    return _decode(y, trace)


def _decode(y: Word, trace: Trace) -> DecodedTuple:
    if isinstance(trace, InitialTrace):
        return decode_leaf(y[0], trace.arity)
    assert isinstance(trace, OmegaTrace)
    f, g, c = trace.f, trace.g, trace.offset
    s1, s2 = y[:f], y[f:]
    right_users = trace.right.users
    # s1[:g] - s2 is the sum of the signed words d_i = a_i - c
    right_sum = tuple(a - b + right_users * c for a, b in zip(s1[:g], s2))
    right = _decode(right_sum, trace.right)
    pad = (0,) * (f - g)
    right_words = []
    for w in right:
        pair = split_signed(tuple(s - c for s in w))
        right_words.append(pair.d_plus + pad + pair.d_minus)
    rest = tuple(a - sum(w[i] for w in right_words) for i, a in enumerate(y))
    if rest[f:] != rest[:g]:
        raise DecodingError("sum word is inconsistent with the construction trace")
    left = _decode(rest[:f], trace.left)
    left_words = [w + w[:g] for w in left]
    return tuple(left_words) + tuple(right_words)
