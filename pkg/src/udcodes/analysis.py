"""Brute-force decodability checks, rates and closed-form predictions.

Two independent UD checkers live here:

* :func:`check_ud` enumerates every codeword tuple and looks for equal
  sum words (hash/sort based, through :mod:`udcodes.kernels`);
* :func:`check_ud_differences` searches for a nonzero choice of
  within-constituent differences summing to the zero vector.

They answer the same question by different routes and are cross-checked
in the tests. No floating point is used in either.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import kernels
from .codebook import MultiUserCode, Word, sum_tuple
from .construction import binary_profile, build_arbitrary, floor_log2, _require_arity
from .errors import CapacityError

#: Default cap on the number of codeword tuples enumerated by the checkers.
DEFAULT_TUPLE_CAP = 2**24
#: Above this many tuples, min_delta switches from pairwise scan to ball search.
PAIRWISE_LIMIT = 20_000
_INT64_SAFE = 2**62


# -- sum-word encoding --------------------------------------------------------

class SumEncoder:
    """Mixed-radix integer keys for words and their sums.

    Each coordinate of a word is offset to be nonnegative, so the key of a
    sum of T words is the sum of the T word keys (no carries, because every
    coordinate sum stays below ``base``). ``pad`` widens the radix so keys
    can be shifted by up to ``pad`` per coordinate without wrapping.
    """

    def __init__(self, code: MultiUserCode, pad: int = 0):
        self.n = code.n
        self.T = code.T
        self.low = code.alphabet.low
        self.pad = pad
        self.span = code.T * (code.alphabet.high - code.alphabet.low)
        self.base = self.span + 1 + 2 * pad
        self.weights = [self.base ** (self.n - 1 - i) for i in range(self.n)]
        self.fits_int64 = self.base ** self.n < _INT64_SAFE

    def word_key(self, word: Sequence[int]) -> int:
        return sum((s - self.low) * w for s, w in zip(word, self.weights))

    def sum_key(self, y: Sequence[int]) -> int:
        """Key of a sum word; equals the sum of the word keys of any preimage."""
        off = self.T * self.low - self.pad
        return sum((s - off) * w for s, w in zip(y, self.weights))

    def in_range(self, y: Sequence[int]) -> bool:
        lo = self.T * self.low
        hi = lo + self.span
        return len(y) == self.n and all(lo <= s <= hi for s in y)

    def user_keys(self, code: MultiUserCode) -> List[np.ndarray]:
        keys = []
        for i, c in enumerate(code):
            arr = np.array([self.word_key(w) for w in c.words], dtype=np.int64)
            if i == 0 and self.pad:
                arr += self.pad * sum(self.weights)
            keys.append(arr)
        return keys

    def digits(self, keys: np.ndarray) -> np.ndarray:
        """Sum words (N x n) from keys, undoing the offsets."""
        out = np.empty((len(keys), self.n), dtype=np.int64)
        rem = np.asarray(keys, dtype=np.int64)
        for i in range(self.n - 1, -1, -1):
            out[:, i] = rem % self.base
            rem = rem // self.base
        return out + self.T * self.low - self.pad


def _check_cap(code: MultiUserCode, cap: Optional[int]) -> int:
    count = code.tuple_count()
    if cap is not None and count > cap:
        raise CapacityError(
            f"code has {count} codeword tuples, enumeration cap is {cap}")
    return count


def _tuple_at(code: MultiUserCode, flat: int) -> Tuple[Word, ...]:
    idx = np.unravel_index(flat, code.sizes)
    return tuple(c.words[int(i)] for c, i in zip(code, idx))


# -- UD checks ---------------------------------------------------------------

@dataclass(frozen=True)
class UdReport:
    is_ud: bool
    tuples_checked: int
    witness: Optional[Tuple[Tuple[Word, ...], Tuple[Word, ...]]] = None

    def __post_init__(self):
        if self.is_ud != (self.witness is None):
            raise ValueError("a witness is present exactly when the code is not UD")

    def __bool__(self) -> bool:
        return self.is_ud


def check_ud(code: MultiUserCode, cap: Optional[int] = DEFAULT_TUPLE_CAP) -> UdReport:
    """Exhaustive sum-collision check over all codeword tuples."""
    count = _check_cap(code, cap)
    enc = SumEncoder(code)
    if enc.fits_int64:
        hit = kernels.find_collision(enc.user_keys(code))
        if hit is None:
            return UdReport(True, count)
        return UdReport(False, count, (_tuple_at(code, hit[0]), _tuple_at(code, hit[1])))
    seen = {}
    for tup in itertools.product(*(c.words for c in code)):
        y = sum_tuple(tup)
        if y in seen:
            return UdReport(False, count, (seen[y], tup))
        seen[y] = tup
    return UdReport(True, count)


def check_ud_differences(code: MultiUserCode, state_cap: int = 2_000_000) -> bool:
    """UD iff no nonzero choice of differences u_j - u'_j sums to zero.

    Dynamic programme over (partial difference sum, any-nonzero-so-far)
    states, one constituent at a time.
    """
    n = code.n
    zero = (0,) * n
    states = {(zero, False)}
    for c in code:
        diffs = {tuple(a - b for a, b in zip(u, v)) for u in c.words for v in c.words}
        nxt = set()
        for s, flag in states:
            for d in diffs:
                nxt.add((tuple(x + y for x, y in zip(s, d)), flag or d != zero))
        if len(nxt) > state_cap:
            raise CapacityError(f"difference search exceeded {state_cap} states")
        states = nxt
    return (zero, True) not in states


def min_delta(code: MultiUserCode, cap: Optional[int] = DEFAULT_TUPLE_CAP,
              offset_budget: int = 10**8) -> int:
    """Largest delta such that distinct tuples have sums at L1 distance >= delta.

    Returns 0 for a code that is not UD (first collision short-circuits).
    """
    report = check_ud(code, cap)
    if not report.is_ud:
        return 0
    count = report.tuples_checked
    if count < 2:
        raise ValueError("delta is undefined for a code with a single codeword tuple")
    enc = SumEncoder(code)
    if not enc.fits_int64:
        sums = [sum_tuple(t) for t in itertools.product(*(c.words for c in code))]
        return min(sum(abs(a - b) for a, b in zip(y, z))
                   for y, z in itertools.combinations(sums, 2))
    if count <= PAIRWISE_LIMIT:
        keys = kernels.tuple_sum_keys(enc.user_keys(code))
        return kernels.min_l1_pairwise(enc.digits(keys))
    return _ball_search(code, offset_budget)


def _offsets(n: int, radius: int):
    """Integer vectors of L1 norm ``radius`` whose first nonzero entry is positive."""
    for support in range(1, min(n, radius) + 1):
        for pos in itertools.combinations(range(n), support):
            for mags in _compositions(radius, support):
                for signs in itertools.product((1, -1), repeat=support - 1):
                    vec = [0] * n
                    vec[pos[0]] = mags[0]
                    for p, m, s in zip(pos[1:], mags[1:], signs):
                        vec[p] = m * s
                    yield vec


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _ball_search(code: MultiUserCode, offset_budget: int) -> int:
    # sums are distinct here; find the smallest radius with a neighbour pair
    span = code.T * (code.alphabet.high - code.alphabet.low)
    for radius in itertools.count(1):
        if radius > span * code.n:
            raise AssertionError("distinct sums must lie within the full span")
        enc = SumEncoder(code, pad=radius)
        if not enc.fits_int64:
            raise CapacityError("sum keys overflow int64 for the ball search")
        keys = np.sort(kernels.tuple_sum_keys(enc.user_keys(code)))
        checked = 0
        for vec in _offsets(code.n, radius):
            checked += len(keys)
            if checked > offset_budget:
                raise CapacityError("ball search exceeded its offset budget")
            delta = sum(v * w for v, w in zip(vec, enc.weights))
            probe = keys + delta
            pos = np.searchsorted(keys, probe)
            pos[pos == len(keys)] = 0
            if np.any(keys[pos] == probe):
                return radius


# -- rates -------------------------------------------------------------------

class ExactRate:
    """A rate of the form log2(argument) / length, compared exactly.

    Constituent sizes are integers, so a total rate is log2 of the product
    of sizes over the code length; keeping the integer product avoids any
    floating point in comparisons.
    """

    __slots__ = ("argument", "length")

    def __init__(self, argument: int, length: int):
        if argument < 1 or length < 1:
            raise ValueError("argument and length must be positive")
        self.argument = int(argument)
        self.length = int(length)

    @classmethod
    def of_sizes(cls, sizes: Iterable[int], length: int) -> "ExactRate":
        return cls(math.prod(sizes), length)

    def is_rational(self) -> bool:
        return self.argument & (self.argument - 1) == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"log2({self.argument})/{self.length} is irrational")
        return Fraction(self.argument.bit_length() - 1, self.length)

    def __float__(self) -> float:
        return math.log2(self.argument) / self.length

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactRate):
            return self.argument ** other.length == other.argument ** self.length
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if other < 0:
                return False
            # log2(a)/L == p/q  <=>  a**q == 2**(p L)
            return self.argument ** other.denominator == 2 ** (other.numerator * self.length)
        return NotImplemented

    __hash__ = None

    @staticmethod
    def mixed(rate_a: "ExactRate", rate_d: "ExactRate") -> "ExactRate":
        """(f R_A + g R_D) / (f + g) for rates of codes of lengths f and g."""
        return ExactRate(rate_a.argument * rate_d.argument, rate_a.length + rate_d.length)

    def __repr__(self) -> str:
        if self.is_rational():
            return f"ExactRate({self.as_fraction()})"
        return f"ExactRate(log2({self.argument})/{self.length})"


@dataclass(frozen=True)
class RateSummary:
    n: int
    sizes: Tuple[int, ...]
    predicted_users: Optional[int] = None
    predicted_total: Optional[Fraction] = None

    @property
    def per_user(self) -> Tuple[ExactRate, ...]:
        return tuple(ExactRate(s, self.n) for s in self.sizes)

    @property
    def per_user_float(self) -> Tuple[float, ...]:
        return tuple(float(r) for r in self.per_user)

    @property
    def total(self) -> ExactRate:
        return ExactRate.of_sizes(self.sizes, self.n)

    @property
    def users(self) -> int:
        return len(self.sizes)

    def matches_prediction(self) -> Optional[bool]:
        if self.predicted_total is None:
            return None
        return self.total == self.predicted_total and self.users == self.predicted_users


def total_rate(code: MultiUserCode, predict: bool = False) -> RateSummary:
    """Per-user and total rates; with ``predict`` the length-n formula is attached."""
    users = rate = None
    if predict:
        users, rate = predicted_arbitrary(code.n, code.k)
    return RateSummary(code.n, code.sizes, users, rate)


def predicted_pow2(m: int, k: int) -> Tuple[int, Fraction]:
    _require_arity(k)
    return 2 ** (m + 1), Fraction(m, 2) + 1 + floor_log2(k - 1)


def predicted_arbitrary(n: int, k: int) -> Tuple[int, Fraction]:
    """User count 2n and the closed-form total rate for length n."""
    prof = binary_profile(n, k)
    digits, r = prof.digits, prof.r
    first = sum(Fraction(d * j * 2**j, 2) for j, d in enumerate(digits))
    second = sum(digits[j] * 2**j * sum(digits[j + 1:]) for j in range(r))
    return 2 * n, (first + second) / n + 1 + floor_log2(k - 1)


@dataclass(frozen=True)
class RateRow:
    users: int
    length: int
    measured: ExactRate
    predicted: Fraction

    @property
    def agrees(self) -> bool:
        return self.measured == self.predicted


def rate_table(lengths: Sequence[int], k: int) -> List[RateRow]:
    """Constructed-vs-predicted total rates for each code length."""
    rows = []
    for n in lengths:
        code, _ = build_arbitrary(n, k)
        users, predicted = predicted_arbitrary(n, k)
        rows.append(RateRow(code.T, n, total_rate(code).total, predicted))
        if code.T != users:
            raise AssertionError(f"n={n}: built {code.T} users, formula says {users}")
    return rows
