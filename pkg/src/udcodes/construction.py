"""Recursive constructions of uniquely decodable k-ary multi-user codes.

The building block is :func:`omega_combine`, which merges an unsigned UD
code of length f with a signed UD difference set of length g (f >= g) into
a UD code of length f + g. Two recursions are built on top of it:

* :func:`build_pow2` for code length 2**m, folding a triangle of
  initial codes over the arity ladder k_j = 2**j * (k - 1) + 1;
* :func:`build_arbitrary` for any length n, driven by the binary digits
  of n (see :class:`BinaryProfile`).

Both return the code together with a construction trace, which the
structural decoder in :mod:`udcodes.decoder` replays.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .codebook import Alphabet, ConstituentCode, KVector, MultiUserCode, Word
from .errors import CapacityError, UnsupportedArityError

#: Default cap on the total number of stored symbols (n * total codewords).
DEFAULT_SYMBOL_CAP = 10**7


def ladder_arity(j: int, k: int) -> int:
    return 2**j * (k - 1) + 1


def floor_log2(x: int) -> int:
    return int(x).bit_length() - 1


def _require_arity(k: int) -> None:
    if k < 3:
        raise UnsupportedArityError(
            f"k={k} is not supported: the recursive constructions need k >= 3 "
            "(the binary case uses a different construction)")


@dataclass(frozen=True)
class DifferencePair:
    d: Word
    d_plus: Word
    d_minus: Word


def split_signed(d) -> DifferencePair:
    """Split a signed word into nonnegative parts with disjoint supports."""
    symbols = tuple(int(s) for s in (d.symbols if isinstance(d, KVector) else d))
    plus = tuple(s if s >= 0 else 0 for s in symbols)
    minus = tuple(-s if s < 0 else 0 for s in symbols)
    return DifferencePair(symbols, plus, minus)


def shift_to_signed(code: MultiUserCode, offset: int) -> MultiUserCode:
    """Translate a (2c+1)-ary code by -c onto the signed alphabet {-c..c}."""
    if code.alphabet.signed:
        raise ValueError("shift_to_signed expects an unsigned code")
    if code.k % 2 == 0 or offset != (code.k - 1) // 2 or offset < 1:
        raise ValueError(
            f"offset {offset} does not map a {code.k}-ary code onto a signed "
            f"alphabet; expected (k-1)/2 = {(code.k - 1) / 2}")
    alphabet = Alphabet(offset + 1, signed=True)
    cons = tuple(
        ConstituentCode(tuple(tuple(s - offset for s in w) for w in c.words),
                        alphabet, c.index)
        for c in code)
    return MultiUserCode(cons, alphabet)


def initial_code(j: int, k: int) -> MultiUserCode:
    """Two-user length-1 code over arity k_j = 2**j (k-1) + 1.

    User 1 gets every integer representable with l_j = floor(log2(k_j - 1))
    bits, user 2 gets {0, k_j - 1}.
    """
    _require_arity(k)
    if j < 0:
        raise ValueError("ladder index must be >= 0")
    kj = ladder_arity(j, k)
    bits = floor_log2(kj - 1)
    return MultiUserCode.from_words(
        [[(v,) for v in range(2**bits)], [(0,), (kj - 1,)]], kj)


def omega_combine(A: MultiUserCode, D: Optional[MultiUserCode],
                  symbol_cap: Optional[int] = DEFAULT_SYMBOL_CAP) -> MultiUserCode:
    """Combine an unsigned code A (length f) with a signed set D (length g).

    Users of A send ``(a, a[:g])``; users of D send ``(d_plus + 0^(f-g), d_minus)``.
    A-derived users come first. ``D=None`` stands for the empty set (g = 0)
    and returns A unchanged.
    """
    if A.alphabet.signed:
        raise ValueError("the first operand must be an unsigned code")
    if D is None:
        return A
    f, g = A.n, D.n
    if f < g:
        raise ValueError(f"omega_combine needs f >= g, got f={f}, g={g}")
    if not D.alphabet.signed or D.k != A.k:
        raise ValueError(
            f"difference set must be over the signed {A.k}-ary alphabet, got {D.alphabet}")
    if symbol_cap is not None:
        need = (f + g) * (sum(A.sizes) + sum(D.sizes))
        if need > symbol_cap:
            raise CapacityError(f"construction needs {need} symbols, cap is {symbol_cap}")

    alphabet = A.alphabet
    pad = (0,) * (f - g)
    cons = []
    for c in A:
        cons.append(ConstituentCode(tuple(w + w[:g] for w in c.words), alphabet, len(cons) + 1))
    for c in D:
        words = []
        for w in c.words:
            pair = split_signed(w)
            words.append(pair.d_plus + pad + pair.d_minus)
        cons.append(ConstituentCode(tuple(words), alphabet, len(cons) + 1))
    return MultiUserCode(tuple(cons), alphabet)


# -- construction traces ----------------------------------------------------

@dataclass(frozen=True)
class InitialTrace:
    """Leaf: the initial two-user length-1 code over ``arity``."""

    arity: int

    @property
    def length(self) -> int:
        return 1

    @property
    def users(self) -> int:
        return 2

    def build(self) -> MultiUserCode:
        k = self.arity
        bits = floor_log2(k - 1)
        return MultiUserCode.from_words([[(v,) for v in range(2**bits)], [(0,), (k - 1,)]], k)

    def to_dict(self) -> dict:
        return {"kind": "initial", "arity": self.arity}


@dataclass(frozen=True)
class OmegaTrace:
    """Internal node: Omega(left, right - offset)."""

    left: "Trace"
    right: "Trace"
    offset: int

    def __post_init__(self):
        if self.right.arity != 2 * self.offset + 1:
            raise ValueError("offset must equal (right arity - 1) / 2")
        if self.left.arity != self.offset + 1:
            raise ValueError("left arity must equal offset + 1")
        if self.left.length < self.right.length:
            raise ValueError("left length must be >= right length")

    @property
    def arity(self) -> int:
        return self.left.arity

    @property
    def f(self) -> int:
        return self.left.length

    @property
    def g(self) -> int:
        return self.right.length

    @property
    def length(self) -> int:
        return self.f + self.g

    @property
    def users(self) -> int:
        return self.left.users + self.right.users

    def build(self) -> MultiUserCode:
        return omega_combine(self.left.build(),
                             shift_to_signed(self.right.build(), self.offset),
                             symbol_cap=None)

    def to_dict(self) -> dict:
        return {"kind": "omega", "offset": self.offset,
                "left": self.left.to_dict(), "right": self.right.to_dict()}


Trace = Union[InitialTrace, OmegaTrace]


def trace_from_dict(data: dict) -> Trace:
    kind = data.get("kind")
    if kind == "initial":
        return InitialTrace(int(data["arity"]))
    if kind == "omega":
        return OmegaTrace(trace_from_dict(data["left"]), trace_from_dict(data["right"]),
                          int(data["offset"]))
    raise ValueError(f"unknown trace node kind {kind!r}")


def iter_nodes(trace: Trace):
    yield trace
    if isinstance(trace, OmegaTrace):
        yield from iter_nodes(trace.left)
        yield from iter_nodes(trace.right)


# -- recursions -------------------------------------------------------------

def build_pow2(m: int, k: int,
               symbol_cap: Optional[int] = DEFAULT_SYMBOL_CAP) -> Tuple[MultiUserCode, Trace]:
    """Build the length-2**m code over arity k.

    Level i of the triangle holds A^(2**i, k_j) for j = 0..m-i; each cell is
    Omega(A^(2**(i-1), k_j), A^(2**(i-1), k_{j+1}) - (k_j - 1)).
    """
    _require_arity(k)
    if m < 0:
        raise ValueError("m must be >= 0")
    # omega_combine enforces the cap per cell; this only stops absurd m early
    if symbol_cap is not None and 2**m > symbol_cap:
        raise CapacityError(f"length 2**{m} exceeds the symbol cap {symbol_cap}")
    codes = [initial_code(j, k) for j in range(m + 1)]
    traces: list = [InitialTrace(ladder_arity(j, k)) for j in range(m + 1)]
    for i in range(1, m + 1):
        for j in range(m - i + 1):
            offset = ladder_arity(j, k) - 1
            codes[j] = omega_combine(codes[j], shift_to_signed(codes[j + 1], offset),
                                     symbol_cap=symbol_cap)
            traces[j] = OmegaTrace(traces[j], traces[j + 1], offset)
    return codes[0], traces[0]


@dataclass(frozen=True)
class BinaryProfile:
    """Binary digits of n and the derived lengths and arities, indexed by j = 0..r."""

    n: int
    k: int
    digits: Tuple[int, ...]
    f: Tuple[int, ...]
    g: Tuple[int, ...]
    ktilde: Tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.digits) - 1

    @property
    def ltilde(self) -> Tuple[int, ...]:
        return tuple(floor_log2(kt - 1) for kt in self.ktilde)

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "digits": list(self.digits),
                "f": list(self.f), "g": list(self.g), "ktilde": list(self.ktilde)}


def binary_profile(n: int, k: int) -> BinaryProfile:
    _require_arity(k)
    if n < 1:
        raise ValueError("n must be >= 1")
    r = floor_log2(n)
    digits = tuple((n >> j) & 1 for j in range(r + 1))
    f = tuple(d << j for j, d in enumerate(digits))
    g = tuple(sum(f[: j + 1]) for j in range(r + 1))
    ktilde = tuple(2**sum(digits[j + 1:]) * (k - 1) + 1 for j in range(r + 1))
    return BinaryProfile(n, k, digits, f, g, ktilde)


def build_arbitrary(n: int, k: int,
                    symbol_cap: Optional[int] = DEFAULT_SYMBOL_CAP) -> Tuple[MultiUserCode, Trace]:
    """Build a length-n code over arity k with 2n users.

    Walks the binary digits of n from least significant upwards; whenever
    digit j is set, the partial code is shifted onto a signed alphabet and
    combined under A^(2**j, ktilde_j).
    """
    prof = binary_profile(n, k)
    if symbol_cap is not None and n > symbol_cap:
        raise CapacityError(f"length {n} exceeds the symbol cap {symbol_cap}")
    code: Optional[MultiUserCode] = None
    trace: Optional[Trace] = None
    for j, digit in enumerate(prof.digits):
        if not digit:
            continue
        block, block_trace = build_pow2(j, prof.ktilde[j], symbol_cap=symbol_cap)
        if code is None:
            code, trace = block, block_trace
            continue
        # the partial code sits one ladder step up: ktilde_{j-1} - 1 == 2 (ktilde_j - 1)
        offset = (prof.ktilde[j - 1] - 1) // 2
        code = omega_combine(block, shift_to_signed(code, offset), symbol_cap=symbol_cap)
        trace = OmegaTrace(block_trace, trace, offset)
    assert code is not None and trace is not None
    return code, trace
