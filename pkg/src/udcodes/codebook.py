"""Codeword and multi-user code value types.

Codewords are kept as plain tuples of Python ints inside the containers so
that hashing and set semantics are cheap; :class:`KVector` is the validated
public wrapper for a single word.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Tuple

Word = Tuple[int, ...]


@dataclass(frozen=True)
class Alphabet:
    """Symbol set {0..k-1}, or {-(k-1)..k-1} when ``signed``."""

    k: int
    signed: bool = False

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 2:
            raise ValueError(f"arity must be an integer >= 2, got {self.k!r}")

    @property
    def low(self) -> int:
        return -(self.k - 1) if self.signed else 0

    @property
    def high(self) -> int:
        return self.k - 1

    def __contains__(self, symbol) -> bool:
        return self.low <= symbol <= self.high

    def check_word(self, word: Sequence[int]) -> None:
        for s in word:
            if s not in self:
                raise ValueError(f"symbol {s} outside alphabet {self}")

    def __str__(self) -> str:
        return f"{'signed ' if self.signed else ''}{self.k}-ary"


@dataclass(frozen=True)
class KVector:
    """A length-n word over an :class:`Alphabet`."""

    symbols: Word
    alphabet: Alphabet

    def __post_init__(self):
        symbols = tuple(int(s) for s in self.symbols)
        if not symbols:
            raise ValueError("a codeword needs length >= 1")
        self.alphabet.check_word(symbols)
        object.__setattr__(self, "symbols", symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]


@dataclass(frozen=True)
class ConstituentCode:
    """The codeword set of one user.

    Words are stored sorted lexicographically, which makes equality a set
    comparison. Duplicates are rejected rather than silently merged.
    """

    words: Tuple[Word, ...]
    alphabet: Alphabet
    index: int = 1

    def __post_init__(self):
        words = [tuple(int(s) for s in w) for w in self.words]
        if not words:
            raise ValueError(f"constituent {self.index} is empty")
        n = len(words[0])
        if n == 0:
            raise ValueError("codewords need length >= 1")
        for w in words:
            if len(w) != n:
                raise ValueError(f"constituent {self.index} mixes word lengths")
            self.alphabet.check_word(w)
        unique = set(words)
        if len(unique) != len(words):
            raise ValueError(f"constituent {self.index} has duplicate codewords")
        object.__setattr__(self, "words", tuple(sorted(unique)))

    @property
    def n(self) -> int:
        return len(self.words[0])

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, word) -> bool:
        return tuple(word) in self._lookup

    @property
    def _lookup(self) -> frozenset:
        cached = self.__dict__.get("_lookup_cache")
        if cached is None:
            cached = frozenset(self.words)
            object.__setattr__(self, "_lookup_cache", cached)
        return cached

    def vectors(self) -> list:
        return [KVector(w, self.alphabet) for w in self.words]


@dataclass(frozen=True)
class MultiUserCode:
    """An ordered list of T constituent codes sharing length and alphabet.

    Equality is order-sensitive: user i of one code is compared with user i
    of the other.
    """

    constituents: Tuple[ConstituentCode, ...]
    alphabet: Alphabet = field(compare=False)

    def __post_init__(self):
        cons = tuple(self.constituents)
        if not cons:
            raise ValueError("a multi-user code needs at least one constituent")
        n = cons[0].n
        for c in cons:
            if c.n != n:
                raise ValueError("constituents disagree on code length")
            if c.alphabet != self.alphabet:
                raise ValueError("constituents disagree on alphabet")
        object.__setattr__(self, "constituents", cons)

    @classmethod
    def from_words(cls, constituents: Iterable[Iterable[Sequence[int]]],
                   k: int, signed: bool = False) -> "MultiUserCode":
        alphabet = Alphabet(k, signed)
        cons = tuple(ConstituentCode(tuple(tuple(w) for w in words), alphabet, i + 1)
                     for i, words in enumerate(constituents))
        return cls(cons, alphabet)

    @property
    def n(self) -> int:
        return self.constituents[0].n

    @property
    def k(self) -> int:
        return self.alphabet.k

    @property
    def T(self) -> int:
        return len(self.constituents)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.constituents)

    def tuple_count(self) -> int:
        count = 1
        for s in self.sizes:
            count *= s
        return count

    def symbol_count(self) -> int:
        return self.n * sum(self.sizes)

    def max_sum_symbol(self) -> int:
        return (self.k - 1) * self.T

    def __getitem__(self, i: int) -> ConstituentCode:
        return self.constituents[i]

    def __iter__(self) -> Iterator[ConstituentCode]:
        return iter(self.constituents)

    def __len__(self) -> int:
        return self.T

    def word_sets(self) -> list:
        """Constituents as plain sets of tuples, handy for comparisons."""
        return [set(c.words) for c in self.constituents]


def weight(x: Iterable[int]) -> int:
    """Sum of absolute symbol values over the integers."""
    return sum(abs(int(s)) for s in x)


def distance(y: Sequence[int], y2: Sequence[int]) -> int:
    """Weight of the componentwise integer difference ``y - y2``."""
    if len(y) != len(y2):
        raise ValueError(f"length mismatch: {len(y)} vs {len(y2)}")
    return sum(abs(int(a) - int(b)) for a, b in zip(y, y2))


def sum_tuple(words: Sequence[Sequence[int]]) -> Word:
    """Componentwise integer sum of one word per user (the adder channel output)."""
    if not words:
        raise ValueError("need at least one word")
    n = len(words[0])
    for w in words:
        if len(w) != n:
            raise ValueError("words of a tuple must share one length")
    return tuple(sum(int(w[i]) for w in words) for i in range(n))
