import pytest
from hypothesis import given
from hypothesis import strategies as st

from udcodes.codebook import (Alphabet, ConstituentCode, KVector, MultiUserCode, distance,
                              sum_tuple, weight)

vectors = st.lists(st.integers(-20, 20), min_size=1, max_size=8)


def test_alphabet_ranges():
    assert (Alphabet(3).low, Alphabet(3).high) == (0, 2)
    assert (Alphabet(3, signed=True).low, Alphabet(3, signed=True).high) == (-2, 2)
    with pytest.raises(ValueError):
        Alphabet(1)


def test_kvector_validates_symbols():
    KVector((0, 2, 1), Alphabet(3))
    with pytest.raises(ValueError):
        KVector((0, 3), Alphabet(3))
    with pytest.raises(ValueError):
        KVector((-1,), Alphabet(3))
    with pytest.raises(ValueError):
        KVector((), Alphabet(3))
    assert len(KVector((1, -2, 0), Alphabet(3, signed=True))) == 3


@pytest.mark.parametrize("x, expected", [
    ((0, 0, 0), 0),
    ((1, -2, 0), 3),
    ((2, 2, 2, 2), 8),
])
def test_weight(x, expected):
    assert weight(x) == expected


def test_weight_of_kvector():
    assert weight(KVector((1, -2, 0), Alphabet(3, signed=True))) == 3


@pytest.mark.parametrize("y, y2, expected", [
    ((0, 2), (0, 2), 0),
    ((0, 2), (1, 0), 3),
    ((3, 3, 3), (0, 0, 0), 9),
])
def test_distance(y, y2, expected):
    assert distance(y, y2) == expected


def test_distance_length_mismatch():
    with pytest.raises(ValueError):
        distance((0, 1), (0,))


def test_sum_tuple():
    assert sum_tuple([(0, 0), (0, 0), (0, 0)]) == (0, 0)
    assert sum_tuple([(1, 1), (2, 2), (0, 1), (2, 0)]) == (5, 4)
    assert sum_tuple([(0,), (2,)]) == (2,)
    with pytest.raises(ValueError):
        sum_tuple([(0, 1), (1,)])


@given(vectors)
def test_weight_zero_iff_zero_vector(x):
    assert (weight(x) == 0) == all(s == 0 for s in x)


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    *[st.lists(st.integers(-9, 9), min_size=n, max_size=n) for _ in range(3)])))
def test_triangle_inequality(vs):
    a, b, c = vs
    assert distance(a, c) <= distance(a, b) + distance(b, c)
    assert distance(a, b) == distance(b, a)
    assert (distance(a, b) == 0) == (a == b)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(
    st.lists(st.integers(0, 4), min_size=n, max_size=n), min_size=1, max_size=6)), st.randoms())
def test_sum_tuple_order_independent(ws, rnd):
    shuffled = list(ws)
    rnd.shuffle(shuffled)
    assert sum_tuple(ws) == sum_tuple(shuffled)


def test_constituent_rejects_duplicates_and_mixed_lengths():
    with pytest.raises(ValueError, match="duplicate"):
        ConstituentCode(((0, 1), (0, 1)), Alphabet(3))
    with pytest.raises(ValueError):
        ConstituentCode(((0, 1), (0,)), Alphabet(3))
    with pytest.raises(ValueError):
        ConstituentCode((), Alphabet(3))


def test_constituent_is_a_set():
    a = ConstituentCode(((1, 0), (0, 2)), Alphabet(3))
    b = ConstituentCode(((0, 2), (1, 0)), Alphabet(3))
    assert a == b
    assert a.words == ((0, 2), (1, 0))
    assert (1, 0) in a and [1, 0] in a and (2, 2) not in a


def test_multiuser_code_is_order_sensitive():
    c1 = MultiUserCode.from_words([[(0,), (1,)], [(0,), (2,)]], 3)
    c2 = MultiUserCode.from_words([[(0,), (2,)], [(0,), (1,)]], 3)
    assert c1 != c2
    assert c1 == MultiUserCode.from_words([[(1,), (0,)], [(2,), (0,)]], 3)
    assert (c1.T, c1.n, c1.k, c1.sizes, c1.tuple_count()) == (2, 1, 3, (2, 2), 4)


def test_multiuser_code_rejects_mismatch():
    with pytest.raises(ValueError):
        MultiUserCode.from_words([[(0,)], [(0, 1)]], 3)
    with pytest.raises(ValueError):
        MultiUserCode.from_words([], 3)
