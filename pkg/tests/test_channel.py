import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from udcodes.channel import TransitionMatrix, apply_dmc, transmit
from udcodes.codebook import MultiUserCode
from udcodes.construction import build_pow2
from udcodes.errors import MembershipError


@pytest.fixture(scope="module")
def a23():
    return build_pow2(1, 3)[0]


def test_transmit_examples(a23):
    assert transmit(a23, [(0, 0)] * 3 + [(0, 2)]) == (0, 2)
    assert transmit(a23, [(1, 1), (0, 0), (1, 0), (2, 0)]) == (4, 1)
    single = MultiUserCode.from_words([[(0, 2), (1, 1)]], 3)
    assert transmit(single, [(1, 1)]) == (1, 1)


def test_transmit_membership(a23):
    with pytest.raises(MembershipError):
        transmit(a23, [(2, 2), (0, 0), (0, 0), (0, 2)])
    with pytest.raises(MembershipError):
        transmit(a23, [(0, 0)] * 3)


def test_transmit_range(a23):
    hi = a23.max_sum_symbol()
    for tup in itertools.product(*(c.words for c in a23)):
        assert all(0 <= s <= hi for s in transmit(a23, tup))


def test_matrix_validation():
    with pytest.raises(ValueError):
        TransitionMatrix([[0.5, 0.4], [0, 1]])
    with pytest.raises(ValueError):
        TransitionMatrix([[1.5, -0.5], [0, 1]])
    with pytest.raises(ValueError):
        TransitionMatrix([[1, 0, 0], [0, 1, 0]])
    TransitionMatrix([[0.5, 0.5], [0.25, 0.75]])


def test_matrix_size_must_match_code(a23):
    TransitionMatrix.for_code(a23, np.eye(9))
    with pytest.raises(ValueError):
        TransitionMatrix.for_code(a23, np.eye(8))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 8), min_size=1, max_size=12), st.integers(0, 2**32))
def test_identity_channel(y, seed):
    assert apply_dmc(y, TransitionMatrix.identity(9), seed) == tuple(y)


def test_saturating_shift():
    size = 6
    m = np.zeros((size, size))
    for i in range(size):
        m[i, min(i + 1, size - 1)] = 1.0
    assert apply_dmc((0, 1, 2, 5, 4), TransitionMatrix(m), 7) == (1, 2, 3, 5, 5)


def test_uniform_rows_are_reproducible():
    m = TransitionMatrix(np.full((9, 9), 1 / 9))
    y = tuple(range(9))
    # PCG64(2024) first nine doubles scaled by 9 and floored
    assert apply_dmc(y, m, 2024) == (6, 1, 2, 7, 8, 1, 0, 1, 3)
    assert apply_dmc(y, m, 2024) == apply_dmc(y, m, 2024)
    assert apply_dmc(y, m, 2025) != apply_dmc(y, m, 2024)


def test_apply_dmc_range_check():
    with pytest.raises(ValueError):
        apply_dmc((0, 9), TransitionMatrix.identity(9), 0)
    with pytest.raises(ValueError):
        apply_dmc((-1,), TransitionMatrix.identity(9), 0)


def test_symmetric_demo_matrix():
    m = TransitionMatrix.symmetric(5, 0.2)
    assert np.allclose(m.p.sum(axis=1), 1.0)
    assert m.p[0, 1] == pytest.approx(0.2) and m.p[4, 3] == pytest.approx(0.2)
    assert m.p[2, 1] == m.p[2, 3] == pytest.approx(0.1)
    assert np.array_equal(TransitionMatrix.symmetric(5, 0.0).p, np.eye(5))


def test_noise_statistics():
    m = TransitionMatrix.symmetric(9, 0.3)
    y = (4,) * 20000
    out = np.array(apply_dmc(y, m, 1))
    assert abs((out != 4).mean() - 0.3) < 0.02
    assert set(np.unique(out)) <= {3, 4, 5}
