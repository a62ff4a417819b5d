"""Compiled and numpy kernels must agree bit for bit."""
import importlib

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from udcodes import _kernels_py, kernels

try:
    compiled = importlib.import_module("udcodes._kernels")
except ImportError:
    compiled = None

IMPLS = [_kernels_py] + ([compiled] if compiled is not None else [])
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")

user_keys = st.lists(hnp.arrays(np.int64, st.integers(1, 4), elements=st.integers(0, 30)),
                     min_size=1, max_size=5)
point_sets = hnp.arrays(np.int64, st.tuples(st.integers(2, 40), st.integers(1, 4)),
                        elements=st.integers(-5, 5))


def test_dispatch_reports_implementation():
    assert kernels.IMPLEMENTATION in ("cython", "python")


@pytest.mark.parametrize("impl", IMPLS, ids=lambda m: m.IMPLEMENTATION)
def test_tuple_sum_keys_order(impl):
    keys = impl.tuple_sum_keys([np.array([0, 10]), np.array([0, 1, 2])])
    assert keys.tolist() == [0, 1, 2, 10, 11, 12]


@pytest.mark.parametrize("impl", IMPLS, ids=lambda m: m.IMPLEMENTATION)
def test_find_collision(impl):
    assert impl.find_collision([np.array([0, 10]), np.array([0, 1, 2])]) is None
    assert impl.find_collision([np.array([0, 1]), np.array([0, 1])]) == (1, 2)


@pytest.mark.parametrize("impl", IMPLS, ids=lambda m: m.IMPLEMENTATION)
def test_min_l1_pairwise(impl):
    assert impl.min_l1_pairwise(np.array([[0, 0], [3, 1], [1, 4]])) == 4
    assert impl.min_l1_pairwise(np.array([[0, 0], [3, 1], [0, 0]])) == 0
    with pytest.raises(ValueError):
        impl.min_l1_pairwise(np.array([[0, 0]]))


@needs_compiled
@settings(max_examples=300, deadline=None)
@given(user_keys)
def test_enumeration_kernels_agree(keys):
    assert np.array_equal(compiled.tuple_sum_keys(keys), _kernels_py.tuple_sum_keys(keys))
    assert compiled.find_collision(keys) == _kernels_py.find_collision(keys)


@needs_compiled
@settings(max_examples=200, deadline=None)
@given(point_sets)
def test_pairwise_kernels_agree(points):
    assert compiled.min_l1_pairwise(points) == _kernels_py.min_l1_pairwise(points)


@pytest.mark.parametrize("impl", IMPLS, ids=lambda m: m.IMPLEMENTATION)
def test_large_block_pairwise(impl):
    rng = np.random.default_rng(3)
    pts = rng.permutation(np.arange(3000))[:, None] * 3
    assert impl.min_l1_pairwise(pts) == 3
