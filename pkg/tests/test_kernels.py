"""Compiled and pure-Python kernels must agree bit for bit."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grsequiv import _backend, _pykernels, gf
from grsequiv.field import TABLE_MAX_Q, field_new

pytestmark = pytest.mark.skipif(not _backend.NATIVE_AVAILABLE, reason="compiled kernels not built")

QS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32]


def matrices(q, max_rows=4, max_cols=7):
    el = st.integers(0, q - 1)
    return st.integers(0, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.tuples(st.just(c), st.lists(st.lists(el, min_size=c, max_size=c), min_size=r, max_size=r))
        )
    )


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(QS), st.data())
def test_rref_agrees(q, data):
    F = gf(q)
    cols, rows = data.draw(matrices(q))
    assert _backend.rref(F, rows, cols, "cython") == _pykernels.rref(F, rows, cols)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(QS), st.data())
def test_span_and_weight_agree(q, data):
    F = gf(q)
    cols, rows = data.draw(matrices(q, max_rows=3 if q <= 9 else 2, max_cols=6))
    assert _backend.span(F, rows, cols, "cython") == _pykernels.span(F, rows, cols)
    assert _backend.min_weight(F, rows, cols, "cython") == _pykernels.min_weight(F, rows, cols)


def test_large_field_routes_to_python():
    F = field_new(2, 11)  # q = 2048 > TABLE_MAX_Q
    assert F.q > TABLE_MAX_Q
    rows = [[1, 5, 2000], [3, 7, 11]]
    assert _backend.rref(F, rows, 3, "cython") == _pykernels.rref(F, rows, 3)


def test_ragged_matrix_rejected():
    with pytest.raises(ValueError):
        _backend.rref(gf(5), [[1, 2], [3]], 2, "cython")


def test_unknown_backend():
    with pytest.raises(ValueError):
        _backend.rref(gf(5), [[1]], 1, "fortran")
