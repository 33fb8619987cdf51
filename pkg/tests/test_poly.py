import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grsequiv import Poly, gf
from grsequiv.errors import DegreeTooHigh, ElementOutOfRange, FieldMismatch

from oracles import naive_eval

F5 = gf(5)


def P(*c, F=F5):
    return Poly(F, c)


def test_canonical_form():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P(0, 0).coeffs == ()
    assert P().degree == -1
    assert P(3).coefficient(7) == 0


def test_eval_examples():
    assert P(1, 2).eval(3) == 2
    assert P(1, 1)(1) == 2
    for c in range(5):
        assert all(P(c).eval(a) == c for a in range(5))
    assert P().eval(4) == 0


def test_shift_examples():
    assert P(1, 2).shift(3) == P(2, 2)
    assert P(0, 0, 1).shift(1) == P(1, 2, 1)
    f = P(4, 0, 3, 1)
    assert f.shift(0) == f


def test_scale_examples():
    assert P(1, 2).scale(3) == P(3, 1)
    assert P(1, 2).scale(1) == P(1, 2)
    assert P(1, 2).scale(0).is_zero()


def test_reverse_examples():
    assert P(1, 2, 0).reverse(3) == P(0, 2, 1)
    assert P(1, 1).reverse(2) == P(1, 1)
    assert P(1, 2).reverse(2) == P(2, 1)
    # a constant still reverses inside the k-window
    assert P(3).reverse(3) == P(0, 0, 3)
    assert P(1, 2).reverse(3).coefficient(2) == 1  # leading coefficient picks up f_0


def test_twisted_reverse_examples():
    assert P(1, 2).twisted_reverse(2, 3) == P(2, 2)
    for g in range(5):
        assert P(0, 1).twisted_reverse(2, g).eval(0) == 1
    f = P(4, 1, 3)
    assert f.twisted_reverse(3, 0) == f.reverse(3)


def test_window_errors():
    with pytest.raises(DegreeTooHigh):
        P(1, 2, 3).reverse(2)
    with pytest.raises(DegreeTooHigh):
        P(1, 2, 3).twisted_reverse(2, 1)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        P(1) + Poly(gf(7), (1,))
    with pytest.raises(ElementOutOfRange):
        P(1, 2).eval(5)
    with pytest.raises(FieldMismatch):
        P(1, 2).shift(9)


FIELDS = [gf(q) for q in (2, 3, 4, 5, 7, 8, 9)]


def _polys(F, k):
    return [Poly(F, c) for c in itertools.product(range(F.q), repeat=k)]


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_shift_exhaustive(F):
    k = 3 if F.q <= 5 else 2
    for f in _polys(F, k):
        for a in F.elements():
            h = f.shift(a)
            assert h.degree == f.degree
            for x in F.elements():
                assert h.eval(x) == naive_eval(F, f.coeffs, F.add(x, a))


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_twisted_reverse_identity(F):
    """g(x) = x^(k-1) f((1 + gamma x) / x) for x != 0."""
    for k in (1, 2, 3):
        for f in _polys(F, k)[:: max(1, F.q ** k // 150)]:
            for gamma in F.elements():
                g = f.twisted_reverse(k, gamma)
                assert g.degree <= k - 1
                assert g.eval(0) == f.coefficient(k - 1)
                for x in range(1, F.q):
                    t = F.mul(F.add(1, F.mul(gamma, x)), F.inv(x))
                    expect = F.mul(F.pow(x, k - 1), naive_eval(F, f.coeffs, t))
                    assert g.eval(x) == expect


coeff = st.integers(0, 8)
F9 = gf(9)


@given(st.lists(coeff, max_size=6), st.integers(1, 8))
def test_reverse_involution(c, extra):
    f = Poly(F9, c)
    k = max(len(f.coeffs), 1) + extra % 3
    assert f.reverse(k).reverse(k) == f


@given(st.lists(coeff, max_size=5), coeff, coeff)
def test_shift_composes(c, a, b):
    f = Poly(F9, c)
    assert f.shift(a).shift(b) == f.shift(F9.add(a, b))


@given(st.lists(coeff, max_size=5), coeff, coeff)
def test_scale_composes(c, lam, mu):
    f = Poly(F9, c)
    assert f.scale(lam).scale(mu) == f.scale(F9.mul(lam, mu))


@given(st.lists(coeff, max_size=4), st.lists(coeff, max_size=4), coeff)
def test_ring_ops_evaluate_pointwise(a, b, x):
    f, g = Poly(F9, a), Poly(F9, b)
    assert (f * g).eval(x) == F9.mul(f.eval(x), g.eval(x))
    assert (f - g).eval(x) == F9.sub(f.eval(x), g.eval(x))
