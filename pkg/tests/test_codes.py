import itertools

import pytest

from grsequiv import egrs_new, gf, grs_new
from grsequiv.analysis import generator, rank
from grsequiv.codes import codewords, encode_egrs, encode_grs, generator_matrix
from grsequiv.errors import (
    BadDimension,
    BadMessageLength,
    DuplicateEvaluationPoint,
    ElementOutOfRange,
    EnumerationTooLarge,
    LengthExceedsField,
    ZeroMultiplier,
)

from oracles import encoder_words

F2, F5, F9 = gf(2), gf(5), gf(9)


def test_construct_examples():
    c = grs_new(F5, 2, (1, 2, 0), (1, 1, 1))
    assert (c.n, c.N, c.k) == (3, 3, 2)
    e = egrs_new(F5, 3, (1, 2), (1, 1))
    assert (e.n, e.N, e.k) == (2, 3, 3)


def test_doubly_extended_length_q_plus_1():
    e = egrs_new(F5, 6, (0, 1, 2, 3, 4), (1,) * 5)
    assert e.N == 6
    assert len(set(e.codewords())) == 5**6


def test_egrs_k_equals_n_plus_1_is_injective():
    e = egrs_new(F5, 3, (1, 2), (1, 1))
    words = [e.encode(m) for m in itertools.product(range(5), repeat=3)]
    assert len(set(words)) == 125


@pytest.mark.parametrize(
    "ctor,args,exc",
    [
        (grs_new, (2, (1, 1), (1, 1)), DuplicateEvaluationPoint),
        (grs_new, (2, (1, 2), (1, 0)), ZeroMultiplier),
        (grs_new, (3, (1, 2), (1, 1)), BadDimension),
        (grs_new, (0, (1, 2), (1, 1)), BadDimension),
        (grs_new, (1, (0, 1, 2, 3, 4, 4), (1,) * 6), LengthExceedsField),
        (grs_new, (1, (0, 1), (1,)), BadDimension),
        (grs_new, (1, (0, 5), (1, 1)), ElementOutOfRange),
        (egrs_new, (4, (1, 2), (1, 1)), BadDimension),
        (egrs_new, (1, (0, 1, 2, 3, 4, 4), (1,) * 6), LengthExceedsField),
        (egrs_new, (1, (), ()), BadDimension),
    ],
)
def test_construct_errors(ctor, args, exc):
    with pytest.raises(exc):
        ctor(F5, *args)


def test_diagnostic_indices():
    with pytest.raises(DuplicateEvaluationPoint) as info:
        grs_new(F5, 1, (3, 1, 3), (1, 1, 1))
    assert info.value.indices == (0, 2)
    assert info.value.diagnostic().startswith("DuplicateEvaluationPoint indices=0,2")
    with pytest.raises(ZeroMultiplier) as info:
        grs_new(F5, 1, (3, 1, 2), (1, 1, 0))
    assert info.value.diagnostic().startswith("ZeroMultiplier index=2")


def test_encode_examples():
    c = grs_new(F5, 2, (1, 2, 0), (1, 1, 1))
    assert encode_grs(c, [1, 1]) == (2, 3, 1)
    assert encode_grs(c, [0, 0]) == (0, 0, 0)
    assert encode_grs(c, [0, 1]) == (1, 2, 0)
    e = egrs_new(F5, 2, (1, 2), (1, 1))
    assert encode_egrs(e, [1, 1]) == (2, 3, 1)
    assert encode_egrs(e, [0, 0]) == (0, 0, 0)
    assert encode_egrs(e, [1, 0]) == (1, 1, 0)
    with pytest.raises(BadMessageLength):
        c.encode([1, 2, 3])


def test_generator_matrix_examples():
    assert generator_matrix(grs_new(F5, 1, (0, 1), (1, 1))) == [[1, 1]]
    assert generator_matrix(grs_new(F5, 2, (1, 2, 0), (1, 1, 1))) == [[1, 1, 1], [1, 2, 0]]
    assert generator_matrix(egrs_new(F5, 2, (1, 2), (1, 1))) == [[1, 1, 0], [1, 2, 1]]


def test_codewords_examples():
    assert set(codewords(grs_new(F2, 1, (0, 1), (1, 1)))) == {(0, 0), (1, 1)}
    c = grs_new(F5, 2, (1, 2, 0), (1, 1, 1))
    words = list(codewords(c))
    assert len(words) == 25 and len(set(words)) == 25
    assert (2, 3, 1) in words
    assert words[0] == (0, 0, 0)
    with pytest.raises(EnumerationTooLarge):
        list(codewords(c, limit=24))


SAMPLE = [
    grs_new(F5, 2, (1, 2, 0), (1, 1, 1)),
    grs_new(F5, 3, (4, 2, 0, 1), (2, 3, 1, 4)),
    egrs_new(F5, 3, (1, 2), (1, 1)),
    egrs_new(F5, 2, (4, 3, 0), (1, 2, 3)),
    grs_new(F9, 2, (8, 3, 5, 0), (7, 1, 2, 6)),
    egrs_new(F9, 3, (1, 5, 7, 2), (3, 3, 8, 1)),
]


@pytest.mark.parametrize("code", SAMPLE, ids=repr)
def test_encoder_matches_definition(code):
    assert set(code.codewords()) == encoder_words(code)


@pytest.mark.parametrize("code", SAMPLE, ids=repr)
def test_linearity_exhaustive(code):
    F = code.F
    msgs = list(itertools.product(range(F.q), repeat=code.k))
    step = max(1, len(msgs) // 60)
    for m1 in msgs[::step]:
        c1 = code.encode(m1)
        for m2 in msgs[::step]:
            c2 = code.encode(m2)
            summed = code.encode([F.add(a, b) for a, b in zip(m1, m2)])
            assert summed == tuple(F.add(a, b) for a, b in zip(c1, c2))
        for lam in F.elements():
            scaled = code.encode([F.mul(lam, a) for a in m1])
            assert scaled == tuple(F.mul(lam, a) for a in c1)


@pytest.mark.parametrize("code", SAMPLE, ids=repr)
def test_generator_has_full_rank(code, backend):
    assert rank(generator(code), backend) == code.k
    assert len(set(code.codewords())) == code.q**code.k


def test_descriptors_are_immutable():
    c = SAMPLE[0]
    with pytest.raises(AttributeError):
        c.k = 3
