"""Deterministic code sweeps for the acceptance suite.

For q <= 4 every ordered tuple of distinct evaluation points is used (cycled
up to INSTANCES when there are fewer); larger fields draw INSTANCES random
point sets.  Each (kind, q, n, k) cell has its own string-seeded RNG so cells
are reproducible independently.
"""

import functools
import itertools
import random

from grsequiv import ShiftScaleParams, egrs_new, egrs_to_grs, gf, grs_new, grs_to_egrs, shift_scale

QS = (2, 3, 4, 5, 7, 8, 9)
INSTANCES = 20


def _instances(F, n, rng):
    q = F.q
    if q <= 4:
        alphas = list(itertools.permutations(range(q), n))
        picks = [alphas[i % len(alphas)] for i in range(max(INSTANCES, len(alphas)))]
    else:
        picks = [tuple(rng.sample(range(q), n)) for _ in range(INSTANCES)]
    return [(a, tuple(rng.randrange(1, q) for _ in range(n))) for a in picks]


@functools.cache
def grs_sweep():
    out = []
    for q in QS:
        F = gf(q)
        for n in range(2, q + 1):
            for k in range(1, n + 1):
                rng = random.Random(f"grs-{q}-{n}-{k}")
                out.extend(grs_new(F, k, a, v) for a, v in _instances(F, n, rng))
    return tuple(out)


@functools.cache
def egrs_sweep():
    out = []
    for q in QS:
        F = gf(q)
        for n in range(1, q):
            for k in range(1, n + 2):
                rng = random.Random(f"egrs-{q}-{n}-{k}")
                out.extend(egrs_new(F, k, a, v) for a, v in _instances(F, n, rng))
    return tuple(out)


@functools.cache
def forward_pairs():
    return tuple((c, grs_to_egrs(c)) for c in grs_sweep())


@functools.cache
def backward_pairs():
    pairs = []
    for e in egrs_sweep():
        for gamma in sorted(set(e.F.elements()) - set(e.alpha)):
            pairs.append((e, egrs_to_grs(e, gamma)))
    return tuple(pairs)


@functools.cache
def shift_panel():
    out = []
    for q in (5, 7):
        F = gf(q)
        rng = random.Random(f"panel-{q}")
        for i in range(12):
            n = 2 + i % (q - 1)
            k = 1 + i % n
            out.append(grs_new(F, k, rng.sample(range(q), n), [rng.randrange(1, q) for _ in range(n)]))
    return tuple(out)


@functools.cache
def shift_pairs():
    pairs = []
    for c in shift_panel():
        for a in c.F.elements():
            for lam in range(1, c.q):
                pairs.append((c, shift_scale(c, ShiftScaleParams(a, lam))))
    return tuple(pairs)
