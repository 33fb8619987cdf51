"""Pure-Python reference kernels.

Used when the compiled extension is missing, when ``GRSEQUIV_PURE=1`` is set,
or for fields too large for flat tables.  Results are identical to
``_ckernels`` for every input, including the ``scanned`` counter.
"""

from __future__ import annotations

from .field import FieldSpec


def rref(F: FieldSpec, rows, ncols: int) -> list[list[int]]:
    """Gauss-Jordan elimination; zero rows are dropped."""
    M = [list(r) for r in rows]
    nrows = len(M)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        s = F.inv(M[r][c])
        prow = M[r] = [F.mul(s, x) for x in M[r]]
        for i in range(nrows):
            f = M[i][c]
            if i != r and f:
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], prow)]
        r += 1
    return M[:r]


def _scaled_rows(F: FieldSpec, rows):
    return [[tuple(F.mul(s, x) for x in row) for s in range(F.q)] for row in rows]


def _vadd(F, a, b):
    add = F.add
    return tuple(add(x, y) for x, y in zip(a, b))


def span(F: FieldSpec, rows, ncols: int) -> set[tuple[int, ...]]:
    """All linear combinations of ``rows`` (q^k words, duplicates collapse)."""
    scaled = _scaled_rows(F, rows)
    out = set()

    def walk(i, acc):
        if i == len(rows):
            out.add(acc)
            return
        for s in range(F.q):
            walk(i + 1, _vadd(F, acc, scaled[i][s]))

    walk(0, (0,) * ncols)
    return out


def min_weight(F: FieldSpec, rows, ncols: int) -> tuple[int, int]:
    """Minimum weight of a nonzero combination, scanning one message per projective point.

    Returns ``(d, scanned)``; ``d == 0`` when every combination is zero.
    """
    k = len(rows)
    scaled = _scaled_rows(F, rows)
    best = ncols + 1
    scanned = 0

    def walk(i, acc):
        nonlocal best, scanned
        if i == k:
            scanned += 1
            w = ncols - acc.count(0)
            if 0 < w < best:
                best = w
            return
        for s in range(F.q):
            walk(i + 1, _vadd(F, acc, scaled[i][s]))

    for j in range(k):
        # leading nonzero message symbol fixed to 1
        walk(j + 1, scaled[j][1])
    return (best if best <= ncols else 0), scanned
