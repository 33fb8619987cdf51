"""Exact linear algebra over GF(q): canonical row-echelon fingerprints,
subspace equality, rank and brute-force minimum distance."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import _backend
from .codes import DEFAULT_ENUM_LIMIT, Code
from .errors import EnumerationTooLarge, FieldMismatch
from .field import FieldSpec


@dataclass(frozen=True)
class MatrixFq:
    F: FieldSpec
    entries: tuple[tuple[int, ...], ...]
    cols: int

    @classmethod
    def from_rows(cls, F: FieldSpec, rows: Sequence[Sequence[int]], cols: int | None = None) -> MatrixFq:
        entries = tuple(tuple(F.check(x) for x in row) for row in rows)
        if cols is None:
            if not entries:
                raise ValueError("cols is required for a matrix without rows")
            cols = len(entries[0])
        if any(len(row) != cols for row in entries):
            raise ValueError("all rows must have the same length")
        return cls(F, entries, cols)

    @property
    def rows(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class CodeFingerprint:
    """Reduced row-echelon form with zero rows removed; equal iff row spaces are equal."""

    F: FieldSpec
    rref: tuple[tuple[int, ...], ...]
    block_length: int

    @property
    def dimension(self) -> int:
        return len(self.rref)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(c for c, x in enumerate(row) if x) for row in self.rref)


@dataclass(frozen=True)
class DistanceReport:
    d: int
    N: int
    k: int
    messages_scanned: int

    @property
    def is_mds(self) -> bool:
        return self.d == self.N - self.k + 1

    def format(self) -> str:
        return f"d={self.d} N={self.N} k={self.k} mds={str(self.is_mds).lower()}"


def rref(M: MatrixFq, backend: str | None = None) -> CodeFingerprint:
    rows = _backend.rref(M.F, [list(r) for r in M.entries], M.cols, backend)
    return CodeFingerprint(M.F, tuple(map(tuple, rows)), M.cols)


def rank(M: MatrixFq, backend: str | None = None) -> int:
    return rref(M, backend).dimension


def generator(code: Code) -> MatrixFq:
    return MatrixFq(code.F, tuple(map(tuple, code.generator_matrix())), code.N)


def fingerprint(code: Code, backend: str | None = None) -> CodeFingerprint:
    return rref(generator(code), backend)


def _same_field(A: Code, B: Code) -> None:
    if A.F != B.F:
        raise FieldMismatch(f"{A.F!r} vs {B.F!r}")


def codes_equal(A: Code, B: Code, backend: str | None = None) -> bool:
    """Literal equality of the generated subspaces."""
    _same_field(A, B)
    if A.N != B.N:
        return False
    return fingerprint(A, backend) == fingerprint(B, backend)


def codeword_set(code: Code, limit: int = DEFAULT_ENUM_LIMIT, backend: str | None = None) -> set:
    """Every codeword, as a set of tuples."""
    total = code.q**code.k
    if total > limit:
        raise EnumerationTooLarge(f"q^k = {total} exceeds limit {limit}")
    return _backend.span(code.F, code.generator_matrix(), code.N, backend)


def codes_equal_by_enumeration(A: Code, B: Code, limit: int = DEFAULT_ENUM_LIMIT,
                               backend: str | None = None) -> bool:
    """Set comparison of all codewords; independent of elimination."""
    _same_field(A, B)
    if A.N != B.N:
        return False
    return codeword_set(A, limit, backend) == codeword_set(B, limit, backend)


def min_distance(code: Code, limit: int = DEFAULT_ENUM_LIMIT, backend: str | None = None) -> DistanceReport:
    """Exact minimum Hamming distance by enumerating the message space.

    Weight is invariant under scaling, so one message per line through the
    origin is enough: (q^k - 1)/(q - 1) words are actually inspected.
    """
    total = code.q**code.k
    if total > limit:
        raise EnumerationTooLarge(f"q^k = {total} exceeds limit {limit}")
    d, scanned = _backend.min_weight(code.F, code.generator_matrix(), code.N, backend)
    return DistanceReport(d, code.N, code.k, scanned)
