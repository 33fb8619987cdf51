"""GRS and extended GRS code descriptors, encoders and generator matrices.

A message is the coefficient vector ``(f_0, ..., f_{k-1})`` of a polynomial
of degree at most k-1.  A GRS code sends it to ``(v_i f(alpha_i))_i``; the
extended code appends ``f_{k-1}`` as one more coordinate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .errors import (
    BadDimension,
    BadMessageLength,
    DuplicateEvaluationPoint,
    EnumerationTooLarge,
    LengthExceedsField,
    ZeroMultiplier,
)
from .field import FieldSpec
from .poly import Poly

DEFAULT_ENUM_LIMIT = 1 << 22

Codeword = tuple  # tuple of N field elements


@dataclass(frozen=True)
class _EvaluationCode:
    F: FieldSpec
    k: int
    alpha: tuple[int, ...]
    v: tuple[int, ...]

    kind = ""

    def __post_init__(self):
        F = self.F
        object.__setattr__(self, "alpha", tuple(F.check(a) for a in self.alpha))
        object.__setattr__(self, "v", tuple(F.check(x) for x in self.v))
        if len(self.alpha) != len(self.v):
            raise BadDimension(f"alpha has {len(self.alpha)} entries but v has {len(self.v)}")
        if self.n > F.q:
            raise LengthExceedsField(f"{self.n} evaluation points exceed q = {F.q}")
        self._check_dimension()
        seen = {}
        for i, a in enumerate(self.alpha):
            if a in seen:
                raise DuplicateEvaluationPoint(
                    f"evaluation point {a} repeated", indices=(seen[a], i)
                )
            seen[a] = i
        for i, x in enumerate(self.v):
            if x == 0:
                raise ZeroMultiplier(f"multiplier v[{i}] is zero", index=i)

    def _check_dimension(self) -> None:
        raise NotImplementedError

    @property
    def n(self) -> int:
        """Number of evaluation points."""
        return len(self.alpha)

    @property
    def N(self) -> int:
        """Block length."""
        raise NotImplementedError

    @property
    def q(self) -> int:
        return self.F.q

    def _message(self, msg: Sequence[int] | Poly) -> Poly:
        if isinstance(msg, Poly):
            return Poly(self.F, tuple(msg.window(self.k)))
        if len(msg) != self.k:
            raise BadMessageLength(f"expected {self.k} message symbols, got {len(msg)}")
        return Poly(self.F, tuple(msg))

    def _evaluations(self, f: Poly) -> list[int]:
        mul = self.F.mul
        return [mul(vi, f.eval(a)) for a, vi in zip(self.alpha, self.v)]

    def encode(self, msg: Sequence[int] | Poly) -> Codeword:
        raise NotImplementedError

    def generator_matrix(self) -> list[list[int]]:
        """k x N matrix whose row i encodes the monomial x^i."""
        unit = [0] * self.k
        rows = []
        for i in range(self.k):
            unit[i] = 1
            rows.append(list(self.encode(unit)))
            unit[i] = 0
        return rows

    def codewords(self, limit: int = DEFAULT_ENUM_LIMIT) -> Iterator[Codeword]:
        """Every codeword, encoding messages in lexicographic value order."""
        total = self.q**self.k
        if total > limit:
            raise EnumerationTooLarge(f"q^k = {total} exceeds limit {limit}")
        for msg in itertools.product(range(self.q), repeat=self.k):
            yield self.encode(msg)

    def to_dict(self) -> dict:
        return {
            "field": self.F.to_dict(),
            "kind": self.kind,
            "k": self.k,
            "alpha": list(self.alpha),
            "v": list(self.v),
        }


@dataclass(frozen=True)
class GrsCode(_EvaluationCode):
    kind = "grs"

    def _check_dimension(self) -> None:
        if not 1 <= self.k <= self.n:
            raise BadDimension(f"need 1 <= k <= n, got k={self.k}, n={self.n}")

    @property
    def N(self) -> int:
        return self.n

    def encode(self, msg: Sequence[int] | Poly) -> Codeword:
        return tuple(self._evaluations(self._message(msg)))


@dataclass(frozen=True)
class EgrsCode(_EvaluationCode):
    kind = "egrs"

    def _check_dimension(self) -> None:
        # k = n+1 is allowed: n values plus the leading coefficient still pin down f.
        # n = q (block length q+1) is a valid descriptor but cannot be converted.
        if self.n < 1:
            raise BadDimension("an extended code needs at least one evaluation point")
        if not 1 <= self.k <= self.n + 1:
            raise BadDimension(f"need 1 <= k <= n+1, got k={self.k}, n={self.n}")

    @property
    def N(self) -> int:
        return self.n + 1

    def encode(self, msg: Sequence[int] | Poly) -> Codeword:
        f = self._message(msg)
        return tuple(self._evaluations(f)) + (f.coefficient(self.k - 1),)


Code = Union[GrsCode, EgrsCode]


def grs_new(F: FieldSpec, k: int, alpha: Sequence[int], v: Sequence[int]) -> GrsCode:
    return GrsCode(F, k, tuple(alpha), tuple(v))


def egrs_new(F: FieldSpec, k: int, alpha: Sequence[int], v: Sequence[int]) -> EgrsCode:
    return EgrsCode(F, k, tuple(alpha), tuple(v))


def encode_grs(code: GrsCode, msg: Sequence[int]) -> Codeword:
    return code.encode(msg)


def encode_egrs(code: EgrsCode, msg: Sequence[int]) -> Codeword:
    return code.encode(msg)


def generator_matrix(code: Code) -> list[list[int]]:
    return code.generator_matrix()


def codewords(code: Code, limit: int = DEFAULT_ENUM_LIMIT) -> Iterator[Codeword]:
    return code.codewords(limit)


def code_from_dict(doc: dict, F: FieldSpec) -> Code:
    cls = {"grs": GrsCode, "egrs": EgrsCode}[doc["kind"]]
    return cls(F, doc["k"], tuple(doc["alpha"]), tuple(doc["v"]))


__all__ = [
    "Code",
    "Codeword",
    "DEFAULT_ENUM_LIMIT",
    "EgrsCode",
    "GrsCode",
    "code_from_dict",
    "codewords",
    "egrs_new",
    "encode_egrs",
    "encode_grs",
    "generator_matrix",
    "grs_new",
]
