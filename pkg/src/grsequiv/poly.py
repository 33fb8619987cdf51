"""Univariate polynomials over GF(q) and the substitutions used to move
messages between equivalent GRS/EGRS descriptors.

Coefficients are stored little-endian and trimmed, so the zero polynomial has
``coeffs == ()`` and ``degree == -1``.  Operations that live on the message
space ``{f : deg f <= k-1}`` take ``k`` explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DegreeTooHigh, FieldMismatch
from .field import FieldSpec


@dataclass(frozen=True)
class Poly:
    F: FieldSpec
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [self.F.check(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def zero(cls, F: FieldSpec) -> Poly:
        return cls(F, ())

    @classmethod
    def monomial(cls, F: FieldSpec, i: int, c: int = 1) -> Poly:
        return cls(F, (0,) * i + (c,))

    @property
    def degree(self) -> int:
        """-1 stands in for the degree of the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def window(self, k: int) -> list[int]:
        """Coefficient vector of length k (f_0, ..., f_{k-1})."""
        self._check_window(k)
        return [self.coefficient(i) for i in range(k)]

    def _check_window(self, k: int) -> None:
        if k < 1:
            raise ValueError(f"k must be positive, got {k}")
        if self.degree > k - 1:
            raise DegreeTooHigh(f"degree {self.degree} exceeds k-1 = {k - 1}")

    def _same_field(self, other: Poly) -> None:
        if other.F != self.F:
            raise FieldMismatch(f"{self.F!r} vs {other.F!r}")

    # --- ring operations ------------------------------------------------------

    def __add__(self, other: Poly) -> Poly:
        self._same_field(other)
        F = self.F
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, tuple(F.add(self.coefficient(i), other.coefficient(i)) for i in range(n)))

    def __neg__(self) -> Poly:
        return Poly(self.F, tuple(self.F.neg(c) for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._same_field(other)
        F = self.F
        if self.is_zero() or other.is_zero():
            return Poly.zero(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, tuple(out))

    def mul_x(self, e: int) -> Poly:
        """Multiply by x**e."""
        if self.is_zero():
            return self
        return Poly(self.F, (0,) * e + self.coeffs)

    # --- evaluation and substitutions -----------------------------------------

    def eval(self, a: int) -> int:
        F = self.F
        F.check(a)
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, a), c)
        return acc

    __call__ = eval

    def scale(self, lam: int) -> Poly:
        F = self.F
        F.check(lam)
        return Poly(F, tuple(F.mul(lam, c) for c in self.coeffs))

    def shift(self, a: int) -> Poly:
        """Return h with h(x) = f(x + a), by Horner's rule on polynomials."""
        F = self.F
        F.check(a)
        lin = Poly(F, (a, 1))
        acc = Poly.zero(F)
        for c in reversed(self.coeffs):
            acc = acc * lin + Poly(F, (c,))
        return acc

    def reverse(self, k: int) -> Poly:
        """sum f_i x^(k-1-i): reversal inside the length-k coefficient window."""
        return Poly(self.F, tuple(reversed(self.window(k))))

    def twisted_reverse(self, k: int, gamma: int) -> Poly:
        """sum f_i (1 + gamma x)^i x^(k-1-i).

        Constant term equals f_{k-1}; with gamma = 0 this is :meth:`reverse`.
        """
        F = self.F
        F.check(gamma)
        f = self.window(k)
        twist = Poly(F, (1, gamma))
        power = Poly(F, (1,))
        acc = Poly.zero(F)
        for i, c in enumerate(f):
            if c:
                acc = acc + power.scale(c).mul_x(k - 1 - i)
            power = power * twist
        return acc


def poly_from(F: FieldSpec, coeffs: Iterable[int]) -> Poly:
    return Poly(F, tuple(coeffs))
