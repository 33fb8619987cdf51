"""Constructive conversions between GRS and extended GRS descriptors.

Each conversion returns a fresh descriptor generating the same subspace of
GF(q)^N as its input; only the subspace is invariant, not the (alpha, v)
parameterisation.  The ``*_message`` helpers map an input message to the
output message that produces the identical codeword, which makes the
equalities checkable symbol by symbol.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .codes import EgrsCode, GrsCode
from .errors import GammaCollision, LengthTooShort, NoGammaAvailable, ZeroLambda
from .poly import Poly


@dataclass(frozen=True)
class ShiftScaleParams:
    """Translate every evaluation point by -a and multiply every weight by lam."""

    a: int
    lam: int

    def __post_init__(self):
        if self.lam == 0:
            raise ZeroLambda("the global multiplier must be nonzero")


@dataclass(frozen=True)
class GammaChoice:
    gamma: int
    provenance: Literal["default-smallest", "user-supplied"] = "default-smallest"


def shift_scale(code: GrsCode, params: ShiftScaleParams) -> GrsCode:
    F = code.F
    F.check(params.a)
    F.check(params.lam)
    beta = tuple(F.sub(a, params.a) for a in code.alpha)
    w = tuple(F.mul(params.lam, x) for x in code.v)
    return GrsCode(F, code.k, beta, w)


def normalization_params(code: GrsCode) -> ShiftScaleParams:
    return ShiftScaleParams(code.alpha[-1], code.F.inv(code.v[-1]))


def normalize(code: GrsCode) -> GrsCode:
    """Move the last evaluation point to 0 and the last weight to 1."""
    return shift_scale(code, normalization_params(code))


def shift_scale_message(code: GrsCode, params: ShiftScaleParams, msg: Sequence[int]) -> list[int]:
    """g = lam^-1 f(x + a); encodes under shift_scale(code, params) to the same word as f under code."""
    F = code.F
    f = Poly(F, tuple(msg))
    return f.shift(params.a).scale(F.inv(params.lam)).window(code.k)


def grs_to_egrs(code: GrsCode) -> EgrsCode:
    """Rewrite a GRS code of length n >= 2 as an extended code on n-1 points.

    After normalisation the last point is 0, so the remaining points are
    invertible; inverting them and weighting by alpha^(k-1) turns the
    evaluation at 0 into the leading-coefficient coordinate.
    """
    if code.n < 2:
        raise LengthTooShort(f"need n >= 2, got n = {code.n}")
    F = code.F
    c = normalize(code)
    e = code.k - 1
    beta = tuple(F.inv(a) for a in c.alpha[:-1])
    w = tuple(F.mul(x, F.pow(a, e)) for a, x in zip(c.alpha[:-1], c.v[:-1]))
    return EgrsCode(F, code.k, beta, w)


def grs_to_egrs_message(code: GrsCode, msg: Sequence[int]) -> list[int]:
    """Message for ``grs_to_egrs(code)`` that yields the codeword of ``msg`` under ``code``."""
    g = shift_scale_message(code, normalization_params(code), msg)
    return Poly(code.F, tuple(g)).reverse(code.k).window(code.k)


def choose_gamma(code: EgrsCode, gamma: int | None = None) -> GammaChoice:
    """Pick a field element outside the evaluation set (smallest by default)."""
    F = code.F
    used = set(code.alpha)
    if gamma is not None:
        F.check(gamma)
        if gamma in used:
            raise GammaCollision(
                f"gamma={gamma} is an evaluation point", index=code.alpha.index(gamma)
            )
        return GammaChoice(gamma, "user-supplied")
    for x in F.elements():
        if x not in used:
            return GammaChoice(x, "default-smallest")
    raise NoGammaAvailable(f"all {F.q} field elements are evaluation points")


def _as_gamma(code: EgrsCode, gamma: GammaChoice | int | None) -> int:
    if isinstance(gamma, GammaChoice):
        gamma = gamma.gamma
    return choose_gamma(code, gamma).gamma


def egrs_to_grs(code: EgrsCode, gamma: GammaChoice | int | None = None) -> GrsCode:
    """Rewrite an extended code on n points as a GRS code of length n+1.

    The point at infinity becomes the evaluation point 0; every finite point
    a is sent to (a - gamma)^-1 with weight v (a - gamma)^(k-1).
    """
    g = _as_gamma(code, gamma)
    F = code.F
    e = code.k - 1
    diffs = [F.sub(a, g) for a in code.alpha]
    beta = tuple(F.inv(d) for d in diffs) + (0,)
    w = tuple(F.mul(x, F.pow(d, e)) for d, x in zip(diffs, code.v)) + (1,)
    return GrsCode(F, code.k, beta, w)


def egrs_to_grs_message(
    code: EgrsCode, msg: Sequence[int], gamma: GammaChoice | int | None = None
) -> list[int]:
    """Message for ``egrs_to_grs(code, gamma)`` that yields the codeword of ``msg`` under ``code``."""
    g = _as_gamma(code, gamma)
    return Poly(code.F, tuple(msg)).twisted_reverse(code.k, g).window(code.k)
