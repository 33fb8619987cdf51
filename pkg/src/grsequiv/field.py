"""Exact arithmetic in GF(p^m).

Field elements are plain ints in ``range(q)``.  An element ``a`` stands for
the residue polynomial ``sum(c_i X^i)`` whose base-p digits (little-endian)
are ``c_i``, taken modulo the monic irreducible ``reduction`` polynomial.

Multiplication is defined by residue-polynomial arithmetic
(:meth:`FieldSpec.mul_definitional`).  For ``q <= 2**16`` a log/antilog pair
is built from that definition and used as the fast path; tests check the two
agree bit for bit.
"""

from __future__ import annotations

import itertools
from array import array
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .errors import DegreeMismatch, DivisionByZero, ElementOutOfRange, NotIrreducible, NotPrime

LOG_TABLE_MAX_Q = 1 << 16
# Flat q*q tables for the compiled kernels are only built up to this order.
TABLE_MAX_Q = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over GF(p), little-endian int lists ---------------------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _gfp_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo monic b over GF(p)."""
    r = list(a)
    db = len(b) - 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            shift = i - db
            for j in range(db + 1):
                r[shift + j] = (r[shift + j] - c * b[j]) % p
    return _trim(r[:db])


def _monic_polys(p: int, degree: int):
    """All monic polynomials of the given degree, in lexicographic (c_0, ..., c_{d-1}) order."""
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(poly) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for divisor in _monic_polys(p, d):
            if not _gfp_mod(poly, divisor, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m, comparing (c_0, ..., c_{m-1})."""
    for cand in _monic_polys(p, m):
        if is_irreducible(cand, p):
            return tuple(cand)
    raise NotIrreducible(f"no irreducible polynomial of degree {m} over GF({p})")  # unreachable


class FieldTables(NamedTuple):
    """Flat row-major q*q operation tables plus an inverse table (inv[0] = 0)."""

    q: int
    add: array
    sub: array
    mul: array
    inv: array


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) described by (p, m, reduction).  Immutable; equality on the triple."""

    p: int
    m: int
    reduction: tuple[int, ...] = ()
    q: int = field(init=False)
    _exp: list = field(init=False, repr=False, compare=False)
    _log: list = field(init=False, repr=False, compare=False)
    _cache: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "reduction", tuple(self.reduction))
        object.__setattr__(self, "q", self.p**self.m)
        object.__setattr__(self, "_cache", {})
        exp, log = ([], []) if self.q > LOG_TABLE_MAX_Q else self._build_log_tables()
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, reduction={list(self.reduction)})"

    # --- packing ---------------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def pack(self, digits: Sequence[int]) -> int:
        v = 0
        for c in reversed(digits):
            v = v * self.p + c
        return v

    def check(self, a) -> int:
        if isinstance(a, bool) or not isinstance(a, int) or not 0 <= a < self.q:
            raise ElementOutOfRange(f"{a!r} is not an element of {self!r}")
        return a

    def elements(self) -> range:
        return range(self.q)

    # --- additive structure ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        return self.pack([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        if self.p == 2:
            return a
        p = self.p
        return self.pack([-x % p for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    # --- multiplicative structure ----------------------------------------------

    def mul_definitional(self, a: int, b: int) -> int:
        """Product of residue polynomials reduced modulo ``reduction``."""
        if self.m == 1:
            return a * b % self.p
        p = self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return self.pack(_gfp_mod(prod, self.reduction, p))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log:
            s = self._log[a] + self._log[b]
            if s >= self.q - 1:
                s -= self.q - 1
            return self._exp[s]
        return self.mul_definitional(a, b)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent; use inv()")
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self!r}")
        if self._log:
            return self._exp[(-self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # --- tables ------------------------------------------------------------------

    def _build_log_tables(self):
        q = self.q
        if q == 2:
            return [1], [0, 0]
        order = q - 1
        factors = _prime_factors(order)
        for g in range(2, q):
            if all(self._pow_definitional(g, order // r) != 1 for r in factors):
                break
        exp = [1] * order
        for i in range(1, order):
            exp[i] = self.mul_definitional(exp[i - 1], g)
        log = [0] * q
        for i, x in enumerate(exp):
            log[x] = i
        return exp, log

    def _pow_definitional(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self.mul_definitional(result, a)
            a = self.mul_definitional(a, a)
            e >>= 1
        return result

    def tables(self) -> FieldTables:
        """Flat operation tables for the compiled kernels (q <= TABLE_MAX_Q)."""
        cached = self._cache.get("tables")
        if cached is not None:
            return cached
        q = self.q
        if q > TABLE_MAX_Q:
            raise ValueError(f"flat tables are limited to q <= {TABLE_MAX_Q}")
        els = range(q)
        add = array("i", [self.add(a, b) for a in els for b in els])
        neg = [self.neg(b) for b in els]
        sub = array("i", [add[a * q + neg[b]] for a in els for b in els])
        mul = array("i", [self.mul(a, b) for a in els for b in els])
        inv = array("i", [0] + [self.inv(a) for a in range(1, q)])
        t = FieldTables(q, add, sub, mul, inv)
        self._cache["tables"] = t
        return t

    def to_dict(self) -> dict:
        d = {"p": self.p, "m": self.m}
        if self.m > 1:
            d["reduction"] = list(self.reduction)
        return d


def field_new(p: int, m: int = 1, reduction: Sequence[int] | None = None) -> FieldSpec:
    """Build and validate GF(p^m).

    With ``reduction`` omitted and ``m > 1`` the lexicographically smallest
    monic irreducible of degree ``m`` is chosen, so the same (p, m) always
    yields the same arithmetic.

    >>> field_new(2, 2).reduction
    (1, 1, 1)
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if not isinstance(m, int) or m < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
    if reduction is None:
        return FieldSpec(p, m, smallest_irreducible(p, m) if m > 1 else ())
    red = [int(c) for c in reduction]
    if len(red) != m + 1:
        raise DegreeMismatch(f"reduction must have {m + 1} coefficients, got {len(red)}")
    if any(not 0 <= c < p for c in red):
        raise DegreeMismatch(f"reduction coefficients must lie in [0, {p})")
    if red[-1] != 1:
        raise DegreeMismatch("reduction polynomial must be monic")
    if not is_irreducible(red, p):
        raise NotIrreducible(f"{red} is reducible over GF({p})")
    return FieldSpec(p, m, tuple(red) if m > 1 else ())


def gf(q: int) -> FieldSpec:
    """GF(q) with the default reduction polynomial, for q a prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise NotPrime(f"{q} is not a prime power")
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1 or not is_prime(p):
        raise NotPrime(f"{q} is not a prime power")
    return field_new(p, m)
