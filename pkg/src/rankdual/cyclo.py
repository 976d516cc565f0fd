"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are stored as an integer numerator vector of length phi(N) over a
positive common denominator, reduced modulo the N-th cyclotomic polynomial.
The representation is canonical: ``gcd(numerators, den) == 1``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Sequence

import mpmath


class CycloError(ArithmeticError):
    pass


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Divide integer polynomials (low degree first) by a monic divisor."""
    num = list(num)
    dd = len(den) - 1
    assert den[-1] == 1
    if len(num) - 1 < dd:
        return [0], num
    q = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            q[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    rem = num[:dd] or [0]
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> tuple[int, ...]:
    """Coefficients of Phi_N, constant term first.

    Obtained by dividing X^N - 1 by Phi_d for every proper divisor d of N.
    """
    if N < 1:
        raise CycloError(f"cyclotomic order must be >= 1, got {N}")
    poly = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


def euler_phi(N: int) -> int:
    return len(cyclotomic_polynomial(N)) - 1


@lru_cache(maxsize=None)
def _power_table(N: int) -> tuple[tuple[int, ...], ...]:
    """Row k is X^k mod Phi_N for 0 <= k < N."""
    phi_poly = cyclotomic_polynomial(N)
    deg = len(phi_poly) - 1
    rows = []
    cur = [1] + [0] * (deg - 1) if deg else []
    for _ in range(N):
        rows.append(tuple(cur))
        # multiply by X and reduce the overflow coefficient
        top = cur[-1] if deg else 0
        cur = [0] + cur[:-1] if deg else []
        if top:
            for j in range(deg):
                cur[j] -= top * phi_poly[j]
    return tuple(rows)


def _normalize(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        nums = [-c for c in nums]
        den = -den
    g = den
    for c in nums:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if g > 1:
        nums = [c // g for c in nums]
        den //= g
    if not any(nums):
        den = 1
    return tuple(nums), den


class CycloNum:
    """An element of Q(zeta_N)."""

    __slots__ = ("order", "_num", "_den", "_hash")

    def __init__(self, order: int, coeffs: Sequence = ()):
        """Build from rational coefficients of 1, z, z^2, ...; any length is reduced."""
        phi = euler_phi(order)
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        ints = [f.numerator * (den // f.denominator) for f in fracs]
        if len(ints) > phi:
            ints = _reduce(order, ints)
        ints = ints + [0] * (phi - len(ints))
        self.order = order
        self._num, self._den = _normalize(ints, den)
        self._hash = None

    @classmethod
    def _raw(cls, order: int, nums: Sequence[int], den: int = 1) -> "CycloNum":
        obj = cls.__new__(cls)
        obj.order = order
        obj._num, obj._den = _normalize(list(nums), den)
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, N: int) -> "CycloNum":
        return cls._raw(N, [0] * euler_phi(N))

    @classmethod
    def one(cls, N: int) -> "CycloNum":
        return cls.rational(N, 1)

    @classmethod
    def rational(cls, N: int, q) -> "CycloNum":
        q = Fraction(q)
        nums = [0] * euler_phi(N)
        nums[0] = q.numerator
        return cls._raw(N, nums, q.denominator)

    # -- views ------------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self.order == other.order and self._num == other._num and self._den == other._den
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self._num[0] if self._num else 0, self._den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self._num, self._den))
        return self._hash

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}·z^{i}" if i > 1 else f"{c}·z")
        body = " + ".join(terms) if terms else "0"
        return f"{body} (mod Phi_{self.order})"

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.order != self.order:
                raise CycloError(f"order mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Rational)):
            return CycloNum.rational(self.order, other)
        raise TypeError(f"cannot combine CycloNum with {type(other).__name__}")

    def __add__(self, other):
        try:
            b = self._coerce(other)
        except TypeError:
            return NotImplemented
        da, db = self._den, b._den
        if da == db:
            return CycloNum._raw(self.order, [x + y for x, y in zip(self._num, b._num)], da)
        return CycloNum._raw(
            self.order, [x * db + y * da for x, y in zip(self._num, b._num)], da * db
        )

    __radd__ = __add__

    def __neg__(self):
        obj = CycloNum.__new__(CycloNum)
        obj.order, obj._num, obj._den, obj._hash = self.order, tuple(-c for c in self._num), self._den, None
        return obj

    def __sub__(self, other):
        try:
            b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CycloNum):
            q = Fraction(other)
            return CycloNum._raw(self.order, [c * q.numerator for c in self._num], self._den * q.denominator)
        try:
            b = self._coerce(other)
        except TypeError:
            return NotImplemented
        N = self.order
        conv = [0] * N
        for i, x in enumerate(self._num):
            if x:
                for j, y in enumerate(b._num):
                    if y:
                        conv[(i + j) % N] += x * y
        return CycloNum._raw(N, _reduce(N, conv), self._den * b._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        return self * b.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        return power(self, e)

    def inverse(self) -> "CycloNum":
        return inverse(self)

    def conj(self) -> "CycloNum":
        return galois(self, -1)


def _reduce(N: int, vec: Sequence[int]) -> list[int]:
    """Reduce an integer vector of powers of z (any length) modulo Phi_N."""
    table = _power_table(N)
    phi = len(table[0])
    out = [0] * phi
    for k, c in enumerate(vec):
        if c:
            row = table[k % N]
            for j, t in enumerate(row):
                if t:
                    out[j] += c * t
    return out


def zeta_pow(N: int, e: int) -> CycloNum:
    """zeta_N ** e, exponent taken mod N."""
    return _zeta_pow(N, e % N)


@lru_cache(maxsize=4096)
def _zeta_pow(N: int, e: int) -> CycloNum:
    return CycloNum._raw(N, _power_table(N)[e])


def add(a: CycloNum, b: CycloNum) -> CycloNum:
    return a + b


def mul(a: CycloNum, b: CycloNum) -> CycloNum:
    return a * b


def neg(a: CycloNum) -> CycloNum:
    return -a


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lead
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return q, _poly_trim(a[:db] or [Fraction(0)])


def _poly_sub_mul(a: list[Fraction], q: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """a - q*b."""
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        if x:
            for j, y in enumerate(b):
                out[i + j] -= x * y
    return _poly_trim(out)


def inverse(a: CycloNum) -> CycloNum:
    """Multiplicative inverse by the extended Euclidean algorithm against Phi_N."""
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero in Q(zeta)")
    N = a.order
    if a.is_rational():
        return CycloNum.rational(N, Fraction(a._den, a._num[0]))
    # work on the numerator vector; the common denominator is restored at the end
    old_r = [Fraction(c) for c in cyclotomic_polynomial(N)]
    r = _poly_trim([Fraction(c) for c in a._num])
    old_s, s = [Fraction(0)], [Fraction(1)]
    while len(r) > 1 or r[0] != 0:
        q, rem = _poly_divmod(old_r, r)
        old_r, r = r, rem
        old_s, s = s, _poly_sub_mul(old_s, q, s)
    # old_r is a nonzero constant since Phi_N is irreducible
    c = old_r[0]
    coeffs = [x / c * a._den for x in old_s]
    return CycloNum(N, coeffs)


def power(a: CycloNum, e: int) -> CycloNum:
    """Repeated squaring; negative exponents go through :func:`inverse`."""
    if e < 0:
        if a.is_zero():
            raise ZeroDivisionError("zero to a negative power")
        return power(inverse(a), -e)
    result = CycloNum.one(a.order)
    base = a
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def galois(a: CycloNum, k: int) -> CycloNum:
    """Image under the automorphism z -> z^k (k coprime to N)."""
    N = a.order
    if gcd(k % N, N) != 1 and N > 1:
        raise CycloError(f"{k} is not a unit mod {N}")
    vec = [0] * N
    for i, c in enumerate(a._num):
        if c:
            vec[(i * k) % N] += c
    return CycloNum._raw(N, _reduce(N, vec), a._den)


def conj(a: CycloNum) -> CycloNum:
    """Complex conjugation, z -> z^(N-1)."""
    return galois(a, -1)


def as_rational(a: CycloNum) -> Fraction | None:
    """The value as a Fraction, or None when ``a`` is not rational."""
    if not a.is_rational():
        return None
    return Fraction(a._num[0], a._den)


def embed_numeric(a: CycloNum, digits: int = 30) -> mpmath.mpc:
    """Evaluate at exp(2 pi i / N) with at least ``digits`` correct digits."""
    if digits < 1:
        raise ValueError("digits must be positive")
    with mpmath.workdps(digits + 10 + len(a._num)):
        z = mpmath.expjpi(mpmath.mpf(2) / a.order)
        acc = mpmath.mpc(0)
        zk = mpmath.mpc(1)
        for c in a._num:
            if c:
                acc += c * zk
            zk *= z
        val = acc / a._den
    return +val
