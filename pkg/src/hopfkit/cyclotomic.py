"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element of Q(zeta_N) is stored as an integer coefficient vector over the
power basis 1, z, ..., z^(phi(N)-1) together with a positive common
denominator.  The representation is reduced modulo the N-th cyclotomic
polynomial and normalized (gcd of numerators and denominator is 1), so two
elements are equal exactly when their stored data agree.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Union

Scalar = Union[int, Fraction, "CycNumber"]


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Euler's totient by trial factorization."""
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic with integer coefficients, so the quotient stays integral
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dd]
        out[k] = c
        if c:
            for i, b in enumerate(den):
                num[k + i] -= c * b
    if any(num[:dd]):
        raise ArithmeticError("polynomial division is not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (lowest degree first) of the n-th cyclotomic polynomial.

    Computed as (x^n - 1) divided exactly by every Phi_d with d | n, d < n.
    """
    if n < 1:
        raise ValueError(f"cyclotomic_polynomial needs n >= 1, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coordinates of z^k for k = 0 .. max(n, 2*phi(n)-1) - 1."""
    phi = euler_phi(n)
    cyc = cyclotomic_polynomial(n)
    size = max(n, 2 * phi - 1)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(size):
        rows.append(tuple(cur))
        # multiply by z and reduce: z^phi = -(c_0 + ... + c_{phi-1} z^{phi-1})
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * cyc[i]
    return tuple(rows)


class CycNumber:
    """An exact element of the cyclotomic field Q(zeta_order)."""

    __slots__ = ("order", "num", "den", "_hash")

    def __init__(self, order: int, num: Iterable[int], den: int = 1):
        num = tuple(num)
        if len(num) != euler_phi(order):
            raise ValueError("coefficient vector length must equal phi(order)")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = tuple(-a for a in num), -den
        g = gcd(*num, den)
        if g != 1:
            num, den = tuple(a // g for a in num), den // g
        self.order = order
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, order, num, den):
        obj = object.__new__(cls)
        obj.order, obj.num, obj.den, obj._hash = order, num, den, None
        return obj

    @classmethod
    def rational(cls, order: int, value) -> "CycNumber":
        value = Fraction(value)
        phi = euler_phi(order)
        return cls(order, (value.numerator,) + (0,) * (phi - 1), value.denominator)

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> "CycNumber":
        """zeta_order ** k."""
        return _zeta_cached(order, k % order)

    @classmethod
    def from_coeffs(cls, order: int, coeffs: Iterable) -> "CycNumber":
        fr = [Fraction(c) for c in coeffs]
        den = lcm(*(c.denominator for c in fr)) if fr else 1
        return cls(order, (int(c * den) for c in fr), den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.den) for a in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    # -- coercion ---------------------------------------------------------
    def lift(self, order: int) -> "CycNumber":
        """Embed into Q(zeta_order); requires self.order | order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed order {self.order} into order {order}")
        phi = euler_phi(order)
        if self.is_rational():
            return CycNumber._raw(order, (self.num[0],) + (0,) * (phi - 1), self.den)
        step = order // self.order
        table = _power_table(order)
        out = [0] * phi
        for i, a in enumerate(self.num):
            if a:
                row = table[(i * step) % order]
                for j in range(phi):
                    out[j] += a * row[j]
        return CycNumber(order, out, self.den)

    def _coerce(self, other) -> tuple["CycNumber", "CycNumber"]:
        if isinstance(other, CycNumber):
            if other.order == self.order:
                return self, other
            n = lcm(self.order, other.order)
            return self.lift(n), other.lift(n)
        if isinstance(other, (int, Fraction)):
            return self, CycNumber.rational(self.order, other)
        return NotImplemented

    # -- field operations ---------------------------------------------------
    def __add__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        if a.den == b.den:
            return CycNumber(a.order, [x + y for x, y in zip(a.num, b.num)], a.den)
        return CycNumber(
            a.order, [x * b.den + y * a.den for x, y in zip(a.num, b.num)], a.den * b.den
        )

    __radd__ = __add__

    def __neg__(self):
        return CycNumber._raw(self.order, tuple(-x for x in self.num), self.den)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        if b.is_rational():
            a, b = b, a
        if a.is_rational():
            c = a.num[0]
            if c == 0:
                return _zero(b.order)
            return CycNumber(b.order, [c * x for x in b.num], a.den * b.den)
        phi = len(a.num)
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        conv[i + j] += x * y
        out = list(conv[:phi])
        table = _power_table(a.order)
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                row = table[k]
                for j in range(phi):
                    out[j] += c * row[j]
        return CycNumber(a.order, out, a.den * b.den)

    __rmul__ = __mul__

    def conjugate(self, k: int) -> "CycNumber":
        """Galois automorphism z -> z^k (k coprime to the order)."""
        if gcd(k, self.order) != 1:
            raise ValueError("Galois exponent must be coprime to the order")
        if self.is_rational():
            return self
        table = _power_table(self.order)
        phi = len(self.num)
        out = [0] * phi
        for i, a in enumerate(self.num):
            if a:
                row = table[(i * k) % self.order]
                for j in range(phi):
                    out[j] += a * row[j]
        return CycNumber(self.order, out, self.den)

    def inverse(self) -> "CycNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            phi = len(self.num)
            return CycNumber(self.order, (self.den,) + (0,) * (phi - 1), self.num[0])
        # product of the other Galois conjugates; self * cofactor is the norm
        cofactor = _one(self.order)
        for k in range(2, self.order):
            if gcd(k, self.order) == 1:
                cofactor = cofactor * self.conjugate(k)
        norm = self * cofactor
        if not norm.is_rational():
            raise ArithmeticError("norm computation did not land in Q")
        return cofactor * norm.inverse()

    def __truediv__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = _one(self.order), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycNumber):
            if other.order != self.order:
                n = lcm(self.order, other.order)
                a, b = self.lift(n), other.lift(n)
                return a.num == b.num and a.den == b.den
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.order, self.num, self.den))
        return self._hash

    def __repr__(self):
        if self.is_rational():
            return f"CycNumber({self.order}, {Fraction(self.num[0], self.den)})"
        terms = []
        for i, a in enumerate(self.num):
            if a:
                terms.append(f"{a}" if i == 0 else f"{a}*z^{i}")
        body = " + ".join(terms)
        if self.den != 1:
            body = f"({body})/{self.den}"
        return f"CycNumber({self.order}, {body})"

    def to_json(self) -> list[list[int]]:
        return [[c.numerator, c.denominator] for c in self.coeffs]

    @classmethod
    def from_json(cls, order: int, data) -> "CycNumber":
        return cls.from_coeffs(order, (Fraction(n, d) for n, d in data))


@lru_cache(maxsize=None)
def _zero(order: int) -> CycNumber:
    return CycNumber._raw(order, (0,) * euler_phi(order), 1)


@lru_cache(maxsize=None)
def _one(order: int) -> CycNumber:
    return CycNumber._raw(order, (1,) + (0,) * (euler_phi(order) - 1), 1)


@lru_cache(maxsize=None)
def _zeta_cached(order: int, k: int) -> CycNumber:
    return CycNumber(order, _power_table(order)[k], 1)


def zero(order: int) -> CycNumber:
    return _zero(order)


def one(order: int) -> CycNumber:
    return _one(order)


def as_cyc(value: Scalar, order: int) -> CycNumber:
    """Coerce an int, Fraction or CycNumber into Q(zeta_order)."""
    if isinstance(value, CycNumber):
        return value.lift(order) if value.order != order else value
    if value == 0:
        return _zero(order)
    if value == 1:
        return _one(order)
    return CycNumber.rational(order, value)


def cyc_arith(a: Scalar, b: Scalar | None, op: str):
    """Dispatch one field operation; operands are lifted to a common order."""
    order = lcm(*(x.order for x in (a, b) if isinstance(x, CycNumber))) if any(
        isinstance(x, CycNumber) for x in (a, b)
    ) else 1
    a = as_cyc(a, order)
    if op == "inv":
        return a.inverse()
    b = as_cyc(b, order)
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown operation {op!r}")
