"""Exact arithmetic with rational combinations of p-power roots of unity.

A value is stored as a sparse integer combination of the q-th roots of
unity (q = p^n) over a single positive denominator:

    sum_e num[e] * zeta^e / den,   zeta = e^(2*pi*i/q),  0 <= e < q.

Exponent arithmetic stays in Z/qZ, which keeps addition, multiplication
and conjugation cheap.  The representation is not unique: the minimal
polynomial of zeta is 1 + x^(q/p) + x^(2q/p) + ... + x^((p-1)q/p), so
equality and zero tests first reduce exponents >= (p-1)*q/p through that
relation, landing in the power basis of the cyclotomic field where the
coordinate vector is unique.  This is what lets a sum of roots of unity
be recognized as exactly zero.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd

from .errors import PrimeMismatch
from .padic import check_prime


def root_complex(q: int, e: int) -> complex:
    """Floating value of e^(2*pi*i*e/q), exact on the four quarter points."""
    e %= q
    quarter, rem = divmod(4 * e, q)
    if rem == 0:
        return (1 + 0j, 1j, -1 + 0j, -1j)[quarter]
    return cmath.exp(2j * cmath.pi * e / q)


class Cyclotomic:
    """Element of Q(zeta) for zeta a primitive p^n-th root of unity."""

    __slots__ = ("p", "n", "den", "num")

    def __init__(self, p: int, n: int, num: dict[int, int] | None = None, den: int = 1):
        check_prime(p)
        if n < 0:
            raise ValueError("order exponent must be >= 0")
        if den == 0:
            raise ZeroDivisionError("denominator is zero")
        q = p**n
        cleaned: dict[int, int] = {}
        for e, v in (num or {}).items():
            if v:
                e %= q
                w = cleaned.get(e, 0) + v
                if w:
                    cleaned[e] = w
                else:
                    del cleaned[e]
        if den < 0:
            den = -den
            cleaned = {e: -v for e, v in cleaned.items()}
        g = den
        for v in cleaned.values():
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            den //= g
            cleaned = {e: v // g for e, v in cleaned.items()}
        self.p = p
        self.n = n
        self.den = den
        self.num = cleaned

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, p: int, n: int = 0) -> "Cyclotomic":
        return cls(p, n)

    @classmethod
    def from_rational(cls, x, p: int) -> "Cyclotomic":
        x = Fraction(x)
        return cls(p, 0, {0: x.numerator}, x.denominator)

    @classmethod
    def from_root(cls, p: int, n: int, exponent: int) -> "Cyclotomic":
        return cls(p, n, {exponent: 1})

    @classmethod
    def from_phase(cls, phase) -> "Cyclotomic":
        return cls(phase.p, phase.level, {phase.num: 1})

    # -- representation helpers ---------------------------------------

    @property
    def order(self) -> int:
        return self.p**self.n

    def _at_order(self, n: int) -> dict[int, int]:
        stride = self.p ** (n - self.n)
        return {e * stride: v for e, v in self.num.items()}

    def _canonical(self) -> dict[int, int]:
        """Coordinates in the power basis 1, zeta, .., zeta^(phi(q)-1)."""
        if self.n == 0:
            return dict(self.num)
        q = self.order
        block = q // self.p
        phi = q - block
        c = dict(self.num)
        for e in [e for e in c if e >= phi]:
            v = c.pop(e)
            i = e - phi
            for j in range(self.p - 1):
                t = i + j * block
                w = c.get(t, 0) - v
                if w:
                    c[t] = w
                else:
                    c.pop(t, None)
        return c

    def is_zero(self) -> bool:
        return not self._canonical()

    def is_rational(self) -> bool:
        c = self._canonical()
        return not c or set(c) == {0}

    def as_fraction(self) -> Fraction:
        c = self._canonical()
        if c and set(c) != {0}:
            raise ValueError(f"{self!r} is not rational")
        return Fraction(c.get(0, 0), self.den)

    def to_complex(self) -> complex:
        if not self.num or self.is_zero():
            return 0j
        q = self.order
        return sum((v * root_complex(q, e) for e, v in self.num.items()), 0j) / self.den

    def __complex__(self) -> complex:
        return self.to_complex()

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> "Cyclotomic | None":
        if isinstance(other, Cyclotomic):
            if other.p != self.p and other.n > 0 and self.n > 0:
                raise PrimeMismatch(f"roots of unity over p={self.p} and p={other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(other, self.p)
        return None

    def __add__(self, other) -> "Cyclotomic":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.p if self.n else other.p
        n = max(self.n, other.n)
        a, b = self._at_order(n), other._at_order(n)
        den = self.den * other.den // gcd(self.den, other.den)
        fa, fb = den // self.den, den // other.den
        num = {e: v * fa for e, v in a.items()}
        for e, v in b.items():
            num[e] = num.get(e, 0) + v * fb
        return Cyclotomic(p, n, num, den)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        out = Cyclotomic.__new__(Cyclotomic)
        out.p, out.n, out.den = self.p, self.n, self.den
        out.num = {e: -v for e, v in self.num.items()}
        return out

    def __sub__(self, other) -> "Cyclotomic":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Cyclotomic":
        return (-self) + other

    def __mul__(self, other) -> "Cyclotomic":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.p if self.n else other.p
        n = max(self.n, other.n)
        q = p**n
        a, b = self._at_order(n), other._at_order(n)
        if len(a) > len(b):
            a, b = b, a
        num: dict[int, int] = {}
        for ea, va in a.items():
            for eb, vb in b.items():
                e = (ea + eb) % q
                num[e] = num.get(e, 0) + va * vb
        return Cyclotomic(p, n, num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Cyclotomic":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        other = Fraction(other)
        return Cyclotomic(
            self.p,
            self.n,
            {e: v * other.denominator for e, v in self.num.items()},
            self.den * other.numerator,
        )

    def conjugate(self) -> "Cyclotomic":
        q = self.order
        return Cyclotomic(self.p, self.n, {(-e) % q: v for e, v in self.num.items()}, self.den)

    def __eq__(self, other) -> bool:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return (self - coerced).is_zero()

    __hash__ = None

    def __repr__(self) -> str:
        if not self.num:
            return "Cyclotomic(0)"
        q = self.order
        terms = " + ".join(
            f"{v}*z{q}^{e}" if e else str(v) for e, v in sorted(self.num.items())
        )
        return f"Cyclotomic(({terms})/{self.den})" if self.den != 1 else f"Cyclotomic({terms})"


class CyclotomicAccumulator:
    """Mutable sum of terms value * zeta^shift at a fixed order p^n.

    Bypasses the per-operation normalization of ``Cyclotomic`` so that the
    long exact sums in transforms stay cheap; ``value()`` seals the result.
    """

    __slots__ = ("p", "n", "q", "den", "num")

    def __init__(self, p: int, n: int):
        self.p = p
        self.n = n
        self.q = p**n
        self.den = 1
        self.num: dict[int, int] = {}

    def _rescale(self, new_den: int):
        f = new_den // self.den
        if f != 1:
            for e in self.num:
                self.num[e] *= f
            self.den = new_den

    def add(self, value, shift: int = 0):
        """Accumulate value * zeta^shift; value is Cyclotomic, int or Fraction."""
        num = self.num
        if isinstance(value, int):
            if value:
                e = shift % self.q
                num[e] = num.get(e, 0) + value * self.den
            return
        if isinstance(value, Fraction):
            b = value.denominator
            self._rescale(self.den * b // gcd(self.den, b))
            e = shift % self.q
            num[e] = num.get(e, 0) + value.numerator * (self.den // b)
            return
        if value.n > self.n:
            raise ValueError("term order exceeds accumulator order")
        if value.den != 1:
            self._rescale(self.den * value.den // gcd(self.den, value.den))
        stride = self.p ** (self.n - value.n)
        f = self.den // value.den
        q = self.q
        for e, v in value.num.items():
            t = (e * stride + shift) % q
            num[t] = num.get(t, 0) + v * f

    def value(self, extra_den: int = 1) -> Cyclotomic:
        return Cyclotomic(self.p, self.n, self.num, self.den * extra_den)
