"""Fixed-precision arithmetic in the ring of p-adic integers.

An element of Z_p is stored as its first N base-p digits d_0..d_{N-1}
(little-endian), i.e. as the residue sum(d_k * p^k) mod p^N.  All ring
operations are pure digit arithmetic with carries; equality always means
equality mod p^N.  The zero word cannot be distinguished from a value of
valuation >= N, so valuations are reported either as an exact exponent or
as the lower bound N.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DivisionByZero,
    InsufficientPrecision,
    InvalidPrecision,
    InvalidPrime,
    NotAUnit,
    PrimeMismatch,
)


def is_prime(p: int) -> bool:
    """Trial-division primality test; intended for small moduli."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidPrime(f"p must be a prime number, got {p!r}")
    return p


@dataclass(frozen=True)
class Valuation:
    """p-adic valuation of a finite digit word.

    ``exact=True`` means the valuation is exactly ``exponent`` (the lowest
    nonzero digit sits there); ``exact=False`` means every stored digit is
    zero, so the valuation is only known to be >= ``exponent`` (= the
    precision of the word).
    """

    exponent: int
    exact: bool

    @classmethod
    def known(cls, v: int) -> "Valuation":
        return cls(v, True)

    @classmethod
    def at_least(cls, n: int) -> "Valuation":
        return cls(n, False)

    def __str__(self) -> str:
        return str(self.exponent) if self.exact else f">={self.exponent}"


@dataclass(frozen=True)
class PadicInt:
    """A p-adic integer truncated to ``len(digits)`` base-p digits."""

    p: int
    digits: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        if len(self.digits) < 1:
            raise InvalidPrecision("precision must be >= 1")
        for d in self.digits:
            if not 0 <= d < self.p:
                raise ValueError(f"digit {d} outside [0, {self.p})")

    @property
    def precision(self) -> int:
        return len(self.digits)

    def value(self) -> int:
        """Integer representative in [0, p^N)."""
        v = 0
        for d in reversed(self.digits):
            v = v * self.p + d
        return v

    @classmethod
    def from_integer(cls, k: int, p: int, precision: int) -> "PadicInt":
        """Digit expansion of k mod p^N (nonnegative representative)."""
        check_prime(p)
        if precision < 1:
            raise InvalidPrecision("precision must be >= 1")
        k %= p**precision
        digits = []
        for _ in range(precision):
            k, d = divmod(k, p)
            digits.append(d)
        return cls(p, tuple(digits))

    @classmethod
    def from_rational(cls, a: int, b: int, p: int, precision: int) -> "PadicInt":
        """The unique r with b*r = a mod p^N; requires p not dividing b."""
        check_prime(p)
        if b == 0:
            raise DivisionByZero("denominator is zero")
        if b % p == 0:
            raise NotAUnit(f"denominator {b} is divisible by p={p}")
        if precision < 1:
            raise InvalidPrecision("precision must be >= 1")
        q = p**precision
        return cls.from_integer(a * pow(b, -1, q) % q, p, precision)

    def _check_compatible(self, other: "PadicInt") -> int:
        if not isinstance(other, PadicInt):
            raise TypeError(f"expected PadicInt, got {type(other).__name__}")
        if self.p != other.p:
            raise PrimeMismatch(f"operands over p={self.p} and p={other.p}")
        return min(self.precision, other.precision)

    def __add__(self, other: "PadicInt") -> "PadicInt":
        n = self._check_compatible(other)
        out = []
        carry = 0
        for k in range(n):
            s = self.digits[k] + other.digits[k] + carry
            carry, d = divmod(s, self.p)
            out.append(d)
        return PadicInt(self.p, tuple(out))

    def __neg__(self) -> "PadicInt":
        digits = list(self.digits)
        v = next((k for k, d in enumerate(digits) if d != 0), None)
        if v is None:
            return self
        out = [0] * v
        out.append(self.p - digits[v])
        out.extend(self.p - 1 - d for d in digits[v + 1 :])
        return PadicInt(self.p, tuple(out))

    def __sub__(self, other: "PadicInt") -> "PadicInt":
        return self + (-other)

    def __mul__(self, other: "PadicInt") -> "PadicInt":
        n = self._check_compatible(other)
        out = [0] * n
        for i in range(n):
            di = self.digits[i]
            if di == 0:
                continue
            carry = 0
            for j in range(n - i):
                t = out[i + j] + di * other.digits[j] + carry
                carry, out[i + j] = divmod(t, self.p)
        return PadicInt(self.p, tuple(out))

    def invert(self) -> "PadicInt":
        """Multiplicative inverse mod p^N; defined only for units (d_0 != 0)."""
        if self.digits[0] == 0:
            raise NotAUnit("element has positive valuation, not invertible in Z_p")
        q = self.p**self.precision
        return PadicInt.from_integer(pow(self.value(), -1, q), self.p, self.precision)

    def valuation(self) -> Valuation:
        for k, d in enumerate(self.digits):
            if d != 0:
                return Valuation.known(k)
        return Valuation.at_least(self.precision)

    def abs_p(self) -> Fraction:
        """p-adic absolute value p^(-v); the zero word reports 0 (an upper
        bound <= p^(-N), see ``valuation``)."""
        v = self.valuation()
        if not v.exact:
            return Fraction(0)
        return Fraction(1, self.p**v.exponent)

    def project(self, n: int) -> int:
        """Residue mod p^n, i.e. sum of the first n digits."""
        if n < 0:
            raise ValueError("level must be >= 0")
        if n > self.precision:
            raise InsufficientPrecision(
                f"level {n} exceeds stored precision {self.precision}"
            )
        v = 0
        for d in reversed(self.digits[:n]):
            v = v * self.p + d
        return v

    def monna(self) -> Fraction:
        """Digit-reversal value sum(d_k / p^(k+1)) in [0, 1], exact."""
        num = 0
        for d in self.digits:
            num = num * self.p + d
        return Fraction(num, self.p**self.precision)

    def __str__(self) -> str:
        return format_padic(self)


_FULL_FORM = re.compile(r"^p=(\d+)\s+N=(\d+)\s+digits=([0-9]+(?:,[0-9]+)*)$")


def format_padic(x: PadicInt) -> str:
    return f"p={x.p} N={x.precision} digits=" + ",".join(str(d) for d in x.digits)


def parse_padic(text: str, p: int | None = None, precision: int | None = None) -> PadicInt:
    """Parse ``p=2 N=4 digits=1,1,0,1``, ``int:<k>`` or ``rat:<a>/<b>``.

    The short forms need the prime and precision supplied as arguments.
    """
    text = text.strip()
    m = _FULL_FORM.match(text)
    if m:
        fp, fn, raw = int(m.group(1)), int(m.group(2)), m.group(3)
        digits = tuple(int(d) for d in raw.split(","))
        if len(digits) != fn:
            raise ValueError(f"N={fn} but {len(digits)} digits given")
        return PadicInt(fp, digits)
    if text.startswith("int:") or text.startswith("rat:"):
        if p is None or precision is None:
            raise ValueError(f"form {text.split(':')[0]!r} needs explicit p and precision")
        if text.startswith("int:"):
            return PadicInt.from_integer(int(text[4:]), p, precision)
        a, _, b = text[4:].partition("/")
        if not b:
            raise ValueError("rational form must look like rat:<a>/<b>")
        return PadicInt.from_rational(int(a), int(b), p, precision)
    raise ValueError(f"unrecognized p-adic literal: {text!r}")
