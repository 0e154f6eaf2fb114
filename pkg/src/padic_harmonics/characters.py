"""Characters of Z_p and their exact unit-circle values.

Every continuous character of Z_p sends 1 to a p-power root of unity
e^(2*pi*i*m/p^n), so the dual group is the Pruefer group Z(p^infinity).
A character is named here by the reduced pair (m, n); its value at x is
kept as an exact rational phase a/p^n in [0, 1) standing for the unit
complex number e^(2*pi*i*a/p^n).  Conversion to floating complex happens
only at output boundaries, so cancellation tests stay exact.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InsufficientPrecision, PrimeMismatch
from .padic import PadicInt, check_prime


def _strip(p: int, a: int, n: int) -> tuple[int, int]:
    # reduce a/p^n mod 1 to lowest terms; (0, 0) encodes the zero phase
    a %= p**n
    if a == 0:
        return 0, 0
    while a % p == 0:
        a //= p
        n -= 1
    return a, n


@dataclass(frozen=True)
class Phase:
    """Exact rational angle a/p^n in [0,1), meaning e^(2*pi*i*a/p^n)."""

    p: int
    num: int
    level: int

    def __post_init__(self):
        check_prime(self.p)
        if self.level < 0 or not 0 <= self.num < self.p**self.level:
            raise ValueError(f"phase {self.num}/{self.p}^{self.level} out of range")
        if self.num == 0:
            if self.level != 0:
                raise ValueError("zero phase must be stored at level 0")
        elif self.num % self.p == 0:
            raise ValueError("phase numerator not reduced")

    @classmethod
    def reduce(cls, p: int, a: int, n: int) -> "Phase":
        a, n = _strip(p, a, n)
        return cls(p, a, n)

    @classmethod
    def zero(cls, p: int) -> "Phase":
        return cls(p, 0, 0)

    def __add__(self, other: "Phase") -> "Phase":
        if self.p != other.p:
            raise PrimeMismatch(f"phases over p={self.p} and p={other.p}")
        n = max(self.level, other.level)
        a = self.num * self.p ** (n - self.level) + other.num * self.p ** (
            n - other.level
        )
        return Phase.reduce(self.p, a, n)

    def __neg__(self) -> "Phase":
        if self.num == 0:
            return self
        return Phase(self.p, self.p**self.level - self.num, self.level)

    def __sub__(self, other: "Phase") -> "Phase":
        return self + (-other)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.p**self.level)

    def to_complex(self) -> complex:
        quarter, rem = divmod(4 * self.num, self.p**self.level)
        if rem == 0:
            return (1, 1j, -1, -1j)[quarter]
        return cmath.exp(2j * cmath.pi * self.num / self.p**self.level)

    def __str__(self) -> str:
        return str(self.as_fraction())


@dataclass(frozen=True)
class CharIndex:
    """Reduced name (m, n) of the character with chi(1) = e^(2*pi*i*m/p^n).

    (1, 0) is the trivial character; otherwise 0 < m < p^n with p not
    dividing m.  Evaluation only looks at the argument mod p^n.
    """

    p: int
    m: int
    n: int

    def __post_init__(self):
        check_prime(self.p)
        if (self.m, self.n) == (1, 0):
            return
        if self.n < 1 or not 0 < self.m < self.p**self.n or self.m % self.p == 0:
            raise ValueError(f"({self.m}, {self.n}) is not a reduced index for p={self.p}")

    @classmethod
    def trivial(cls, p: int) -> "CharIndex":
        return cls(p, 1, 0)

    @property
    def level(self) -> int:
        return self.n

    def is_trivial(self) -> bool:
        return self.n == 0

    def phase_at_one(self) -> Phase:
        if self.n == 0:
            return Phase.zero(self.p)
        return Phase(self.p, self.m, self.n)

    def __call__(self, x: int | PadicInt) -> Phase:
        """Exact character value at x, as a Phase."""
        if isinstance(x, PadicInt):
            if x.p != self.p:
                raise PrimeMismatch(f"argument over p={x.p}, character over p={self.p}")
            if x.precision < self.n:
                raise InsufficientPrecision(
                    f"character of level {self.n} needs >= {self.n} digits, got {x.precision}"
                )
            r = x.project(self.n)
        else:
            r = x % self.p**self.n
        return Phase.reduce(self.p, self.m * r, self.n)

    def __add__(self, other: "CharIndex") -> "CharIndex":
        """Pointwise product of characters (addition of angles mod 1)."""
        if self.p != other.p:
            raise PrimeMismatch(f"characters over p={self.p} and p={other.p}")
        n = max(self.n, other.n)
        a = self.m * self.p ** (n - self.n) + other.m * self.p ** (n - other.n)
        return reduce_index(self.p, a, n)

    def __neg__(self) -> "CharIndex":
        return reduce_index(self.p, -self.m, self.n)

    def __sub__(self, other: "CharIndex") -> "CharIndex":
        return self + (-other)

    def __str__(self) -> str:
        return f"chi({self.m},{self.n})"


def reduce_index(p: int, a: int, n: int) -> CharIndex:
    """Canonical character index for the angle a/p^n mod 1."""
    if n < 0:
        raise ValueError("level must be >= 0")
    a, n = _strip(p, a, n)
    if a == 0:
        return CharIndex.trivial(p)
    return CharIndex(p, a, n)


def parse_char(text: str, p: int) -> CharIndex:
    text = text.strip()
    if not (text.startswith("chi(") and text.endswith(")")):
        raise ValueError(f"unrecognized character literal: {text!r}")
    m, _, n = text[4:-1].partition(",")
    return CharIndex(p, int(m), int(n))


@lru_cache(maxsize=64)
def enumerate_chars(p: int, max_level: int) -> tuple[CharIndex, ...]:
    """All reduced indices of level <= max_level, sorted by (level, m).

    Level n contributes p^n - p^(n-1) indices for n >= 1 and a single one
    for n = 0, so the total count is p^max_level.  This ordering fixes the
    coefficient and matrix layouts everywhere downstream.  Cached per
    (p, max_level); the tuples are immutable so sharing is safe.
    """
    check_prime(p)
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    out = [CharIndex.trivial(p)]
    for n in range(1, max_level + 1):
        out.extend(CharIndex(p, m, n) for m in range(1, p**n) if m % p != 0)
    return tuple(out)


def char_position(c: CharIndex) -> int:
    """Index of c in ``enumerate_chars(c.p, L)`` for any L >= c.level.

    Equals the raw frequency count below c in the canonical order: the
    trivial character sits at 0 and level n occupies p^(n-1)..p^n - 1.
    """
    if c.n == 0:
        return 0
    base = c.p ** (c.n - 1)
    return base + c.m - 1 - (c.m - 1) // c.p
