"""Balls in Z_p, their indicator expansions, and the Monna correspondence.

The ball x + p^r*Z_p is the clopen set of elements agreeing with x in the
first r digits; Z_p is the disjoint union of the p^r balls of radius
exponent r.  Indicator functions of balls generate K_0(C(Z_p)) (which is
the group of continuous functions Z_p -> Z under the inductive-limit
identification; K_1(C(Z_p)) = 0).  This module exposes the concrete
generators and their finite character expansions only; no relations among
the generator classes are computed or claimed.

The character expansion of a ball indicator is closed-form: the
coefficient of chi_{m,n} is e^(-2*pi*i*m*x/p^n) / p^r for n <= r and is
exactly zero for n > r.  Under the Monna map (digit reinterpretation
T(sum x_k p^k) = sum x_k p^-(k+1)) the ball corresponds to an interval of
length p^-r, matching its Haar measure; the endpoint ambiguity of base-p
expansions affects only a measure-zero set and never arises at finite
precision, so intervals are treated as closed-open for tiling checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .characters import enumerate_chars
from .cyclotomic import Cyclotomic, root_complex
from .errors import InsufficientLevel
from .harmonic import CoefficientMap, LevelFunction
from .padic import check_prime


@dataclass(frozen=True)
class Ball:
    """The set of p-adic integers congruent to x mod p^r."""

    p: int
    x: int
    r: int

    def __post_init__(self):
        check_prime(self.p)
        if self.r < 0:
            raise ValueError("radius exponent must be >= 0")
        if not 0 <= self.x < self.p**self.r:
            raise ValueError(f"base residue {self.x} outside [0, {self.p}^{self.r})")

    def haar_measure(self) -> Fraction:
        return Fraction(1, self.p**self.r)

    def __str__(self) -> str:
        return f"ball({self.x}, {self.r})"


def ball_indicator(b: Ball, level: int, exact: bool = False) -> LevelFunction:
    """Indicator of the ball on Z/p^levelZ: 1 at residues = x mod p^r."""
    if level < b.r:
        raise InsufficientLevel(f"level {level} cannot resolve radius exponent {b.r}")
    q = b.p**level
    step = b.p**b.r
    one, zero = (1, 0) if exact else (1 + 0j, 0j)
    values = [zero] * q
    for y in range(b.x, q, step):
        values[y] = one
    return LevelFunction(b.p, level, tuple(values))


def ball_coefficients(b: Ball, exact: bool = False) -> CoefficientMap:
    """Closed-form character coefficients of the ball indicator.

    Exactly p^r nonzero entries, one per character of level <= r, each of
    modulus p^-r; synthesizing them at any level >= r reproduces the
    indicator.
    """
    p, r = b.p, b.r
    scale = p**r
    out = []
    for c in enumerate_chars(p, r):
        qn = p**c.n
        a = (-c.m * b.x) % qn
        if exact:
            out.append(Cyclotomic(p, c.n, {a: 1}, scale))
        else:
            out.append(root_complex(qn, a) / scale)
    return CoefficientMap(p, r, tuple(out))


def monna_interval(b: Ball) -> tuple[Fraction, Fraction]:
    """Image [lo, lo + p^-r) of the ball under the Monna map, exact."""
    p, r = b.p, b.r
    x, rev = b.x, 0
    for _ in range(r):
        x, d = divmod(x, p)
        rev = rev * p + d
    lo = Fraction(rev, p**r)
    return lo, lo + Fraction(1, p**r)


@dataclass(frozen=True)
class PartitionReport:
    p: int
    r: int
    level: int
    ball_count: int
    interval_length: Fraction
    covers_once: bool
    tiles_unit_interval: bool
    total_length: Fraction

    @property
    def ok(self) -> bool:
        return (
            self.covers_once
            and self.tiles_unit_interval
            and self.total_length == 1
            and self.interval_length == Fraction(1, self.p**self.r)
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "p": self.p,
                "r": self.r,
                "level": self.level,
                "balls": self.ball_count,
                "interval_length": str(self.interval_length),
                "covers_once": self.covers_once,
                "tiles_unit_interval": self.tiles_unit_interval,
                "total_length": str(self.total_length),
                "ok": self.ok,
            }
        )


def verify_partition(p: int, r: int, level: int | None = None) -> PartitionReport:
    """Check that the p^r balls partition both Z_p and, via Monna, [0, 1].

    Residue coverage: every point of Z/p^levelZ lies in exactly one ball.
    Interval tiling: the p^r Monna intervals are disjoint half-open pieces
    of [0, 1] with exact total length 1.  All arithmetic is exact; the
    interval endpoints share the denominator p^r, so the tiling check runs
    on integer numerators.
    """
    check_prime(p)
    if level is None:
        level = r
    if level < r:
        raise InsufficientLevel(f"level {level} cannot resolve radius exponent {r}")
    n_balls = p**r
    q = p**level

    residues = np.arange(q, dtype=np.int64) % n_balls
    counts = np.bincount(residues, minlength=n_balls)
    covers_once = bool((counts == q // n_balls).all())

    # digit-reversal numerators of the interval left endpoints
    x = np.arange(n_balls, dtype=np.int64)
    rev = np.zeros(n_balls, dtype=np.int64)
    for _ in range(r):
        rev = rev * p + x % p
        x = x // p
    seen = np.zeros(n_balls, dtype=bool)
    seen[rev] = True
    tiles = bool(seen.all())  # numerators hit 0..p^r-1 exactly once

    length = Fraction(1, n_balls)
    total = length * n_balls if tiles else Fraction(len(np.unique(rev)), n_balls)
    return PartitionReport(p, r, level, n_balls, length, covers_once, tiles, total)


@dataclass(frozen=True)
class K0Generator:
    """A ball together with the character expansion of its indicator."""

    ball: Ball
    coefficients: CoefficientMap


def k0_generators(p: int, r: int, exact: bool = False) -> tuple[K0Generator, ...]:
    """The p^r radius-r generator classes of K_0(C(Z_p)), with expansions."""
    check_prime(p)
    if r < 1:
        raise ValueError("radius exponent must be >= 1 for the generator list")
    return tuple(
        K0Generator(b, ball_coefficients(b, exact=exact))
        for b in (Ball(p, x, r) for x in range(p**r))
    )
