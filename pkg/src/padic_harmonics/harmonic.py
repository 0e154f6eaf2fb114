"""Harmonic analysis on the finite quotients Z/p^nZ of Z_p.

A function on Z/p^nZ carries the normalized counting measure (the level-n
shadow of the Haar probability measure), so analysis against the p^n
characters of level <= n is an orthonormal expansion.  Coefficients are
indexed by reduced character names rather than raw frequencies
0..p^n - 1; the bridge is k -> reduce_index(p, k, n), which deduplicates
aliased frequencies across levels.

Two scalar modes run through everything: double-precision complex, and an
exact mode whose scalars are rational combinations of p-power roots of
unity (see ``cyclotomic``).  Exact mode is what certifies statements like
"this coefficient is exactly zero"; it is capped at ``EXACT_CAP_DEFAULT``
points since its cost grows with the group.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .characters import CharIndex, char_position, enumerate_chars, reduce_index
from .cyclotomic import Cyclotomic, CyclotomicAccumulator, root_complex
from .errors import (
    CannotLower,
    ExactnessCapExceeded,
    InsufficientLevel,
    LevelMismatch,
    PrimeMismatch,
)
from .padic import check_prime

EXACT_CAP_DEFAULT = 4096

_EXACT_TYPES = (int, Fraction, Cyclotomic)


def _to_complex(v) -> complex:
    if isinstance(v, Cyclotomic):
        return v.to_complex()
    return complex(v)


def _is_exact_zero(v) -> bool:
    if isinstance(v, Cyclotomic):
        return not v.num
    return v == 0


@lru_cache(maxsize=32)
def _root_table(p: int, n: int) -> np.ndarray:
    """Shared table of e^(2*pi*i*a/p^n), a = 0..p^n-1, built once per (p, n)."""
    q = p**n
    return np.array([root_complex(q, a) for a in range(q)], dtype=complex)


@lru_cache(maxsize=32)
def _raw_order(p: int, n: int) -> np.ndarray:
    """Position in canonical (level, m) order of each raw frequency k."""
    q = p**n
    return np.array([char_position(reduce_index(p, k, n)) for k in range(q)])


_DENSE_KERNEL_MAX = 3200


@lru_cache(maxsize=2)
def _dft_matrix(p: int, n: int) -> np.ndarray:
    """Dense direct-summation kernel M[k, x] = e^(-2*pi*i*k*x/p^n)."""
    q = p**n
    table = _root_table(p, n)
    ks = np.arange(q, dtype=np.int64)
    return table[(-np.outer(ks, ks)) % q]


@dataclass(frozen=True)
class LevelFunction:
    """A function on Z/p^levelZ: one value per residue 0..p^level-1."""

    p: int
    level: int
    values: tuple

    def __post_init__(self):
        check_prime(self.p)
        if self.level < 0:
            raise ValueError("level must be >= 0")
        if len(self.values) != self.p**self.level:
            raise ValueError(
                f"level {self.level} needs {self.p**self.level} values, got {len(self.values)}"
            )

    @classmethod
    def from_values(cls, p: int, level: int, values) -> "LevelFunction":
        return cls(p, level, tuple(values))

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, _EXACT_TYPES) for v in self.values)

    def as_array(self) -> np.ndarray:
        return np.array([_to_complex(v) for v in self.values], dtype=complex)

    def __call__(self, x: int):
        return self.values[x % len(self.values)]


@dataclass(frozen=True)
class CoefficientMap:
    """Character coefficients, stored densely in the canonical (level, m)
    order of ``enumerate_chars(p, level)``."""

    p: int
    level: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.p**self.level:
            raise ValueError(
                f"level {self.level} carries {self.p**self.level} coefficients, "
                f"got {len(self.values)}"
            )

    @classmethod
    def from_dict(cls, p: int, level: int, mapping: dict, fill=0) -> "CoefficientMap":
        values = [fill] * p**level
        for c, v in mapping.items():
            if c.p != p:
                raise PrimeMismatch(f"coefficient key over p={c.p}, map over p={p}")
            if c.level > level:
                raise CannotLower(f"key level {c.level} exceeds map level {level}")
            values[char_position(c)] = v
        return cls(p, level, tuple(values))

    def chars(self) -> tuple[CharIndex, ...]:
        return enumerate_chars(self.p, self.level)

    def items(self):
        return zip(self.chars(), self.values)

    def __getitem__(self, c: CharIndex):
        if c.p != self.p:
            raise PrimeMismatch(f"key over p={c.p}, map over p={self.p}")
        if c.level > self.level:
            raise KeyError(c)
        return self.values[char_position(c)]

    def get(self, c: CharIndex, default=0):
        try:
            return self[c]
        except KeyError:
            return default

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, _EXACT_TYPES) for v in self.values)

    def as_array(self) -> np.ndarray:
        return np.array([_to_complex(v) for v in self.values], dtype=complex)

    def max_nonzero_level(self) -> int:
        out = 0
        for c, v in self.items():
            if not _is_exact_zero(v):
                out = max(out, c.level)
        return out


def sample_char(c: CharIndex, level: int, exact: bool = False) -> LevelFunction:
    """The character as a function on Z/p^levelZ."""
    if level < c.level:
        raise InsufficientLevel(f"character of level {c.level} cannot live at level {level}")
    p, q = c.p, c.p**level
    stride = p ** (level - c.level) * c.m  # raw frequency of c at this level
    if exact:
        values = [Cyclotomic.from_root(p, level, stride * x % q) for x in range(q)]
        return LevelFunction(p, level, tuple(values))
    table = _root_table(p, level)
    xs = np.arange(q, dtype=np.int64)
    return LevelFunction(p, level, tuple(table[(stride * xs) % q]))


def haar_inner(f: LevelFunction, g: LevelFunction):
    """<f, g> against the normalized counting measure: mean of f * conj(g).

    Exact when both functions carry exact scalars, floating otherwise.
    """
    if f.p != g.p:
        raise PrimeMismatch(f"functions over p={f.p} and p={g.p}")
    if f.level != g.level:
        raise LevelMismatch(f"levels {f.level} and {g.level}; lift first")
    q = f.p**f.level
    if f.is_exact and g.is_exact:
        acc = CyclotomicAccumulator(f.p, f.level)
        for fv, gv in zip(f.values, g.values):
            if _is_exact_zero(fv) or _is_exact_zero(gv):
                continue
            gc = gv.conjugate() if isinstance(gv, Cyclotomic) else gv
            term = fv * gc
            acc.add(term if isinstance(term, Cyclotomic) else Fraction(term))
        return acc.value(q)
    return complex(np.sum(f.as_array() * np.conj(g.as_array())) / q)


def lift(f: LevelFunction, level: int) -> LevelFunction:
    """Pull back along reduction mod p^level(f): result(x) = f(x mod p^n)."""
    if level < f.level:
        raise CannotLower(f"cannot lower level {f.level} to {level}")
    return LevelFunction(f.p, level, f.values * f.p ** (level - f.level))


def _check_cap(p: int, level: int, cap: int):
    if p**level > cap:
        raise ExactnessCapExceeded(
            f"exact mode capped at {cap} points, level {level} has {p**level}"
        )


def _nonzero_support(f: LevelFunction):
    return [(x, v) for x, v in enumerate(f.values) if not _is_exact_zero(v)]


def dft(f: LevelFunction, exact_cap: int = EXACT_CAP_DEFAULT) -> CoefficientMap:
    """Coefficients by direct summation: coef(c) = <f, chi_c>.

    This is the slow, definitional transform kept deliberately independent
    of ``fft`` so the two can cross-check each other.
    """
    p, n = f.p, f.level
    q = p**n
    if f.is_exact:
        _check_cap(p, n, exact_cap)
        support = _nonzero_support(f)
        out = [None] * q
        order = _raw_order(p, n)
        for k in range(q):
            acc = CyclotomicAccumulator(p, n)
            for x, v in support:
                acc.add(v, (-k * x) % q)
            out[order[k]] = acc.value(q)
        return CoefficientMap(p, n, tuple(out))
    vals = f.as_array()
    if q <= _DENSE_KERNEL_MAX:
        raw = _dft_matrix(p, n) @ vals
    else:
        table = _root_table(p, n)
        xs = np.arange(q, dtype=np.int64)
        raw = np.empty(q, dtype=complex)
        chunk = max(1, 4_000_000 // q)
        for lo in range(0, q, chunk):
            ks = np.arange(lo, min(lo + chunk, q), dtype=np.int64)
            raw[lo : lo + len(ks)] = table[(-np.outer(ks, xs)) % q] @ vals
    out_arr = np.empty(q, dtype=complex)
    out_arr[_raw_order(p, n)] = raw / q
    return CoefficientMap(p, n, tuple(out_arr))


def _fft_raw(v: np.ndarray, p: int, table: np.ndarray, stride: int) -> np.ndarray:
    """Radix-p decimation in time for F[k] = sum_x v[x] e^(-2*pi*i*k*x*stride/q)."""
    q_top = len(table)
    m = len(v)
    if m == 1:
        return v.astype(complex)
    sub = m // p
    cols = v.reshape(sub, p)
    g = np.empty((p, sub), dtype=complex)
    for j in range(p):
        g[j] = _fft_raw(np.ascontiguousarray(cols[:, j]), p, table, stride * p)
    a = np.arange(sub, dtype=np.int64)
    for j in range(p):
        g[j] *= table[(-a * (j * stride)) % q_top]
    b = np.arange(p, dtype=np.int64)
    omega = table[(-(np.outer(b, b) * (q_top // p))) % q_top]
    return (omega @ g).reshape(m)


def _fft_exact(values: list, p: int, n_top: int, stride: int) -> list:
    m = len(values)
    if m == 1:
        v = values[0]
        return [v if isinstance(v, Cyclotomic) else Cyclotomic.from_rational(v, p)]
    sub = m // p
    q = p**n_top
    subs = [_fft_exact(values[j::p], p, n_top, stride * p) for j in range(p)]
    for j in range(1, p):
        twiddled = []
        for a in range(sub):
            t = subs[j][a]
            e = (-a * j * stride) % q
            twiddled.append(t * Cyclotomic.from_root(p, n_top, e) if t.num else t)
        subs[j] = twiddled
    out = [None] * m
    block = q // p
    for b in range(p):
        for a in range(sub):
            acc = CyclotomicAccumulator(p, n_top)
            for j in range(p):
                acc.add(subs[j][a], (-b * j * block) % q)
            out[a + b * sub] = acc.value()
    return out


def fft(f: LevelFunction, exact_cap: int = EXACT_CAP_DEFAULT) -> CoefficientMap:
    """Fast transform over the tower Z/p^nZ > ... > Z/pZ.

    Output contract is identical to ``dft``; cost drops from O(p^2n) to
    O(n * p^(n+1)) scalar operations.  Deterministic: a fixed twiddle table
    per (p, n) and a fixed evaluation order.
    """
    p, n = f.p, f.level
    q = p**n
    if f.is_exact:
        _check_cap(p, n, exact_cap)
        raw = _fft_exact(list(f.values), p, n, 1)
        out = [None] * q
        order = _raw_order(p, n)
        for k in range(q):
            out[order[k]] = raw[k] / q
        return CoefficientMap(p, n, tuple(out))
    raw = _fft_raw(f.as_array(), p, _root_table(p, n), 1) / q
    out_arr = np.empty(q, dtype=complex)
    out_arr[_raw_order(p, n)] = raw
    return CoefficientMap(p, n, tuple(out_arr))


def _synthesize_exact_scaled_roots(p, level, entries, den) -> tuple:
    """Exact synthesis when every coefficient is one integer-weighted root
    over a common denominator: scatter integer weights per (point, exponent)
    in vectorized passes instead of looping scalar accumulators."""
    q = p**level
    xs = np.arange(q, dtype=np.int64)
    counts = np.zeros((q, q), dtype=np.int64)
    for k, v in entries:
        (e, w), = v.num.items()
        e *= p ** (level - v.n)  # lift the root to the target order
        np.add.at(counts, (xs, (e + k * xs) % q), w)
    out = []
    for row in counts:
        nz = np.nonzero(row)[0]
        out.append(Cyclotomic(p, level, {int(e): int(row[e]) for e in nz}, den))
    return tuple(out)


def synthesize(coeffs: CoefficientMap, level: int, exact_cap: int = EXACT_CAP_DEFAULT) -> LevelFunction:
    """Evaluate sum_c coef(c) * chi_c on Z/p^levelZ.

    Inverse of ``dft``/``fft`` whenever level >= the highest level carrying
    a nonzero coefficient.
    """
    p = coeffs.p
    needed = coeffs.max_nonzero_level()
    if level < needed:
        raise CannotLower(f"coefficients reach level {needed}, cannot evaluate at {level}")
    q = p**level
    entries = [
        (c.m * p ** (level - c.level), v)
        for c, v in coeffs.items()
        if c.level <= level and not _is_exact_zero(v)
    ]
    if coeffs.is_exact:
        _check_cap(p, level, exact_cap)
        cyc = [
            (k, v if isinstance(v, Cyclotomic) else Cyclotomic.from_rational(v, p))
            for k, v in entries
        ]
        dens = {v.den for _, v in cyc}
        if (
            cyc
            and len(dens) == 1
            and q <= 2048
            and all(len(v.num) == 1 and v.n <= level for _, v in cyc)
        ):
            return LevelFunction(p, level, _synthesize_exact_scaled_roots(p, level, cyc, dens.pop()))
        out = []
        for x in range(q):
            acc = CyclotomicAccumulator(p, level)
            add = acc.add
            for k, v in cyc:
                add(v, (k * x) % q)
            out.append(acc.value())
        return LevelFunction(p, level, tuple(out))
    table = _root_table(p, level)
    xs = np.arange(q, dtype=np.int64)
    vals = np.zeros(q, dtype=complex)
    for k, v in entries:
        vals += _to_complex(v) * table[(k * xs) % q]
    return LevelFunction(p, level, tuple(vals))


def coefficient_rows(coeffs: CoefficientMap) -> list[dict]:
    """Rows {m, n, re, im} in canonical order; scalars go double at this boundary."""
    rows = []
    for c, v in coeffs.items():
        z = _to_complex(v)
        rows.append({"m": c.m, "n": c.n, "re": z.real, "im": z.imag})
    return rows


def coefficients_to_csv(coeffs: CoefficientMap) -> str:
    lines = ["m,n,re,im"]
    for r in coefficient_rows(coeffs):
        lines.append(f"{r['m']},{r['n']},{r['re']!r},{r['im']!r}")
    return "\n".join(lines) + "\n"


def coefficients_to_json(coeffs: CoefficientMap) -> str:
    return json.dumps({"rows": coefficient_rows(coeffs)})
