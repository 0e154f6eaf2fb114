"""The equivariant Dirac operator diagonal in the character basis.

D scales the character of level n by ((n+1)^2 * p^(n+1))^(1/s), where
s > 0 is the summability parameter.  The same rule is applied to the
trivial character (level 0), which keeps D invertible and makes the
level-0 term of Tr|D|^(-s) equal to 1/p.  Because right translation by y
also acts diagonally (by the character value at y), D commutes with it
exactly; multiplication by a character, in contrast, shifts characters
around and its commutator with D is a finite-rank scaled partial
permutation whose norm is read off as the largest scalar magnitude.

At t = s the per-index trace term collapses to the rational
1/((n+1)^2 * p^(n+1)) independently of s, so trace partial sums are exact
fractions there; for t < s the per-level increments grow geometrically
with ratio tending to p^(1 - t/s) and the trace diverges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .characters import CharIndex, enumerate_chars, char_position
from .errors import InsufficientLevel, PrimeMismatch
from .harmonic import CoefficientMap, _to_complex
from .padic import check_prime


def level_count(p: int, n: int) -> int:
    """Number of characters of exact level n."""
    return 1 if n == 0 else p**n - p ** (n - 1)


@dataclass(frozen=True)
class TraceRow:
    level: int
    count: int
    term: object  # per-index eigenvalue^(-t); Fraction when t == s
    increment: object
    partial_sum: object
    tail_bound: object  # Fraction bound on limit - partial, t == s only

    def as_floats(self) -> dict:
        return {
            "level": self.level,
            "count": self.count,
            "term": float(self.term),
            "partial_sum": float(self.partial_sum),
            "tail_bound": float(self.tail_bound) if self.tail_bound is not None else None,
        }


@dataclass(frozen=True)
class TraceReport:
    p: int
    s: float
    t: float
    rows: tuple[TraceRow, ...]

    @property
    def partial_sum(self):
        return self.rows[-1].partial_sum

    @property
    def is_exact(self) -> bool:
        return isinstance(self.partial_sum, Fraction)

    def to_csv(self) -> str:
        lines = ["level,count,term,partial_sum,tail_bound"]
        for r in self.rows:
            f = r.as_floats()
            tb = "" if f["tail_bound"] is None else repr(f["tail_bound"])
            lines.append(f"{r.level},{r.count},{f['term']!r},{f['partial_sum']!r},{tb}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CommutatorReport:
    """Where [D, multiplication-by-chi] acts at truncation level L."""

    char: CharIndex
    level: int
    columns: tuple[CharIndex, ...]
    rank: int
    norm: float
    matrix: np.ndarray | None = field(default=None, compare=False, repr=False)

    def to_json(self) -> str:
        return json.dumps(
            {
                "c": str(self.char),
                "L": self.level,
                "columns": [str(c) for c in self.columns],
                "rank": self.rank,
                "norm": self.norm,
            }
        )


@dataclass(frozen=True)
class ResolventReport:
    bound: float
    count: int
    min_level_at_or_above: int


@dataclass(frozen=True)
class DiracOperator:
    p: int
    s: float

    def __post_init__(self):
        check_prime(self.p)
        if not self.s > 0:
            raise ValueError("summability parameter must be > 0")

    def eigenvalue_base(self, n: int) -> int:
        """(n+1)^2 * p^(n+1) for level n, before the 1/s power."""
        return (n + 1) ** 2 * self.p ** (n + 1)

    def eigenvalue(self, c: CharIndex | int) -> float:
        n = c if isinstance(c, int) else c.level
        return self.eigenvalue_base(n) ** (1.0 / self.s)

    def trace(self, max_level: int, t: float | None = None) -> TraceReport:
        """Partial sums of sum over characters of eigenvalue^(-t), by level.

        With t = s every term is the exact fraction 1/((n+1)^2 p^(n+1)) and
        the report carries exact partial sums plus the tail bound
        (1 - 1/p)/p * 1/(L+1) on limit - partial(L).  Other exponents run
        in floating point; for t < s the rows document the divergence.
        """
        if max_level < 0:
            raise ValueError("max_level must be >= 0")
        if t is None:
            t = self.s
        if not t > 0:
            raise ValueError("trace exponent must be > 0")
        exact = t == self.s
        p = self.p
        rows = []
        partial = Fraction(0) if exact else 0.0
        for n in range(max_level + 1):
            count = level_count(p, n)
            if exact:
                term = Fraction(1, self.eigenvalue_base(n))
                tail = Fraction(p - 1, p * p) * Fraction(1, n + 1)
            else:
                term = float(self.eigenvalue_base(n)) ** (-t / self.s)
                tail = None
            increment = count * term
            partial = partial + increment
            rows.append(TraceRow(n, count, term, increment, partial, tail))
        return TraceReport(p, self.s, t, tuple(rows))

    def apply(self, coeffs: CoefficientMap) -> CoefficientMap:
        """Scale each coefficient by its eigenvalue (floating output)."""
        if coeffs.p != self.p:
            raise PrimeMismatch(f"coefficients over p={coeffs.p}, operator over p={self.p}")
        out = tuple(
            self.eigenvalue(c) * _to_complex(v) for c, v in coeffs.items()
        )
        return CoefficientMap(coeffs.p, coeffs.level, out)

    def commutator(
        self, c: CharIndex, level: int, include_matrix: bool = False
    ) -> CommutatorReport:
        """Action of [D, pi(chi_c)] on the level-L character basis.

        pi is pointwise multiplication, so the commutator sends chi to
        (eigenvalue(c + chi) - eigenvalue(chi)) * chi_(c + chi): a scaled
        partial permutation.  Columns of level above level(c) are exactly
        zero (adding c there keeps the level, hence the eigenvalue), so the
        report is independent of L once L > level(c).
        """
        if c.p != self.p:
            raise PrimeMismatch(f"character over p={c.p}, operator over p={self.p}")
        if level < c.level:
            raise InsufficientLevel(f"level {level} below character level {c.level}")
        chars = enumerate_chars(self.p, level)
        columns = []
        deltas = []
        targets = []
        for cp in chars:
            target = c + cp
            delta = self.eigenvalue(target) - self.eigenvalue(cp)
            if delta != 0.0:
                columns.append(cp)
                deltas.append(delta)
                targets.append(target)
        norm = max((abs(d) for d in deltas), default=0.0)
        matrix = None
        if include_matrix:
            q = self.p**level
            matrix = np.zeros((q, q))
            for cp, target, delta in zip(columns, targets, deltas):
                matrix[char_position(target), char_position(cp)] = delta
        return CommutatorReport(c, level, tuple(columns), len(columns), norm, matrix)

    def equivariance_defect(self, y: int, level: int, dense: bool | None = None) -> float:
        """Max-norm of [D, R_y] at truncation level L, in the character basis.

        Right translation R_y multiplies chi by chi(y), so both operators
        are diagonal there and the result is exactly 0.  With dense=True the
        two operators are materialized and multiplied as full matrices; the
        default does that up to 512 points and stays on the diagonals above.
        """
        chars = enumerate_chars(self.p, level)
        lam = np.array([self.eigenvalue(c) for c in chars])
        rot = np.array([c(y).to_complex() for c in chars])
        if dense is None:
            dense = len(chars) <= 512
        if dense:
            d_mat = np.diag(lam).astype(complex)
            r_mat = np.diag(rot)
            return float(np.max(np.abs(d_mat @ r_mat - r_mat @ d_mat)))
        return float(np.max(np.abs(lam * rot - rot * lam)))

    def resolvent_count(self, bound: float) -> ResolventReport:
        """How many eigenvalues sit below the bound; always finite.

        Eigenvalues are constant on each level and strictly increase with
        it, so the walk stops at the first level at or above the bound.
        """
        if not bound > 0:
            raise ValueError("bound must be > 0")
        count = 0
        n = 0
        while self.eigenvalue(n) < bound:
            count += level_count(self.p, n)
            n += 1
        return ResolventReport(bound, count, n)
