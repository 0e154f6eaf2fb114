from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from padic_harmonics import Cyclotomic, Phase, PrimeMismatch
from padic_harmonics.cyclotomic import CyclotomicAccumulator, root_complex


def rand_cyclo(draw, p, n, size=3):
    q = p**n
    num = {draw(st.integers(0, q - 1)): draw(st.integers(-5, 5)) for _ in range(size)}
    den = draw(st.integers(1, 6))
    return Cyclotomic(p, n, num, den)


@st.composite
def cyclos(draw, p=2, n=3):
    return rand_cyclo(draw, p, n)


def test_root_complex_quarter_points():
    assert root_complex(8, 0) == 1
    assert root_complex(8, 2) == 1j
    assert root_complex(8, 4) == -1
    assert root_complex(8, 6) == -1j


def test_primitive_root_sums_vanish():
    # sum of all q-th roots whose order is exactly p^k, plus lower ones,
    # i.e. the full orbit 0, q/p, 2q/p, .. of any root: exactly zero
    for p, k in ((2, 1), (2, 3), (3, 2), (5, 2), (7, 1)):
        q = p**k
        total = Cyclotomic.zero(p, k)
        for j in range(p):
            total = total + Cyclotomic.from_root(p, k, j * (q // p))
        assert total.is_zero()
        assert total == 0
        assert total.to_complex() == 0j


def test_shifted_orbit_sums_vanish():
    q = 27
    for shift in range(1, 9):
        s = sum(
            (Cyclotomic.from_root(3, 3, shift + j * 9) for j in range(3)),
            Cyclotomic.zero(3, 3),
        )
        assert s.is_zero()


def test_order_embedding_equality():
    minus_one = Cyclotomic.from_root(2, 1, 1)
    assert minus_one == Cyclotomic.from_root(2, 3, 4)
    assert minus_one == -1


def test_i_squared():
    i = Cyclotomic.from_root(2, 2, 1)
    assert i * i == -1
    assert (i * i.conjugate()) == 1


def test_rational_detection():
    z = Cyclotomic.from_rational(Fraction(3, 4), 2)
    assert z.is_rational() and z.as_fraction() == Fraction(3, 4)
    root = Cyclotomic.from_root(3, 1, 1)
    assert not root.is_rational()
    with pytest.raises(ValueError):
        root.as_fraction()


def test_nonreal_sum_of_two_cube_roots():
    # zeta_3 + zeta_3^2 = -1 by the minimal polynomial
    z = Cyclotomic.from_root(3, 1, 1) + Cyclotomic.from_root(3, 1, 2)
    assert z == -1


def test_prime_mismatch_rejected():
    with pytest.raises(PrimeMismatch):
        Cyclotomic.from_root(2, 1, 1) + Cyclotomic.from_root(3, 1, 1)


def test_from_phase_matches_complex():
    ph = Phase(2, 3, 3)
    z = Cyclotomic.from_phase(ph)
    assert z.to_complex() == ph.to_complex()


def test_division_by_scalar():
    z = Cyclotomic.from_root(2, 2, 1) / 4
    assert z * 4 == Cyclotomic.from_root(2, 2, 1)
    assert (z / Fraction(1, 2)) == Cyclotomic.from_root(2, 2, 1) / 2


@given(cyclos(), cyclos())
def test_arithmetic_matches_complex_oracle(a, b):
    assert abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-9
    assert abs((a - b).to_complex() - (a.to_complex() - b.to_complex())) < 1e-9
    assert abs((a * b).to_complex() - (a.to_complex() * b.to_complex())) < 1e-9
    assert abs(a.conjugate().to_complex() - a.to_complex().conjugate()) < 1e-12


@given(cyclos(p=3, n=2), cyclos(p=3, n=2), cyclos(p=3, n=2))
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(cyclos(p=2, n=3))
def test_zero_test_agrees_with_complex(a):
    if a.is_zero():
        assert a.to_complex() == 0j
    else:
        # at these coefficient heights a nonzero algebraic number of degree
        # phi(8) = 4 cannot sit this close to zero
        assert abs(a.to_complex()) > 1e-9
    assert (a - a).is_zero()


def test_accumulator_matches_naive_sum():
    acc = CyclotomicAccumulator(2, 3)
    total = Cyclotomic.zero(2, 3)
    terms = [
        (Cyclotomic.from_root(2, 2, 1) / 3, 5),
        (Fraction(2, 7), 1),
        (4, 6),
        (Cyclotomic(2, 3, {0: 1, 3: -2}, 5), 2),
    ]
    for value, shift in terms:
        acc.add(value, shift)
        v = value if isinstance(value, Cyclotomic) else Cyclotomic.from_rational(value, 2)
        total = total + v * Cyclotomic.from_root(2, 3, shift)
    assert acc.value() == total
    assert acc.value(extra_den=8) == total / 8


def test_accumulator_rejects_higher_order_terms():
    acc = CyclotomicAccumulator(2, 1)
    with pytest.raises(ValueError):
        acc.add(Cyclotomic.from_root(2, 3, 1))


def test_complex_conversion_of_exact_zero_is_clean():
    z = sum(
        (Cyclotomic.from_root(5, 2, 7 + j * 5) for j in range(5)),
        Cyclotomic.zero(5, 2),
    )
    assert z.to_complex() == 0j
