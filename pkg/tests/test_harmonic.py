import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from padic_harmonics import (
    CannotLower,
    CharIndex,
    CoefficientMap,
    Cyclotomic,
    ExactnessCapExceeded,
    InsufficientLevel,
    LevelFunction,
    LevelMismatch,
    coefficients_to_csv,
    coefficients_to_json,
    dft,
    enumerate_chars,
    fft,
    haar_inner,
    lift,
    sample_char,
    synthesize,
)


def random_function(p, n, seed=0):
    rng = np.random.default_rng(seed)
    q = p**n
    z = rng.standard_normal(q) + 1j * rng.standard_normal(q)
    return LevelFunction(p, n, tuple(map(complex, z)))


def max_coeff_diff(a: CoefficientMap, b: CoefficientMap) -> float:
    return float(np.max(np.abs(a.as_array() - b.as_array())))


class TestLevelFunction:
    def test_length_must_match_level(self):
        with pytest.raises(ValueError):
            LevelFunction(2, 2, (1, 2, 3))

    def test_exactness_detection(self):
        assert LevelFunction(2, 1, (1, Fraction(1, 2))).is_exact
        assert not LevelFunction(2, 1, (1.0, 0j)).is_exact

    def test_call_wraps_modulo(self):
        f = LevelFunction(2, 1, (10, 20))
        assert f(0) == 10 and f(5) == 20


class TestHaarInner:
    def test_character_has_unit_norm(self):
        for p, m, n in ((2, 1, 1), (3, 2, 2), (5, 3, 1)):
            chi = sample_char(CharIndex(p, m, n), n)
            assert abs(haar_inner(chi, chi) - 1) < 1e-15

    def test_distinct_characters_orthogonal(self):
        a = sample_char(CharIndex(2, 1, 1), 1)
        b = sample_char(CharIndex.trivial(2), 1)
        assert haar_inner(a, b) == 0  # (1 + (-1)) / 2

    def test_constants(self):
        one = LevelFunction(3, 1, (1.0, 1.0, 1.0))
        assert haar_inner(one, one) == 1

    def test_exact_orthonormality_all_pairs(self):
        for p, n in ((2, 3), (3, 2)):
            chars = enumerate_chars(p, n)
            sampled = [sample_char(c, n, exact=True) for c in chars]
            for i, f in enumerate(sampled):
                for j, g in enumerate(sampled):
                    inner = haar_inner(f, g)
                    assert inner == (1 if i == j else 0)

    def test_level_mismatch(self):
        with pytest.raises(LevelMismatch):
            haar_inner(LevelFunction(2, 0, (1,)), LevelFunction(2, 1, (1, 1)))


class TestLift:
    def test_constant_stays_constant(self):
        f = LevelFunction(2, 0, (7.0,))
        assert lift(f, 3).values == (7.0,) * 8

    def test_pattern_repeats(self):
        f = LevelFunction(2, 1, (1.0, 2.0))
        assert lift(f, 2).values == (1.0, 2.0, 1.0, 2.0)

    def test_cannot_lower(self):
        with pytest.raises(CannotLower):
            lift(LevelFunction(2, 2, (1, 2, 3, 4)), 1)

    def test_isometry(self):
        f, g = random_function(3, 2, 1), random_function(3, 2, 2)
        lhs = haar_inner(lift(f, 4), lift(g, 4))
        assert abs(lhs - haar_inner(f, g)) < 1e-13

    def test_lift_extends_coefficients_by_zero(self):
        f = random_function(2, 3, seed=5)
        low = dft(f)
        high = dft(lift(f, 5))
        for c, v in high.items():
            expect = low[c] if c.level <= 3 else 0
            assert abs(v - expect) < 1e-12


class TestDft:
    def test_character_maps_to_delta(self):
        c = CharIndex(3, 2, 2)
        coeffs = dft(sample_char(c, 2))
        for cc, v in coeffs.items():
            expect = 1 if cc == c else 0
            assert abs(v - expect) < 1e-14

    def test_even_indicator_level_one(self):
        f = LevelFunction(2, 1, (1.0, 0.0))
        coeffs = dft(f)
        assert abs(coeffs[CharIndex.trivial(2)] - 0.5) < 1e-15
        assert abs(coeffs[CharIndex(2, 1, 1)] - 0.5) < 1e-15

    def test_point_mass_is_flat(self):
        n = 3
        values = [0.0] * 8
        values[0] = 1.0
        coeffs = dft(LevelFunction(2, n, tuple(values)))
        assert all(abs(v - Fraction(1, 8)) < 1e-15 for _, v in coeffs.items())

    def test_exact_point_mass(self):
        values = [0] * 9
        values[0] = 1
        coeffs = dft(LevelFunction(3, 2, tuple(values)))
        assert all(v == Fraction(1, 9) for _, v in coeffs.items())

    def test_exact_matches_float(self):
        f_exact = LevelFunction(2, 2, (1, 0, Fraction(1, 2), 3))
        f_float = LevelFunction(2, 2, (1.0, 0.0, 0.5, 3.0))
        ce, cf = dft(f_exact), dft(f_float)
        assert max_coeff_diff(ce, cf) < 1e-14

    def test_exact_cap_enforced(self):
        f = LevelFunction(2, 13, (0,) * 2**13)
        with pytest.raises(ExactnessCapExceeded):
            dft(f)
        with pytest.raises(ExactnessCapExceeded):
            fft(f)


class TestFft:
    @pytest.mark.parametrize("p,n", [(2, 1), (2, 5), (3, 3), (5, 2), (7, 1)])
    def test_matches_dft(self, p, n):
        f = random_function(p, n, seed=p * 10 + n)
        assert max_coeff_diff(fft(f), dft(f)) < 1e-11

    def test_matches_dft_at_large_size(self):
        # 2^13 points: chunked direct summation against the fast transform
        f = random_function(2, 13, seed=99)
        assert max_coeff_diff(fft(f), dft(f)) < 1e-10

    def test_constant_function(self):
        f = LevelFunction(3, 2, (4.0,) * 9)
        coeffs = fft(f)
        assert abs(coeffs[CharIndex.trivial(3)] - 4) < 1e-14
        rest = [v for c, v in coeffs.items() if not c.is_trivial()]
        assert max(abs(v) for v in rest) < 1e-14

    def test_exact_fft_matches_exact_dft(self):
        for p, n in ((2, 3), (3, 2)):
            q = p**n
            values = tuple(Fraction(k % 3, 2) for k in range(q))
            f = LevelFunction(p, n, values)
            a, b = fft(f), dft(f)
            for (ca, va), (cb, vb) in zip(a.items(), b.items()):
                assert ca == cb and va == vb

    def test_parseval(self):
        # largest case named by the invariant: p^n = 3^8
        f = random_function(3, 8, seed=3)
        coeffs = fft(f)
        lhs = float(np.mean(np.abs(f.as_array()) ** 2))
        rhs = float(np.sum(np.abs(coeffs.as_array()) ** 2))
        assert abs(lhs - rhs) < 1e-12

    def test_hundred_random_inputs_at_level_ten(self):
        for seed in range(100):
            f = random_function(2, 10, seed=seed)
            assert max_coeff_diff(fft(f), dft(f)) <= 1e-10


class TestSynthesize:
    def test_round_trip(self):
        for p, n, seed in ((2, 6, 1), (3, 4, 2), (5, 3, 3)):
            f = random_function(p, n, seed=seed)
            g = synthesize(dft(f), n)
            err = np.max(np.abs(f.as_array() - g.as_array()))
            assert err < 1e-12

    def test_single_coefficient_gives_character(self):
        c = CharIndex(2, 3, 2)
        coeffs = CoefficientMap.from_dict(2, 2, {c: 1.0 + 0j}, fill=0j)
        f = synthesize(coeffs, 2)
        chi = sample_char(c, 2)
        assert np.max(np.abs(f.as_array() - chi.as_array())) < 1e-15

    def test_ball_coefficients_give_indicator(self):
        # closed-form expansion of the odd residues: 1/2 at (1,0), -1/2 at (1,1)
        coeffs = CoefficientMap.from_dict(
            2, 1, {CharIndex.trivial(2): 0.5 + 0j, CharIndex(2, 1, 1): -0.5 + 0j}, fill=0j
        )
        f = synthesize(coeffs, 1)
        assert np.max(np.abs(f.as_array() - np.array([0, 1.0]))) < 1e-15

    def test_exact_round_trip(self):
        values = (Fraction(1, 3), 2, 0, Fraction(5, 7))
        f = LevelFunction(2, 2, values)
        g = synthesize(dft(f), 2)
        assert all(a == b for a, b in zip(g.values, f.values))

    def test_exact_fast_path_matches_accumulator_loop(self):
        # scaled-single-root maps take a vectorized branch; pin it against
        # the scalar accumulator on a map that dodges the branch via a
        # mismatched denominator
        from padic_harmonics import Ball, ball_coefficients
        from padic_harmonics.cyclotomic import CyclotomicAccumulator

        cm = ball_coefficients(Ball(3, 4, 2), exact=True)
        mixed = CoefficientMap(
            3, 2, (cm.values[0] * Fraction(1, 5),) + cm.values[1:]
        )
        for coeffs in (cm, mixed):
            fast = synthesize(coeffs, 3)
            q = 27
            entries = [(c.m * 3 ** (3 - c.level), v) for c, v in coeffs.items()]
            for x in range(q):
                acc = CyclotomicAccumulator(3, 3)
                for k, v in entries:
                    acc.add(v, (k * x) % q)
                assert fast.values[x] == acc.value()

    def test_cannot_lower(self):
        c = CharIndex(2, 1, 3)
        coeffs = CoefficientMap.from_dict(2, 3, {c: 1.0 + 0j}, fill=0j)
        with pytest.raises(CannotLower):
            synthesize(coeffs, 2)

    def test_levels_above_are_fine_when_zero(self):
        coeffs = CoefficientMap.from_dict(2, 3, {CharIndex.trivial(2): 1.0 + 0j}, fill=0j)
        f = synthesize(coeffs, 0)
        assert abs(f.values[0] - 1) < 1e-15


class TestCoefficientMap:
    def test_keys_are_the_full_level(self):
        coeffs = dft(random_function(2, 3))
        assert [c for c, _ in coeffs.items()] == list(enumerate_chars(2, 3))

    def test_from_dict_rejects_deep_keys(self):
        with pytest.raises(CannotLower):
            CoefficientMap.from_dict(2, 1, {CharIndex(2, 1, 2): 1.0})

    def test_getitem(self):
        coeffs = dft(LevelFunction(2, 1, (1.0, 0.0)))
        assert abs(coeffs[CharIndex(2, 1, 1)] - 0.5) < 1e-15
        with pytest.raises(KeyError):
            coeffs[CharIndex(2, 1, 5)]


class TestSerialization:
    def test_csv_shape_and_order(self):
        coeffs = dft(LevelFunction(2, 1, (1.0, 0.0)))
        text = coefficients_to_csv(coeffs)
        lines = text.strip().split("\n")
        assert lines[0] == "m,n,re,im"
        assert lines[1].startswith("1,0,0.5,")
        assert lines[2].startswith("1,1,0.5,")

    def test_json_rows(self):
        coeffs = dft(LevelFunction(2, 1, (1.0, 0.0)))
        obj = json.loads(coefficients_to_json(coeffs))
        assert list(obj) == ["rows"]
        assert obj["rows"][0] == {"m": 1, "n": 0, "re": 0.5, "im": 0.0}

    def test_exact_values_serialize_as_floats(self):
        coeffs = dft(LevelFunction(2, 1, (1, 0)))
        obj = json.loads(coefficients_to_json(coeffs))
        assert obj["rows"][1] == {"m": 1, "n": 1, "re": 0.5, "im": 0.0}


class TestSampleChar:
    def test_needs_enough_room(self):
        with pytest.raises(InsufficientLevel):
            sample_char(CharIndex(2, 1, 3), 2)

    def test_exact_and_float_agree(self):
        c = CharIndex(3, 2, 2)
        fe = sample_char(c, 3, exact=True)
        ff = sample_char(c, 3)
        assert np.max(np.abs(fe.as_array() - ff.as_array())) < 1e-15


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([(2, 4), (3, 2), (5, 1)]), st.integers(0, 1000))
def test_fft_dft_synthesize_consistency(shape, seed):
    p, n = shape
    f = random_function(p, n, seed=seed)
    a = dft(f)
    b = fft(f)
    assert max_coeff_diff(a, b) < 1e-11
    g = synthesize(b, n)
    assert np.max(np.abs(f.as_array() - g.as_array())) < 1e-12
