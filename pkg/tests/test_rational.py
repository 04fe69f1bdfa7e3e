"""Exact rounding and the fraction linear solver."""

from fractions import Fraction

import numpy as np
import pytest

from drglab.rational import decimal_string, round_half_even, solve_exact


class TestRounding:
    @pytest.mark.parametrize(
        "value,places,expected",
        [
            (Fraction(1, 2), 0, "0"),  # tie to even: 0
            (Fraction(3, 2), 0, "2"),  # tie to even: 2
            (Fraction(1, 8), 2, "0.12"),  # 0.125 -> even neighbor 0.12
            (Fraction(3, 8), 2, "0.38"),  # 0.375 -> even neighbor 0.38
            (Fraction(7, 8), 2, "0.88"),
            (Fraction(1, 3), 6, "0.333333"),
            (Fraction(2, 3), 6, "0.666667"),
            (Fraction(-2, 3), 4, "-0.6667"),
            (Fraction(0), 3, "0.000"),
            (Fraction(94, 101), 6, "0.930693"),
            (Fraction(64, 61), 5, "1.04918"),
            (Fraction(83, 80), 4, "1.0375"),
            (Fraction(1259, 1341), 6, "0.938852"),
            (Fraction(109, 125), 3, "0.872"),
            (Fraction(5), 2, "5.00"),
        ],
    )
    def test_decimal_string(self, value, places, expected):
        assert decimal_string(value, places) == expected

    def test_round_half_even_returns_fraction(self):
        assert round_half_even(Fraction(7, 3), 1) == Fraction(23, 10)
        assert round_half_even(Fraction(1, 2), 0) == 0
        assert round_half_even(Fraction(5, 2), 0) == 2

    def test_negative_places_rejected(self):
        with pytest.raises(ValueError):
            round_half_even(Fraction(1), -1)

    def test_matches_python_bankers_rounding(self):
        for numerator in range(-50, 50):
            value = Fraction(numerator, 4)
            assert round_half_even(value, 0) == round(float(value))


class TestSolver:
    def test_identity(self):
        eye = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
        rhs = [Fraction(i) for i in range(4)]
        assert solve_exact(eye, rhs) == rhs

    def test_requires_square(self):
        with pytest.raises(ValueError):
            solve_exact([[Fraction(1), Fraction(2)]], [Fraction(1)])

    def test_pivoting_past_zero(self):
        matrix = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
        assert solve_exact(matrix, [Fraction(5), Fraction(7)]) == [Fraction(7), Fraction(5)]

    def test_against_numpy_on_random_systems(self):
        rng = np.random.default_rng(42)
        for _ in range(20):
            size = int(rng.integers(2, 7))
            dense = rng.integers(-5, 6, size=(size, size))
            if abs(np.linalg.det(dense)) < 0.5:
                continue
            rhs = rng.integers(-5, 6, size=size)
            exact = solve_exact(
                [[Fraction(int(x)) for x in row] for row in dense],
                [Fraction(int(x)) for x in rhs],
            )
            assert np.allclose([float(x) for x in exact], np.linalg.solve(dense, rhs), atol=1e-9)
