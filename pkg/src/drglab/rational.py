"""Shared exact-arithmetic helpers: half-even decimal rendering and a
fraction-pivot linear solver."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def round_half_even(value: Fraction, places: int) -> Fraction:
    """Round an exact rational to `places` decimal digits, ties to even."""
    if places < 0:
        raise ValueError("places must be >= 0")
    scaled = value * 10**places
    whole, rem = divmod(scaled.numerator, scaled.denominator)
    double = 2 * rem
    if double > scaled.denominator or (double == scaled.denominator and whole % 2):
        whole += 1
    return Fraction(whole, 10**places)


def decimal_string(value: Fraction, places: int = 6) -> str:
    """Fixed-point decimal rendering of an exact rational, half-even."""
    sign = "-" if value < 0 else ""
    quantized = round_half_even(abs(Fraction(value)), places)
    scaled = quantized * 10**places
    if places == 0:
        return sign + str(scaled.numerator)
    digits = f"{scaled.numerator:0{places + 1}d}"
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def solve_exact(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve a nonsingular linear system over the rationals.

    Plain Gaussian elimination with the first nonzero pivot in each column;
    with exact arithmetic there is no stability concern, only size growth,
    which stays modest for the desk-scale systems used here.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("matrix must be square and match rhs length")
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]

    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise ValueError("singular matrix")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        for r in range(col + 1, n):
            factor = aug[r][col] / pivot
            if factor == 0:
                continue
            row_r, row_c = aug[r], aug[col]
            for c in range(col, n + 1):
                row_r[c] -= factor * row_c[c]

    solution = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        acc = aug[r][n]
        for c in range(r + 1, n):
            acc -= aug[r][c] * solution[c]
        solution[r] = acc / aug[r][r]
    return solution
