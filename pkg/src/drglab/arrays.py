"""Intersection arrays: parsing, structural validation, and the counting
data (shell sizes, edge counts, feasibility screens) derived from them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple


class MalformedInput(ValueError):
    """Array text that cannot be read at all."""


class LengthMismatch(ValueError):
    """Array text whose two halves have different lengths."""


@dataclass(frozen=True)
class IntersectionArray:
    """The parameter pair (b0,...,b_{D-1}; c1,...,cD) of a candidate graph.

    Construction only enforces shape (equal-length halves of positive
    integers).  Whether the entries satisfy the monotonicity and cross
    conditions of an actual distance-regular graph is a separate question,
    answered by `validate_basic`, so that bad candidates can be inspected
    instead of rejected at the door.
    """

    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.b) != len(self.c):
            raise LengthMismatch(f"b has {len(self.b)} entries, c has {len(self.c)}")
        if not self.b:
            raise MalformedInput("empty array")
        for seq, label in ((self.b, "b"), (self.c, "c")):
            for i, value in enumerate(seq):
                if not isinstance(value, int) or value < 1:
                    raise MalformedInput(f"{label}[{i}] = {value!r} is not a positive integer")

    @property
    def D(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        return self.b[0]

    def b_at(self, i: int) -> int:
        """b_i, with the boundary convention b_D = 0."""
        if not 0 <= i <= self.D:
            raise IndexError(f"b_{i} undefined for diameter {self.D}")
        return 0 if i == self.D else self.b[i]

    def c_at(self, i: int) -> int:
        """c_i, with the boundary convention c_0 = 0."""
        if not 0 <= i <= self.D:
            raise IndexError(f"c_{i} undefined for diameter {self.D}")
        return 0 if i == 0 else self.c[i - 1]

    def a_at(self, i: int) -> int:
        """a_i = k - b_i - c_i (same-shell neighbor count)."""
        return self.k - self.b_at(i) - self.c_at(i)

    def __str__(self) -> str:
        return format_intersection_array(self)


def format_intersection_array(arr: IntersectionArray) -> str:
    """Canonical text form: parenthesized, comma-separated, no spaces."""
    return "({};{})".format(",".join(map(str, arr.b)), ",".join(map(str, arr.c)))


_TOKEN = re.compile(r"^\d+$")


def parse_intersection_array(text: str) -> IntersectionArray:
    """Read array text like ``(3,2,1;1,2,3)``; outer parentheses optional.

    Lenient about whitespace, strict about everything else.  Structural
    invariants are not checked here.
    """
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    elif s.startswith("(") or s.endswith(")"):
        raise MalformedInput(f"unbalanced parentheses in {text!r}")
    halves = s.split(";")
    if len(halves) != 2:
        raise MalformedInput(f"expected exactly one ';' in {text!r}")

    def read_half(half: str, label: str) -> tuple[int, ...]:
        tokens = [t.strip() for t in half.split(",")]
        if tokens == [""]:
            raise MalformedInput(f"empty {label} half in {text!r}")
        values = []
        for t in tokens:
            if not _TOKEN.match(t):
                raise MalformedInput(f"bad token {t!r} in {text!r}")
            value = int(t)
            if value < 1:
                raise MalformedInput(f"non-positive entry {t!r} in {text!r}")
            values.append(value)
        return tuple(values)

    b = read_half(halves[0], "b")
    c = read_half(halves[1], "c")
    if len(b) != len(c):
        raise LengthMismatch(f"halves of {text!r} have lengths {len(b)} and {len(c)}")
    return IntersectionArray(b, c)


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class FeasibilityReport:
    array: IntersectionArray
    checks: tuple[CheckResult, ...]

    @property
    def overall(self) -> bool:
        return all(check.passed for check in self.checks)

    def failed(self) -> tuple[CheckResult, ...]:
        return tuple(check for check in self.checks if not check.passed)


def validate_basic(arr: IntersectionArray) -> FeasibilityReport:
    """Run the structural battery in fixed order, recording every outcome.

    Checks: c1 = 1; b strictly drops then never increases; c never
    decreases; b_i >= c_j whenever i + j <= D; every a_i >= 0.
    """
    checks: list[CheckResult] = []
    D, k = arr.D, arr.k

    ok = arr.c[0] == 1
    checks.append(CheckResult("c1_is_one", ok, "c1 = 1" if ok else f"c1 = {arr.c[0]}"))

    bad = None
    if D >= 2 and arr.b[1] >= k:
        bad = (1, "b1 must be strictly below b0")
    else:
        for i in range(2, D):
            if arr.b[i] > arr.b[i - 1]:
                bad = (i, f"b{i} = {arr.b[i]} exceeds b{i - 1} = {arr.b[i - 1]}")
                break
    checks.append(
        CheckResult("b_monotone", bad is None, "b0 > b1 >= ... >= b_{D-1}" if bad is None else f"index {bad[0]}: {bad[1]}")
    )

    bad = None
    for i in range(1, D):
        if arr.c[i] < arr.c[i - 1]:
            bad = (i + 1, f"c{i + 1} = {arr.c[i]} below c{i} = {arr.c[i - 1]}")
            break
    checks.append(
        CheckResult("c_monotone", bad is None, "c1 <= ... <= cD" if bad is None else f"index {bad[0]}: {bad[1]}")
    )

    bad = None
    for i in range(0, D):
        for j in range(1, D - i + 1):
            if arr.b_at(i) < arr.c_at(j):
                bad = (i, j)
                break
        if bad:
            break
    checks.append(
        CheckResult(
            "cross_condition",
            bad is None,
            "b_i >= c_j for i+j <= D" if bad is None else f"b{bad[0]} = {arr.b_at(bad[0])} < c{bad[1]} = {arr.c_at(bad[1])}",
        )
    )

    bad = None
    for i in range(0, D + 1):
        if arr.a_at(i) < 0:
            bad = i
            break
    checks.append(
        CheckResult("a_nonnegative", bad is None, "a_i >= 0 for all i" if bad is None else f"a{bad} = {arr.a_at(bad)} < 0")
    )

    return FeasibilityReport(arr, tuple(checks))


@dataclass(frozen=True)
class DistanceDistribution:
    """Shell sizes and edge counts implied by the recurrence
    c_{i+1} k_{i+1} = b_i k_i, kept as exact rationals.

    `integral` is a verdict, not a guard: a fractional value simply means
    no graph can realize the array.  `shells_integral` ignores the edge
    count m, which can be half-integral on parity-violating candidates
    whose shells are all whole; the scan pipeline screens on shells alone
    so that such candidates still reach the resistance classification.
    """

    k_sizes: tuple[Fraction, ...]
    n: Fraction
    e: tuple[Fraction, ...]
    m: Fraction
    integral: bool
    shells_integral: bool


def compute_distance_distribution(arr: IntersectionArray) -> DistanceDistribution:
    sizes = [Fraction(1)]
    for i in range(arr.D):
        sizes.append(sizes[-1] * arr.b[i] / arr.c[i])
    n = sum(sizes)
    e = tuple(sizes[i] * arr.b[i] for i in range(arr.D))
    m = n * arr.k / 2
    shells_integral = all(size.denominator == 1 for size in sizes)
    return DistanceDistribution(
        tuple(sizes), n, e, m, shells_integral and m.denominator == 1, shells_integral
    )


def check_divisibility(arr: IntersectionArray) -> CheckResult:
    """Neighborhood-clique divisibility screen.

    When c2 = 1 the neighborhood of any vertex splits into disjoint cliques
    of size a1 + 1, forcing (a1 + 1) | k.  The screen is applied in the
    b1 in {3, 4} range where the valency classification leans on it, and
    passes as not-applicable otherwise.
    """
    b1 = arr.b_at(1)
    c2 = arr.c_at(2) if arr.D >= 2 else 1
    if c2 != 1 or b1 not in (3, 4):
        return CheckResult("divisibility", True, "not applicable (needs c2 = 1 and b1 in {3,4})")
    a1 = arr.a_at(1)
    if arr.k % (a1 + 1) == 0:
        return CheckResult("divisibility", True, f"(a1+1) = {a1 + 1} divides k = {arr.k}")
    return CheckResult("divisibility", False, f"(a1+1) = {a1 + 1} does not divide k = {arr.k}")


class HeadBound(NamedTuple):
    j: int
    bound: int
    passed: bool


def diameter_head_bound(arr: IntersectionArray) -> HeadBound:
    """Diameter cap from the first crossing index j = min{i : c_i >= b_i}.

    A strict crossing caps D at 2j - 1, a tie at 3j - 1.  The convention
    b_D = 0 guarantees the index exists; when j = D the cap is vacuous.
    """
    D = arr.D
    j = next(i for i in range(1, D + 1) if arr.c_at(i) >= arr.b_at(i))
    bound = 2 * j - 1 if arr.c_at(j) > arr.b_at(j) else 3 * j - 1
    return HeadBound(j, bound, D <= bound)
