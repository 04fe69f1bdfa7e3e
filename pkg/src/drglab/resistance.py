"""Per-distance resistances, the head-to-tail resistance ratio, and the
classification of arrays against the sharp two-terminal bound.

The classification threshold 87/100 is an exact rational on purpose: a
VIOLATION verdict asserts that no distance-regular graph of valency >= 3
realizes the array, and such a statement must not hinge on rounding.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .arrays import IntersectionArray, compute_distance_distribution, parse_intersection_array
from .potentials import potentials_recursive

#: Ratios at or above this are impossible outside the four extremal graphs.
BIGGS_THRESHOLD = Fraction(87, 100)

#: The extremal ratio; d_D/d_1 <= 1 + SHARP_RATIO with equality only for Biggs-Smith.
SHARP_RATIO = Fraction(94, 101)


class ValencyError(ValueError):
    """Raised for valency <= 2, where the resistance bound is false."""


class BiggsClass(enum.Enum):
    PASS_STRICT = "PASS_STRICT"
    EXTREMAL = "EXTREMAL"
    VIOLATION = "VIOLATION"


class ExtremalEntry(NamedTuple):
    name: str
    aliases: tuple[str, ...]
    array: IntersectionArray
    ratio: Fraction


_EXTREMAL = (
    ExtremalEntry(
        "Biggs-Smith Graph",
        (),
        parse_intersection_array("(3,2,2,2,1,1,1;1,1,1,1,1,1,3)"),
        Fraction(94, 101),
    ),
    ExtremalEntry(
        "Foster Graph",
        (),
        parse_intersection_array("(3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3)"),
        Fraction(319, 356),
    ),
    ExtremalEntry(
        "Flag graph of GH(2,2)",
        ("Line graph of Tutte's 12-Cage",),
        parse_intersection_array("(4,2,2,2,2,2;1,1,1,1,1,2)"),
        Fraction(166, 188),
    ),
    ExtremalEntry(
        "Tutte's 12-Cage",
        ("Benson's graph",),
        parse_intersection_array("(3,2,2,2,2,2;1,1,1,1,1,3)"),
        Fraction(109, 125),
    ),
)


def extremal_set() -> tuple[ExtremalEntry, ...]:
    """The four graphs whose ratio lands in [87/100, 94/101]."""
    return _EXTREMAL


@dataclass(frozen=True)
class ResistanceProfile:
    """Resistances d_1 < ... < d_D between vertices at each distance.

    m stays an exact rational: parity-violating candidates with whole
    shells have a half-integral edge count, and their formal resistances
    are still worth reporting.
    """

    d: tuple[Fraction, ...]
    ratio: Fraction
    K_factor: Fraction
    n: int
    m: Fraction
    k: int

    def at(self, j: int) -> Fraction:
        if not 1 <= j <= len(self.d):
            raise IndexError(f"distance {j} outside 1..{len(self.d)}")
        return self.d[j - 1]


def resistance_profile(arr: IntersectionArray) -> ResistanceProfile:
    """d_j = 2 (phi_0 + ... + phi_{j-1}) / (n k), exactly.

    Requires whole shell sizes; d_1 always simplifies to (n-1)/m.
    """
    dist = compute_distance_distribution(arr)
    if not dist.shells_integral:
        raise ValueError(f"{arr} has a non-integral distance distribution")
    p = potentials_recursive(arr)
    current = dist.n * arr.k
    d = []
    prefix = Fraction(0)
    for j in range(1, arr.D + 1):
        prefix += p.phi[j - 1]
        d.append(2 * prefix / current)
    ratio = p.tail_sum() / p.phi[0]
    return ResistanceProfile(
        d=tuple(d),
        ratio=ratio,
        K_factor=1 + ratio,
        n=int(dist.n),
        m=dist.m,
        k=arr.k,
    )


def biggs_ratio(arr: IntersectionArray) -> Fraction:
    """(phi_1 + ... + phi_{D-1}) / phi_0; zero for diameter 1."""
    p = potentials_recursive(arr)
    return p.tail_sum() / p.phi[0]


@dataclass(frozen=True)
class BiggsVerdict:
    array: IntersectionArray
    category: BiggsClass
    ratio: Fraction
    matched_extremal: Optional[str] = None


def classify_biggs(arr: IntersectionArray) -> BiggsVerdict:
    """Place an array strictly below the 87/100 threshold, in the extremal
    set, or beyond realizability.

    Membership in the extremal set is by verbatim array equality: a distinct
    array whose ratio merely coincides with an extremal value is still a
    VIOLATION.
    """
    if arr.k <= 2:
        raise ValencyError(f"classification needs valency >= 3, got k = {arr.k}")
    ratio = biggs_ratio(arr)
    if ratio < BIGGS_THRESHOLD:
        return BiggsVerdict(arr, BiggsClass.PASS_STRICT, ratio)
    for entry in _EXTREMAL:
        if arr == entry.array:
            return BiggsVerdict(arr, BiggsClass.EXTREMAL, ratio, entry.name)
    return BiggsVerdict(arr, BiggsClass.VIOLATION, ratio)
