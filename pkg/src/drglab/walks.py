"""Random-walk consequences of the resistance formulas: exact commute times,
the hitting/commute/cover bounds, the spectral-gap chain, and seeded Monte
Carlo estimation of hitting times on explicit graphs.

Walk simulation uses Python's Mersenne Twister (`random.Random(seed)`) with
uniform neighbor choice via `randrange` over the sorted adjacency list, so a
(seed, trials) pair pins the estimate exactly.  Step counts accumulate as
exact integers before any division, keeping results independent of
summation order.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .arrays import IntersectionArray
from .circuits import laplacian_spectral_gap
from .graphs import ExplicitGraph, verify_distance_regular
from .resistance import ValencyError, resistance_profile


@dataclass(frozen=True)
class WalkBoundsReport:
    """Exact commute times and the universal bounds they must respect."""

    array: IntersectionArray
    n: int
    m: Fraction
    commute_times: tuple[Fraction, ...]
    hitting_bound: int  # 2(n-1)
    commute_bound: int  # 4(n-1)
    cover_bound_dominant: float  # 4(n-1) ln n, asymptotic dominant term
    spectral_lower_bound: Fraction  # k / (4(n-1))
    resistance_gap_bound: Fraction  # 1 / (n d_D)
    middle_inequality_holds: bool  # 1/(n d_D) >= k/(4(n-1)), exact
    over_commute_bound: tuple[int, ...]  # distances j with C_j > 4(n-1)


def commute_time(arr: IntersectionArray, j: int) -> Fraction:
    """Expected round-trip steps between vertices at distance j: 2 m d_j."""
    profile = resistance_profile(arr)
    if not 1 <= j <= arr.D:
        raise ValueError(f"distance {j} outside 1..{arr.D}")
    return 2 * profile.m * profile.at(j)


def walk_bounds(arr: IntersectionArray) -> WalkBoundsReport:
    if arr.k <= 2:
        raise ValencyError(f"walk bounds need valency >= 3, got k = {arr.k}")
    profile = resistance_profile(arr)
    n, m = profile.n, profile.m
    commutes = tuple(2 * m * d for d in profile.d)
    commute_cap = 4 * (n - 1)
    gap_bound = 1 / (n * profile.d[-1])
    spectral_floor = Fraction(arr.k, 4 * (n - 1))
    return WalkBoundsReport(
        array=arr,
        n=n,
        m=m,
        commute_times=commutes,
        hitting_bound=2 * (n - 1),
        commute_bound=commute_cap,
        cover_bound_dominant=4 * (n - 1) * math.log(n),
        spectral_lower_bound=spectral_floor,
        resistance_gap_bound=gap_bound,
        middle_inequality_holds=gap_bound >= spectral_floor,
        over_commute_bound=tuple(j + 1 for j, c in enumerate(commutes) if c > commute_cap),
    )


@dataclass(frozen=True)
class MonteCarloEstimate:
    mean: float
    stderr: float
    trials: int
    seed: int


def simulate_hitting_time(
    g: ExplicitGraph, u: int, v: int, trials: int, seed: int
) -> MonteCarloEstimate:
    """Average steps of independent simple random walks from u until v."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if u == v:
        raise ValueError("hitting time needs distinct endpoints")
    rng = random.Random(seed)
    randrange = rng.randrange
    adjacency = g.adjacency
    total = 0
    total_sq = 0
    for _ in range(trials):
        cur = u
        steps = 0
        while cur != v:
            neighbors = adjacency[cur]
            cur = neighbors[randrange(len(neighbors))]
            steps += 1
        total += steps
        total_sq += steps * steps
    mean = total / trials
    if trials > 1:
        variance = (total_sq - total * total / trials) / (trials - 1)
        stderr = math.sqrt(max(variance, 0.0) / trials)
    else:
        stderr = 0.0
    return MonteCarloEstimate(mean, stderr, trials, seed)


def simulate_cover_time(
    g: ExplicitGraph, start: int, trials: int, seed: int
) -> MonteCarloEstimate:
    """Sanity harness for the cover bound; no acceptance threshold attached."""
    if g.n > 50:
        raise ValueError("cover-time simulation is limited to n <= 50")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    randrange = rng.randrange
    adjacency = g.adjacency
    total = 0
    total_sq = 0
    for _ in range(trials):
        seen = bytearray(g.n)
        seen[start] = 1
        remaining = g.n - 1
        cur = start
        steps = 0
        while remaining:
            neighbors = adjacency[cur]
            cur = neighbors[randrange(len(neighbors))]
            steps += 1
            if not seen[cur]:
                seen[cur] = 1
                remaining -= 1
        total += steps
        total_sq += steps * steps
    mean = total / trials
    if trials > 1:
        variance = (total_sq - total * total / trials) / (trials - 1)
        stderr = math.sqrt(max(variance, 0.0) / trials)
    else:
        stderr = 0.0
    return MonteCarloEstimate(mean, stderr, trials, seed)


@dataclass(frozen=True)
class SpectralCheckReport:
    """The chain sigma >= 1/(n d_D) >= k/(4(n-1)) on one graph."""

    sigma: float
    resistance_gap_bound: Fraction
    spectral_lower_bound: Fraction
    sigma_holds: bool  # sigma >= 1/(n d_D) within the eigensolver tolerance
    middle_holds: bool  # exact rational comparison
    tolerance: float


def spectral_check(g: ExplicitGraph, arr: IntersectionArray, tolerance: float = 1e-8) -> SpectralCheckReport:
    """Verify the spectral-gap chain on an explicit graph.

    The graph must verify as distance-regular with exactly `arr`; the two
    rational bounds are compared exactly, the eigensolver side within
    `tolerance`.
    """
    verified = verify_distance_regular(g)
    if not isinstance(verified, IntersectionArray) or verified != arr:
        raise ValueError(f"graph verifies as {verified}, expected {arr}")
    profile = resistance_profile(arr)
    gap_bound = 1 / (profile.n * profile.d[-1])
    spectral_floor = Fraction(arr.k, 4 * (profile.n - 1))
    sigma = laplacian_spectral_gap(g)
    return SpectralCheckReport(
        sigma=sigma,
        resistance_gap_bound=gap_bound,
        spectral_lower_bound=spectral_floor,
        sigma_holds=sigma >= float(gap_bound) - tolerance,
        middle_holds=gap_bound >= spectral_floor,
        tolerance=tolerance,
    )
