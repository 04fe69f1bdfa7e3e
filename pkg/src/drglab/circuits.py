"""Circuit checks on explicit graphs: the adjacent-pair distance partition,
the piecewise-constant voltage function built from a potential sequence, and
two independent numerical routes (exact Laplacian solve, Jacobi spectrum).

The resistance oracle works entirely in exact fractions so that agreement
with the array formulas is literal equality.  The eigensolver is the single
floating-point computation in the package, with a stated convergence
threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .arrays import IntersectionArray
from .graphs import ExplicitGraph, bfs_distances, verify_distance_regular
from .potentials import PotentialSequence
from .rational import solve_exact


class NotAdjacent(ValueError):
    """The chosen terminal pair is not an edge."""


class PartitionGap(RuntimeError):
    """A vertex whose two terminal distances differ by more than one;
    impossible in a connected graph, so it can only signal a bug."""


class ArrayMismatch(ValueError):
    """Graph and potential sequence disagree about the intersection array."""


@dataclass(frozen=True)
class DistancePartition:
    """Vertices classified by the distance pair (d(u,z), d(v,z)) for an
    adjacent terminal pair u ~ v.

    same_level[i] holds the (i,i) vertices for 0 <= i <= D;
    u_side[i] the (i, i+1) vertices (closer to u) for 0 <= i <= D-1;
    v_side[i] the (i+1, i) vertices (closer to v).  u itself sits in
    u_side[0] and v in v_side[0].
    """

    u: int
    v: int
    same_level: tuple[frozenset, ...]
    u_side: tuple[frozenset, ...]
    v_side: tuple[frozenset, ...]

    def level_of(self, z: int) -> tuple[str, int]:
        for i, block in enumerate(self.same_level):
            if z in block:
                return ("same", i)
        for i, block in enumerate(self.u_side):
            if z in block:
                return ("u", i)
        for i, block in enumerate(self.v_side):
            if z in block:
                return ("v", i)
        raise KeyError(z)


def build_distance_partition(g: ExplicitGraph, u: int, v: int) -> DistancePartition:
    """Split the vertex set by distances to the adjacent pair (u, v)."""
    if v not in g.adjacency[u]:
        raise NotAdjacent(f"{u} and {v} are not adjacent")
    du = bfs_distances(g, u)
    dv = bfs_distances(g, v)
    D = max(max(du), max(dv))
    same = [set() for _ in range(D + 1)]
    u_side = [set() for _ in range(D)]
    v_side = [set() for _ in range(D)]
    for z in range(g.n):
        gap = du[z] - dv[z]
        if gap == 0:
            same[du[z]].add(z)
        elif gap == -1:
            u_side[du[z]].add(z)
        elif gap == 1:
            v_side[dv[z]].add(z)
        else:
            raise PartitionGap(f"vertex {z}: |d(u,z) - d(v,z)| = {abs(gap)}")
    return DistancePartition(
        u,
        v,
        tuple(frozenset(s) for s in same),
        tuple(frozenset(s) for s in u_side),
        tuple(frozenset(s) for s in v_side),
    )


@dataclass(frozen=True)
class PotentialAssignment:
    """A full vertex-to-voltage map for the adjacent terminal pair."""

    values: tuple[Fraction, ...]
    u: int
    v: int
    expected_current: int

    def __getitem__(self, z: int) -> Fraction:
        return self.values[z]


def build_harmonic_function(
    g: ExplicitGraph, u: int, v: int, p: PotentialSequence
) -> PotentialAssignment:
    """Assign +phi_i on the u side at level i, -phi_i on the v side, 0 on
    equidistant vertices.

    The graph must verify as distance-regular with exactly the array the
    potential sequence was computed from; otherwise the piecewise-constant
    function has no reason to be harmonic.
    """
    verified = verify_distance_regular(g)
    if not isinstance(verified, IntersectionArray) or verified != p.array:
        raise ArrayMismatch(
            f"graph verifies as {verified}, potential sequence belongs to {p.array}"
        )
    partition = build_distance_partition(g, u, v)
    values = [Fraction(0)] * g.n
    for i, block in enumerate(partition.u_side):
        for z in block:
            values[z] = p.phi[i]
    for i, block in enumerate(partition.v_side):
        for z in block:
            values[z] = -p.phi[i]
    n = sum(len(b) for b in partition.same_level) + sum(
        len(b) for b in partition.u_side
    ) + sum(len(b) for b in partition.v_side)
    assert n == g.n, "partition must cover every vertex"
    return PotentialAssignment(tuple(values), u, v, g.n * p.array.k)


def check_harmonicity(g: ExplicitGraph, assignment: PotentialAssignment) -> Fraction:
    """Largest absolute neighbor-sum residual away from the terminals.

    A true voltage function returns exactly 0.
    """
    worst = Fraction(0)
    f = assignment.values
    for z in range(g.n):
        if z == assignment.u or z == assignment.v:
            continue
        residual = sum((f[x] - f[z] for x in g.adjacency[z]), Fraction(0))
        worst = max(worst, abs(residual))
    return worst


def measure_current(g: ExplicitGraph, assignment: PotentialAssignment, at: Optional[int] = None) -> Fraction:
    """Net current leaving a terminal; the circuit predicts n*k at u."""
    source = assignment.u if at is None else at
    f = assignment.values
    return sum((f[source] - f[x] for x in g.adjacency[source]), Fraction(0))


def effective_resistance_oracle(g: ExplicitGraph, u: int, v: int) -> Fraction:
    """Two-point resistance by direct circuit solution, independent of any
    intersection-array formula.

    Grounds v, injects a unit current at u, and solves the reduced Laplacian
    system exactly; the answer is the potential at u.
    """
    if u == v:
        raise ValueError("resistance needs two distinct vertices")
    keep = [z for z in range(g.n) if z != v]
    position = {z: i for i, z in enumerate(keep)}
    size = g.n - 1
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for z in keep:
        i = position[z]
        matrix[i][i] = Fraction(g.degree(z))
        for x in g.adjacency[z]:
            if x != v:
                matrix[i][position[x]] -= 1
    rhs = [Fraction(0)] * size
    rhs[position[u]] = Fraction(1)
    solution = solve_exact(matrix, rhs)
    return solution[position[u]]


def laplacian_matrix(g: ExplicitGraph) -> np.ndarray:
    lap = np.zeros((g.n, g.n))
    for a, b in g.edges:
        lap[a, a] += 1.0
        lap[b, b] += 1.0
        lap[a, b] -= 1.0
        lap[b, a] -= 1.0
    return lap


def jacobi_eigenvalues(matrix: np.ndarray, off_tol: float = 1e-10, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps until the off-diagonal Frobenius norm drops below `off_tol`.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    for _ in range(max_sweeps):
        # cancellation can push the difference a hair below zero
        off = np.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0))
        if off <= off_tol:
            return np.sort(np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) if theta != 0 else 1.0
                t /= abs(theta) + np.hypot(theta, 1.0)
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
    raise RuntimeError(f"Jacobi sweep did not converge in {max_sweeps} sweeps")


def laplacian_spectral_gap(g: ExplicitGraph, off_tol: float = 1e-10, zero_tol: float = 1e-8) -> float:
    """Smallest nonzero Laplacian eigenvalue.

    Exactly one eigenvalue may sit inside [-zero_tol, zero_tol]; more would
    mean a disconnected graph, which the graph type already excludes.
    """
    eigenvalues = jacobi_eigenvalues(laplacian_matrix(g), off_tol=off_tol)
    near_zero = int(np.sum(np.abs(eigenvalues) <= zero_tol))
    if near_zero != 1:
        raise RuntimeError(f"expected exactly one zero eigenvalue, found {near_zero}")
    return float(eigenvalues[1])


def representative_pairs(g: ExplicitGraph) -> dict[int, tuple[int, int]]:
    """One vertex pair per distance class, measured from vertex 0."""
    dist = bfs_distances(g, 0)
    pairs: dict[int, tuple[int, int]] = {}
    for z in range(1, g.n):
        j = dist[z]
        if j not in pairs:
            pairs[j] = (0, z)
    return dict(sorted(pairs.items()))


def all_pairs_by_distance(g: ExplicitGraph) -> dict[int, list[tuple[int, int]]]:
    """Every unordered pair grouped by distance; meant for n <= 32."""
    if g.n > 32:
        raise ValueError("exhaustive pair enumeration is limited to n <= 32")
    out: dict[int, list[tuple[int, int]]] = {}
    for x in range(g.n):
        dist = bfs_distances(g, x)
        for y in range(x + 1, g.n):
            out.setdefault(dist[y], []).append((x, y))
    return dict(sorted(out.items()))
