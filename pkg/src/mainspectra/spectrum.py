"""Main-eigenvalue classification: walk vectors, two-walk parameters, harmonicity.

The number of main eigenvalues of a graph equals the rank of its walk
matrix (columns j, Aj, A^2 j, ...).  A non-regular graph has exactly two
main eigenvalues iff A d = alpha d + beta j for the degree vector d; the
two main eigenvalues are then the roots of x^2 - alpha x - beta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, degree_vector, is_connected
from .linalg import eigenvalues_float, solve_in_span


def fraction_to_json(f):
    """Fractions serialize as ints when integral, else as 'p/q' strings."""
    if f is None:
        return None
    f = Fraction(f)
    return int(f) if f.denominator == 1 else str(f)


def _fraction_str(f: Fraction) -> str:
    return str(int(f)) if f.denominator == 1 else str(f)


def _sqrt_if_square(f: Fraction) -> Fraction | None:
    if f < 0:
        return None
    ns = math.isqrt(f.numerator)
    ds = math.isqrt(f.denominator)
    if ns * ns == f.numerator and ds * ds == f.denominator:
        return Fraction(ns, ds)
    return None


@dataclass(frozen=True)
class TwoWalkParams:
    """Coefficients of A d = alpha d + beta j."""

    alpha: Fraction
    beta: Fraction

    def to_json(self) -> dict:
        return {"alpha": fraction_to_json(self.alpha), "beta": fraction_to_json(self.beta)}


@dataclass(frozen=True)
class QuadraticPair:
    """The ordered roots mu0 >= mu1 of x^2 - alpha x - beta, kept exact."""

    alpha: Fraction
    beta: Fraction

    @property
    def discriminant(self) -> Fraction:
        return self.alpha * self.alpha + 4 * self.beta

    def floats(self) -> tuple[float, float]:
        root = math.sqrt(self.discriminant)
        a = float(self.alpha)
        return ((a + root) / 2.0, (a - root) / 2.0)

    def exact_strings(self) -> tuple[str, str]:
        """Render the roots exactly: rationals, or 'a+sqrt(D)' / '(a+sqrt(D))/2'."""
        disc = self.discriminant
        s = _sqrt_if_square(disc)
        if s is not None:
            return (
                _fraction_str((self.alpha + s) / 2),
                _fraction_str((self.alpha - s) / 2),
            )
        half = self.alpha / 2
        quarter = disc / 4
        if quarter.denominator == 1:
            a = _fraction_str(half)
            return (f"{a}+sqrt({quarter})", f"{a}-sqrt({quarter})")
        a = _fraction_str(self.alpha)
        return (f"({a}+sqrt({_fraction_str(disc)}))/2", f"({a}-sqrt({_fraction_str(disc)}))/2")

    def to_json(self) -> dict:
        mu0, mu1 = self.floats()
        s0, s1 = self.exact_strings()
        return {
            "alpha": fraction_to_json(self.alpha),
            "beta": fraction_to_json(self.beta),
            "mu0": s0,
            "mu1": s1,
            "mu0_float": mu0,
            "mu1_float": mu1,
        }


@dataclass
class MainSpectrumReport:
    n: int
    edges: int
    connected: bool
    regular: bool
    main_count: int
    two_walk: TwoWalkParams | None
    harmonic_delta: Fraction | None
    main_values: QuadraticPair | None
    spectral_radius: float

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "edges": self.edges,
            "connected": self.connected,
            "regular": self.regular,
            "main_count": self.main_count,
            "two_walk": self.two_walk.to_json() if self.two_walk else None,
            "harmonic_delta": fraction_to_json(self.harmonic_delta),
            "main_values": self.main_values.to_json() if self.main_values else None,
            "spectral_radius": self.spectral_radius,
        }


def _apply_adjacency(g: Graph, vec) -> list[int]:
    out = []
    for v in range(g.n):
        row = g.rows[v]
        acc = 0
        while row:
            low = row & -row
            acc += vec[low.bit_length() - 1]
            row ^= low
        out.append(acc)
    return out


def walk_matrix(g: Graph) -> list[list[int]]:
    """n x n integer matrix whose column i is A^i applied to the all-ones vector."""
    cols = [[1] * g.n]
    for _ in range(g.n - 1):
        cols.append(_apply_adjacency(g, cols[-1]))
    return [[cols[j][i] for j in range(g.n)] for i in range(g.n)]


def main_eigenvalue_count(g: Graph) -> int:
    """Rank of the walk matrix, found incrementally on the walk vectors."""
    n = g.n
    echelon: list[tuple[int, list[Fraction]]] = []
    vec = [Fraction(1)] * n
    rank = 0
    for _ in range(n):
        red = list(vec)
        for pivot, basis_vec in echelon:
            f = red[pivot]
            if f:
                red = [a - f * b for a, b in zip(red, basis_vec)]
        pivot = next((i for i, x in enumerate(red) if x), None)
        if pivot is None:
            break
        pv = red[pivot]
        echelon.append((pivot, [x / pv for x in red]))
        rank += 1
        vec = _apply_adjacency(g, vec)
    assert rank >= 1
    return rank


def two_walk_params(g: Graph) -> TwoWalkParams | None:
    """(alpha, beta) with A d = alpha d + beta j, or None (regular or no solution).

    For a non-regular graph d and j are independent, so the coefficients are
    unique when they exist.
    """
    d = degree_vector(g)
    if len(set(d)) == 1:
        return None
    ad = _apply_adjacency(g, d)
    sol = solve_in_span(ad, [list(d), [1] * g.n])
    if sol is None:
        return None
    alpha, beta = sol
    assert alpha * alpha + 4 * beta > 0
    return TwoWalkParams(alpha, beta)


def main_values(params: TwoWalkParams) -> QuadraticPair:
    pair = QuadraticPair(params.alpha, params.beta)
    if pair.discriminant <= 0:
        raise ValueError(
            f"non-positive discriminant for (alpha, beta) = "
            f"({params.alpha}, {params.beta}); no graph realizes this"
        )
    return pair


def harmonic_delta(g: Graph) -> Fraction | None:
    """The delta with A d = delta d, if any; regular graphs return their valency."""
    d = degree_vector(g)
    pivot = next((v for v in range(g.n) if d[v]), None)
    if pivot is None:
        return Fraction(0)
    ad = _apply_adjacency(g, d)
    delta = Fraction(ad[pivot], d[pivot])
    for v in range(g.n):
        if ad[v] != delta * d[v]:
            return None
    return delta


def existence_check(alpha: int, beta: int) -> bool:
    """Is some connected graph 2-walk (alpha, beta)-linear, for integer inputs?"""
    if alpha < 0:
        raise ValueError(f"alpha must be non-negative, got {alpha}")
    return alpha * alpha + 4 * beta >= 4 and (alpha, beta) != (0, 1)


def analyze(g: Graph) -> MainSpectrumReport:
    """Full main-spectrum report for one graph."""
    d = degree_vector(g)
    regular = len(set(d)) == 1
    k = main_eigenvalue_count(g)
    tw = two_walk_params(g)
    assert (tw is not None) == (k == 2), "walk rank and span solve disagree"
    mv = main_values(tw) if tw is not None else None
    rho = max(eigenvalues_float(g.adjacency_matrix()))
    return MainSpectrumReport(
        n=g.n,
        edges=sum(d) // 2,
        connected=is_connected(g),
        regular=regular,
        main_count=k,
        two_walk=tw,
        harmonic_delta=harmonic_delta(g),
        main_values=mv,
        spectral_radius=rho,
    )
