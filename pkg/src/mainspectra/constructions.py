"""Generative recipes for graphs with exactly two main eigenvalues.

Covers the symplectic graphs over GF(2)^(2r), cones over regular graphs,
equitable biregular realizations for every feasible integer (alpha, beta),
the three-valenced witnesses on the boundary alpha^2 + 4 beta = 4, and the
edge-splice operation that grows infinite families with fixed parameters.

Every constructor post-validates its output exactly; a validation failure
raises RealizationError and means a bug, never bad input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .equitable import is_equitable, valency_partition
from .graphs import Graph, cone, degree_vector, graph_from_edges, is_connected, star
from .spectrum import TwoWalkParams, two_walk_params


class RealizationError(RuntimeError):
    """A constructed graph failed its own post-validation."""


# ---------------------------------------------------------------------------
# symplectic graphs


def _pair_swap_mask(width: int) -> tuple[int, int]:
    odd = 0
    for i in range(0, width, 2):
        odd |= 1 << i
    return odd, odd << 1


def symplectic_graph(r: int) -> Graph:
    """Graph on all of GF(2)^(2r): u ~ v iff the standard symplectic form is 1.

    Vertex i encodes the vector with coordinate bits of i; the form pairs
    adjacent coordinates, so <u, v> = parity(u & swap_pairs(v)).  The zero
    vector (vertex 0) is isolated.
    """
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    width = 2 * r
    n = 1 << width
    lo_mask, hi_mask = _pair_swap_mask(width)
    rows = [0] * n
    for v in range(n):
        swapped = ((v & lo_mask) << 1) | ((v & hi_mask) >> 1)
        for u in range(v + 1, n):
            if (u & swapped).bit_count() & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


def sp_component(r: int) -> Graph:
    """The nonzero-vector component Sp(2r): strongly regular on 2^(2r)-1 vertices."""
    g = symplectic_graph(r)
    rows = [row >> 1 for row in g.rows[1:]]
    return Graph(g.n - 1, rows, _validate=False)


# ---------------------------------------------------------------------------
# cones


def cone_over_regular(g: Graph) -> Graph:
    """Cone over a k-regular graph: equitable biregular unless it collapses
    to a complete graph."""
    d = degree_vector(g)
    if len(set(d)) != 1:
        raise ValueError("cone_over_regular requires a regular base graph")
    return cone(g)


# ---------------------------------------------------------------------------
# equitable biregular realizations


def _circulant_connections(nv: int, degree: int) -> tuple[int, ...]:
    """Connection set giving a degree-regular circulant on nv vertices."""
    if degree >= nv or degree < 0:
        raise ValueError(f"no {degree}-regular graph on {nv} vertices")
    if degree % 2 == 0:
        return tuple(range(1, degree // 2 + 1))
    if nv % 2:
        raise ValueError(f"odd degree {degree} needs an even vertex count, got {nv}")
    return tuple(range(1, (degree - 1) // 2 + 1)) + (nv // 2,)


def _circulant_connected(nv: int, degree: int) -> bool:
    if degree == 0:
        return nv == 1
    if degree == 1:
        return nv == 2
    return True  # generator 1 is in the connection set


def _circulant_edges(offset: int, nv: int, degree: int) -> list[tuple[int, int]]:
    conns = _circulant_connections(nv, degree)
    edges = []
    for v in range(nv):
        for s in conns:
            edges.append((offset + v, offset + (v + s) % nv))
    return edges


def quotient_for(alpha: int, beta: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """The 2x2 quotient [[a', 1], [a'(a-a') + b, a - a']] with a' = floor(a/2)."""
    a1 = alpha // 2
    return ((a1, 1), (a1 * (alpha - a1) + beta, alpha - a1))


def equitable_biregular_from(alpha: int, beta: int) -> Graph:
    """Connected equitable biregular graph with two-walk parameters (alpha, beta).

    Feasible exactly when alpha >= 0 and alpha^2 + 4 beta > 4.  Low-degree
    part: n2 * q21 vertices carrying a q11-regular circulant, one neighbour
    each in the high part; high part: n2 vertices carrying a q22-regular
    circulant, q21 join-neighbours each.
    """
    if alpha < 0:
        raise ValueError(f"alpha must be non-negative, got {alpha}")
    disc = alpha * alpha + 4 * beta
    if disc == 4:
        raise ValueError(
            f"boundary pair ({alpha}, {beta}): no connected equitable biregular "
            "graph exists; see boundary_impossibility"
        )
    if disc < 4:
        raise ValueError(f"infeasible pair ({alpha}, {beta}): alpha^2 + 4 beta < 4")
    (q11, _), (q21, q22) = quotient_for(alpha, beta)
    assert q21 >= 1
    if q11 == 0 and q22 == 0:
        out = star(q21 + 1)
        return _validate_biregular(out, alpha, beta)
    n2 = q22 + 1
    while True:
        n1 = n2 * q21
        ok = (
            n2 * q22 % 2 == 0
            and n1 > q11
            and n1 * q11 % 2 == 0
            and (q11 > 1 or _circulant_connected(n2, q22))
        )
        if ok:
            break
        n2 += 1
        if n2 > q22 + 64:
            raise RealizationError(f"no feasible block size for ({alpha}, {beta})")
    edges = _circulant_edges(0, n1, q11)
    edges += _circulant_edges(n1, n2, q22)
    edges += [(i, n1 + i // q21) for i in range(n1)]
    out = graph_from_edges(n1 + n2, edges)
    return _validate_biregular(out, alpha, beta)


def _validate_biregular(g: Graph, alpha: int, beta: int) -> Graph:
    if not is_connected(g):
        raise RealizationError(f"({alpha}, {beta}) realization is disconnected")
    if len(set(degree_vector(g))) != 2:
        raise RealizationError(f"({alpha}, {beta}) realization is not biregular")
    if not is_equitable(g, valency_partition(g)):
        raise RealizationError(f"({alpha}, {beta}) realization is not equitable")
    tw = two_walk_params(g)
    if tw != TwoWalkParams(Fraction(alpha), Fraction(beta)):
        raise RealizationError(f"({alpha}, {beta}) realization has parameters {tw}")
    return g


@dataclass(frozen=True)
class BoundaryCertificate:
    """Why no connected equitable biregular graph exists on the boundary.

    Trace and determinant force the quotient [[alpha/2, 1], [1, alpha/2]],
    whose two row sums (the would-be valencies) coincide.
    """

    alpha: int
    beta: int
    quotient: tuple
    row_sums: tuple

    @property
    def row_sums_equal(self) -> bool:
        return self.row_sums[0] == self.row_sums[1]

    def verify(self) -> bool:
        (a, b), (c, d) = self.quotient
        return (
            a + d == self.alpha
            and a * d - b * c == -self.beta
            and self.row_sums == (a + b, c + d)
            and self.row_sums_equal
        )

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "quotient": [list(r) for r in self.quotient],
            "row_sums": list(self.row_sums),
            "row_sums_equal": self.row_sums_equal,
        }


def boundary_impossibility(alpha: int, beta: int) -> BoundaryCertificate:
    if alpha * alpha + 4 * beta != 4:
        raise ValueError(f"({alpha}, {beta}) is not on the boundary alpha^2 + 4 beta = 4")
    half = alpha // 2
    cert = BoundaryCertificate(
        alpha=alpha,
        beta=beta,
        quotient=((half, 1), (1, half)),
        row_sums=(half + 1, half + 1),
    )
    assert cert.verify()
    return cert


def three_valenced_boundary(alpha: int) -> Graph:
    """Connected equitable 3-valenced graph with parameters (alpha, 1 - alpha^2/4).

    Realizes the quotient [[a-1, 1, 0], [1, a-1, 1], [0, 3, a-1]] with
    a = alpha/2: two blocks of size 3*n3 and one of size n3, internal
    (a-1)-regular circulants, an identity matching between blocks 1 and 2,
    and consecutive triples of block 2 joined to block 3.
    """
    if alpha % 2 or alpha < 4:
        raise ValueError(f"need even alpha >= 4, got {alpha}")
    a1 = alpha // 2
    beta = 1 - alpha * alpha // 4
    internal = a1 - 1
    n3 = internal + 1
    while n3 * internal % 2:
        n3 += 1
    n12 = 3 * n3
    edges = _circulant_edges(0, n12, internal)
    edges += _circulant_edges(n12, n12, internal)
    edges += _circulant_edges(2 * n12, n3, internal)
    edges += [(i, n12 + i) for i in range(n12)]
    edges += [(n12 + i, 2 * n12 + i // 3) for i in range(n12)]
    g = graph_from_edges(2 * n12 + n3, edges)
    if not is_connected(g):
        raise RealizationError(f"three-valenced boundary graph for alpha={alpha} disconnected")
    blocks = valency_partition(g)
    if len(blocks) != 3 or not is_equitable(g, blocks):
        raise RealizationError(f"three-valenced boundary graph for alpha={alpha} not equitable")
    tw = two_walk_params(g)
    if tw != TwoWalkParams(Fraction(alpha), Fraction(beta)):
        raise RealizationError(f"boundary graph for alpha={alpha} has parameters {tw}")
    return g


# ---------------------------------------------------------------------------
# splicing


class SpliceError(ValueError):
    """Invalid splice specification."""


@dataclass(frozen=True)
class SpliceSpec:
    """Degree-matched edges e = (x, y) in g and f = (u, v) in h with
    deg(x) = deg(u), deg(y) = deg(v), and both g - e and h - f connected."""

    g: Graph
    e: tuple[int, int]
    h: Graph
    f: tuple[int, int]


def _without_edge(g: Graph, u: int, v: int) -> Graph:
    rows = list(g.rows)
    rows[u] ^= 1 << v
    rows[v] ^= 1 << u
    return Graph(g.n, rows, _validate=False)


def _check_splice_side(g: Graph, edge, name: str) -> None:
    x, y = edge
    if not g.has_edge(x, y):
        raise SpliceError(f"{name}: ({x}, {y}) is not an edge")
    if not is_connected(_without_edge(g, x, y)):
        raise SpliceError(f"{name}: removing ({x}, {y}) disconnects the graph")


def splice(spec: SpliceSpec) -> Graph:
    """Swap the matched edges across the disjoint union: xy, uv -> xv, yu.

    Preserves every degree and the two-walk parameters; the result is
    connected and non-regular.
    """
    g, (x, y), h, (u, v) = spec.g, spec.e, spec.h, spec.f
    _check_splice_side(g, (x, y), "first graph")
    _check_splice_side(h, (u, v), "second graph")
    if g.degree(x) != h.degree(u) or g.degree(y) != h.degree(v):
        raise SpliceError(
            f"degree mismatch: ({g.degree(x)}, {g.degree(y)}) vs "
            f"({h.degree(u)}, {h.degree(v)})"
        )
    pg = two_walk_params(g)
    ph = two_walk_params(h)
    if pg is None or ph is None:
        raise SpliceError("both graphs must be non-regular with two main eigenvalues")
    if pg != ph:
        raise SpliceError(f"parameter mismatch: {pg} vs {ph}")
    off = g.n
    edges = [e for e in g.edges() if set(e) != {x, y}]
    edges += [
        (a + off, b + off) for a, b in h.edges() if set((a, b)) != {u, v}
    ]
    edges += [(x, v + off), (y, u + off)]
    out = graph_from_edges(g.n + h.n, edges)
    if two_walk_params(out) != pg or not is_connected(out):
        raise RealizationError("splice output failed validation")
    return out


@dataclass
class SpliceChainResult:
    graph: Graph
    designated_edge: tuple[int, int]
    splice_log: tuple

    def to_json(self) -> dict:
        return {
            "n": self.graph.n,
            "designated_edge": list(self.designated_edge),
            "splice_log": [list(map(list, step)) for step in self.splice_log],
        }


def _next_designated(
    chain: Graph, offset: int, block: Graph, dx: int, dy: int, fallback
) -> tuple[int, int]:
    """Edge to splice at next: prefer a degree-matched edge inside the newest
    copy whose removal keeps the chain connected, else the fresh cross edge."""
    for a, b in sorted(chain.edges()):
        if not (offset <= a < offset + block.n and offset <= b < offset + block.n):
            continue
        for cand in ((a, b), (b, a)):
            if chain.degree(cand[0]) == dx and chain.degree(cand[1]) == dy:
                if is_connected(_without_edge(chain, *cand)):
                    return cand
    return fallback


def splice_chain(g: Graph, edge: tuple[int, int], k: int) -> SpliceChainResult:
    """k-th member of the self-splice family seeded by (g, edge).

    Each step splices one fresh copy of g onto the chain at the designated
    edge; degrees and two-walk parameters never change while the diameter
    grows.  The log records (removed chain edge, removed copy edge, added
    edges) per step.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    x, y = edge
    _check_splice_side(g, edge, "seed graph")
    if two_walk_params(g) is None:
        raise SpliceError("seed graph must be non-regular with two main eigenvalues")
    dx, dy = g.degree(x), g.degree(y)
    chain = g
    designated = (x, y)
    log = []
    for _ in range(k - 1):
        off = chain.n
        chain = splice(SpliceSpec(chain, designated, g, edge))
        added = ((designated[0], y + off), (designated[1], x + off))
        log.append((designated, (x + off, y + off), added))
        designated = _next_designated(chain, off, g, dx, dy, (x + off, designated[1]))
    return SpliceChainResult(graph=chain, designated_edge=designated, splice_log=tuple(log))
