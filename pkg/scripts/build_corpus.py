#!/usr/bin/env python3
"""Build the exhaustive small-graph corpora used by the test suite.

Graphs are generated up to isomorphism by vertex augmentation: every graph
on n vertices arises from some graph on n-1 vertices by adding one vertex
with some neighbourhood.  Deduplication buckets candidates by cheap
isomorphism invariants (degree sequence, sorted neighbour-degree profile,
Weisfeiler-Lehman hash) and confirms with VF2.

Everything here goes through networkx, independent of the mainspectra
package, so the corpora can serve as an external oracle.  Outputs
(data/*.g6, graph6 one per line, networkx-encoded):

  all_n_le_7.g6          every graph with 1..7 vertices (1252 lines)
  connected_n_le_8.g6    every connected graph with 1..8 vertices (12113 lines)
  graph6_roundtrip.g6    100 assorted random graphs for format round-trips
"""

from __future__ import annotations


import random
import sys
import time
from pathlib import Path

import networkx as nx

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

# Known counts, used as a generation self-check.
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def invariant_key(g: nx.Graph):
    profile = tuple(
        sorted(
            (g.degree[v], tuple(sorted(g.degree[u] for u in g[v])))
            for v in g
        )
    )
    return (g.number_of_nodes(), g.number_of_edges(), profile,
            nx.weisfeiler_lehman_graph_hash(g, iterations=3))


class IsoStore:
    def __init__(self):
        self.buckets: dict = {}
        self.count = 0

    def add(self, g: nx.Graph) -> bool:
        key = invariant_key(g)
        bucket = self.buckets.setdefault(key, [])
        for rep in bucket:
            if nx.is_isomorphic(g, rep):
                return False
        bucket.append(g)
        self.count += 1
        return True

    def graphs(self):
        for bucket in self.buckets.values():
            yield from bucket


def augment(reps: list[nx.Graph], n: int, connected_only: bool) -> list[nx.Graph]:
    store = IsoStore()
    for base in reps:
        nodes = list(base.nodes)
        for bits in range(1 << (n - 1)):
            nbrs = [nodes[i] for i in range(n - 1) if (bits >> i) & 1]
            g = base.copy()
            g.add_node(n - 1)
            g.add_edges_from((n - 1, u) for u in nbrs)
            if connected_only and not nx.is_connected(g):
                continue
            store.add(g)
    return list(store.graphs())


def write_corpus(path: Path, graphs) -> None:
    with open(path, "wb") as fh:
        for g in graphs:
            fh.write(nx.to_graph6_bytes(g, header=False))
    print(f"wrote {path} ({len(graphs)} graphs)")


def main() -> int:
    DATA_DIR.mkdir(exist_ok=True)
    t0 = time.time()

    levels = {1: [nx.empty_graph(1)]}
    for n in range(2, 8):
        levels[n] = augment(levels[n - 1], n, connected_only=False)
        assert len(levels[n]) == ALL_COUNTS[n], (n, len(levels[n]))
        print(f"n={n}: {len(levels[n])} graphs ({time.time() - t0:.0f}s)")

    all_le_7 = [g for n in range(1, 8) for g in levels[n]]
    write_corpus(DATA_DIR / "all_n_le_7.g6", all_le_7)

    connected_8 = augment(levels[7], 8, connected_only=True)
    assert len(connected_8) == CONNECTED_COUNTS[8], len(connected_8)
    print(f"n=8 connected: {len(connected_8)} graphs ({time.time() - t0:.0f}s)")

    connected = [
        g for n in range(1, 8) for g in levels[n] if nx.is_connected(g)
    ]
    for n in range(1, 8):
        got = sum(1 for g in levels[n] if nx.is_connected(g))
        assert got == CONNECTED_COUNTS[n], (n, got)
    write_corpus(DATA_DIR / "connected_n_le_8.g6", connected + connected_8)

    rng = random.Random(20240601)
    assorted = []
    for _ in range(100):
        n = rng.randint(1, 40)
        p = rng.random()
        g = nx.gnp_random_graph(n, p, seed=rng.randint(0, 10**9))
        assorted.append(g)
    write_corpus(DATA_DIR / "graph6_roundtrip.g6", assorted)

    print(f"done in {time.time() - t0:.0f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
