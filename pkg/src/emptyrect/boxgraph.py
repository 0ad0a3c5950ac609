"""Empty-box graphs of point sets in 3-space."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geom import as_pointset3, PointSet3
from .graph import Graph
from .realizer import eight_partite_parts, eight_partite_realizer, realizer_pointset3

# no box graph has a 17-clique, so a 16-clique is always maximum
MAX_BOX_CLIQUE = 16


def box_graph(Y) -> Graph:
    """Pairs whose spanned box has no point strictly inside (brute force)."""
    Y = as_pointset3(Y)
    n = Y.n
    if n < 2:
        return Graph(n, frozenset())
    P = np.array(Y.points, dtype=np.int64)
    edges = []
    for i in range(n - 1):
        js = np.arange(i + 1, n)
        lo = np.minimum(P[i], P[js])[:, None, :]
        hi = np.maximum(P[i], P[js])[:, None, :]
        inside = ((lo < P[None]) & (P[None] < hi)).all(axis=2).any(axis=1)
        edges.extend((i, int(j)) for j in js[~inside])
    return Graph(n, frozenset(edges))


def eight_partite_pointset(part_size: int) -> PointSet3:
    if part_size < 1:
        raise ValueError("part_size must be at least 1")
    return realizer_pointset3(eight_partite_realizer([part_size] * 8))


def cross_part_edges(part_size: int) -> list[tuple[int, int]]:
    parts = eight_partite_parts([part_size] * 8)
    return [(u, v) for a in range(8) for b in range(a + 1, 8) for u in parts[a] for v in parts[b]]


def max_clique(G: Graph, cap: int | None = None) -> list[int]:
    """Exact maximum clique by branch and bound; stops early once ``cap`` is reached."""
    adj = G.adjacency()
    best: list[int] = []

    def expand(clique, cand):
        nonlocal best
        if len(clique) > len(best):
            best = list(clique)
        if cap is not None and len(best) >= cap:
            return
        if len(clique) + len(cand) <= len(best):
            return
        for v in sorted(cand, key=lambda w: -len(adj[w] & cand)):
            if len(clique) + len(cand) <= len(best):
                return
            expand(clique + [v], cand & adj[v])
            cand = cand - {v}
            if cap is not None and len(best) >= cap:
                return

    expand([], set(range(G.n)))
    return sorted(best)


def greedy_clique(G: Graph) -> list[int]:
    adj = G.adjacency()
    best: list[int] = []
    for start in range(G.n):
        clique, cand = [start], set(adj[start])
        while cand:
            v = max(sorted(cand), key=lambda w: len(adj[w] & cand))
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = sorted(clique)
    return best


@dataclass(frozen=True)
class BoxGraphStats:
    n: int
    edges: int
    max_clique_lower: int
    clique_exact: bool

    @property
    def density(self) -> float:
        return self.edges / self.n**2 if self.n else 0.0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "edges": self.edges,
            "max_clique_lower": self.max_clique_lower,
            "clique_exact": self.clique_exact,
            "edges_over_n2": self.density,
        }


def box_stats(Y, exact_limit: int = 20) -> BoxGraphStats:
    """Edge count plus a clique number: exact for n <= exact_limit, greedy above."""
    Y = as_pointset3(Y)
    G = box_graph(Y)
    exact = Y.n <= exact_limit
    clique = max_clique(G, cap=MAX_BOX_CLIQUE) if exact else greedy_clique(G)
    return BoxGraphStats(Y.n, G.m, len(clique), exact)
