"""Realizers: permutation families certifying graph dimension.

Convention: a permutation is a sequence of vertex indices, and ``x`` is above
``y`` in it when ``x`` occurs later.  Condition (*) for an edge ``{u, v}``
asks that every other vertex is above both ends in some permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import isqrt
from typing import Sequence

import numpy as np

from .geom import as_pointset2, as_pointset3, PointSet3
from .graph import Graph

PATTERNS = ("plain", "single_arrow", "double_arrow", "box")


class SizeMismatch(ValueError):
    pass


class BadSubsetSize(ValueError):
    pass


def reverse(perm: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(perm))


def positions(perm: Sequence[int]) -> list[int]:
    """``positions(perm)[v]`` is the index of vertex v in perm."""
    pos = [0] * len(perm)
    for i, v in enumerate(perm):
        pos[v] = i
    return pos


@dataclass(frozen=True)
class Realizer:
    perms: tuple[tuple[int, ...], ...]
    pattern: str = "plain"

    def __post_init__(self):
        perms = tuple(tuple(int(v) for v in p) for p in self.perms)
        object.__setattr__(self, "perms", perms)
        if not perms:
            raise ValueError("a realizer needs at least one permutation")
        n = len(perms[0])
        for p in perms:
            if sorted(p) != list(range(n)):
                raise SizeMismatch("every permutation must order the vertices 0..n-1")
        if self.pattern not in PATTERNS:
            raise ValueError(f"unknown pattern {self.pattern!r}")
        t = len(perms)
        if self.pattern == "single_arrow":
            ok = t >= 2 and perms[-1] == reverse(perms[-2])
        elif self.pattern == "double_arrow":
            ok = t >= 4 and perms[-1] == reverse(perms[-3]) and perms[-2] == reverse(perms[-4])
        elif self.pattern == "box":
            ok = t == 6 and all(perms[i + 3] == reverse(perms[i]) for i in range(3))
        else:
            ok = True
        if not ok:
            raise ValueError(f"permutations do not have the {self.pattern} reversal pattern")

    @property
    def n(self) -> int:
        return len(self.perms[0])

    @property
    def t(self) -> int:
        return len(self.perms)

    @property
    def degenerate(self) -> bool:
        # condition (*) is vacuous below three vertices
        return self.n < 3

    def position_matrix(self) -> np.ndarray:
        return np.array([positions(p) for p in self.perms], dtype=np.int64)

    def to_json(self) -> dict:
        return {"pattern": self.pattern, "perms": [list(p) for p in self.perms]}

    @classmethod
    def from_json(cls, data: dict) -> "Realizer":
        return cls(tuple(tuple(p) for p in data["perms"]), data.get("pattern", "plain"))


def verify_realizer(G: Graph, R: Realizer) -> bool:
    if G.n != R.n:
        raise SizeMismatch(f"graph has {G.n} vertices, realizer orders {R.n}")
    P = R.position_matrix()
    for u, v in G.edges:
        top = np.maximum(P[:, u], P[:, v])[:, None]
        above = (P > top).any(axis=0)
        above[[u, v]] = True
        if not above.all():
            return False
    return True


def graph_from_realizer(R: Realizer) -> Graph:
    """The edge-maximal graph realized by R."""
    P = R.position_matrix()
    n = R.n
    edges = []
    for u in range(n - 1):
        vs = np.arange(u + 1, n)
        top = np.maximum(P[:, u, None], P[:, vs])               # (t, |vs|)
        ok = (P[:, None, :] > top[:, :, None]).any(axis=0)     # (|vs|, n)
        ok[:, u] = True
        ok[np.arange(len(vs)), vs] = True
        edges.extend((u, int(v)) for v in vs[ok.all(axis=1)])
    return Graph(n, frozenset(edges))


def _sort_by(coords):
    return tuple(sorted(range(len(coords)), key=lambda i: coords[i]))


def pointset_to_double_arrow(X) -> Realizer:
    X = as_pointset2(X)
    p1 = _sort_by([p[0] for p in X])
    p2 = _sort_by([p[1] for p in X])
    return Realizer((p1, p2, reverse(p1), reverse(p2)), "double_arrow")


def pointset_to_box_realizer(Y) -> Realizer:
    Y = as_pointset3(Y)
    ps = [_sort_by([p[a] for p in Y]) for a in range(3)]
    return Realizer(tuple(ps) + tuple(reverse(p) for p in ps), "box")


def realizer_pointset3(R: Realizer) -> PointSet3:
    """Points whose coordinates are the 1-based positions in the first three perms."""
    P = R.position_matrix()[:3] + 1
    return PointSet3(tuple(tuple(int(c) for c in P[:, v]) for v in range(R.n)))


def single_arrow_graph(p1, p2, p3) -> Graph:
    """Graph of the realizer p1, p2, p3, reverse(p3), via the corner-rectangle test.

    ``{u, v}`` is an edge iff every other w with w1 <= max(u1, v1) and
    w2 <= max(u2, v2) has its third position outside [u3, v3].
    """
    n = len(p1)
    if len(p2) != n or len(p3) != n:
        raise SizeMismatch("permutations must have equal length")
    a1, a2, a3 = (np.array(positions(p)) for p in (p1, p2, p3))
    edges = []
    for u in range(n - 1):
        vs = np.arange(u + 1, n)
        m1 = np.maximum(a1[u], a1[vs])[:, None]
        m2 = np.maximum(a2[u], a2[vs])[:, None]
        lo = np.minimum(a3[u], a3[vs])[:, None]
        hi = np.maximum(a3[u], a3[vs])[:, None]
        in_corner = (a1[None, :] <= m1) & (a2[None, :] <= m2)
        in_band = (lo <= a3[None, :]) & (a3[None, :] <= hi)
        bad = in_corner & in_band
        bad[:, u] = False
        bad[np.arange(len(vs)), vs] = False
        edges.extend((u, int(v)) for v in vs[~bad.any(axis=1)])
    return Graph(n, frozenset(edges))


def single_arrow_bound(n: int) -> float:
    return n * n / 4 + 5 * n


def _quadrant_classes(v, adj, pos):
    a1, a2, a3 = pos
    cls = {"NE": [], "NW+": [], "NW-": [], "SW": [], "SE+": [], "SE-": []}
    for u in adj[v]:
        east, north = a1[u] > a1[v], a2[u] > a2[v]
        sign = "+" if a3[u] > a3[v] else "-"
        if east and north:
            cls["NE"].append(u)
        elif north:
            cls["NW" + sign].append(u)
        elif east:
            cls["SE" + sign].append(u)
        else:
            cls["SW"].append(u)
    return cls


def single_arrow_fact_violations(p1, p2, p3, G: Graph | None = None) -> list[tuple]:
    """Check the structural facts of single-arrow graphs.

    * every vertex has at most two south-west neighbours;
    * within NW+ neighbours, second and third positions are anti-coupled;
      within SE+, first and third are anti-coupled; within NW- / SE- the
      same coordinates are co-coupled.

    Returns a list of ``(fact, vertex, detail)`` tuples, empty when all hold.
    """
    if G is None:
        G = single_arrow_graph(p1, p2, p3)
    pos = [positions(p) for p in (p1, p2, p3)]
    adj = G.adjacency()
    out = []
    couplings = {"NW+": (1, -1), "SE+": (0, -1), "NW-": (1, 1), "SE-": (0, 1)}
    for v in range(G.n):
        cls = _quadrant_classes(v, adj, pos)
        if len(cls["SW"]) > 2:
            out.append(("fact1", v, tuple(sorted(cls["SW"]))))
        for name, (axis, sign) in couplings.items():
            for w, w2 in combinations(cls[name], 2):
                d_axis = pos[axis][w] - pos[axis][w2]
                d3 = pos[2][w] - pos[2][w2]
                if d_axis * d3 * sign < 0:
                    out.append(("fact2 " + name, v, (w, w2)))
    return out


def eight_partite_parts(sizes: Sequence[int]) -> list[list[int]]:
    if len(sizes) != 8 or any(s < 0 for s in sizes):
        raise ValueError("need eight nonnegative part sizes")
    parts, start = [], 0
    for s in sizes:
        parts.append(list(range(start, start + s)))
        start += s
    return parts


# index orders of the blocks in the three permutations (1-based part labels)
EIGHT_PARTITE_ORDERS = (
    (1, 2, 3, 4, 5, 6, 7, 8),
    (5, 3, 2, 8, 1, 7, 6, 4),
    (7, 4, 8, 6, 3, 1, 5, 2),
)


def eight_partite_realizer(sizes: Sequence[int]) -> Realizer:
    """Box realizer in which every pair of parts is completely joined.

    Each part keeps its identity order inside every permutation.
    """
    parts = eight_partite_parts(sizes)
    perms = [tuple(v for b in order for v in parts[b - 1]) for order in EIGHT_PARTITE_ORDERS]
    return Realizer(tuple(perms) + tuple(reverse(p) for p in perms), "box")


def k16_pointset() -> PointSet3:
    return realizer_pointset3(eight_partite_realizer([2] * 8))


def _longest_monotone(seq, increasing):
    n = len(seq)
    length = [1] * n
    prev = [-1] * n
    for j in range(n):
        for i in range(j):
            if (seq[i] < seq[j]) == increasing and seq[i] != seq[j] and length[i] + 1 > length[j]:
                length[j] = length[i] + 1
                prev[j] = i
    if not n:
        return []
    j = max(range(n), key=lambda i: length[i])
    out = []
    while j >= 0:
        out.append(j)
        j = prev[j]
    return out[::-1]


def monotone_subsequence_indices(seq, k: int) -> list[int] | None:
    """Indices of a monotone run of length k in ``seq``, increasing preferred."""
    if k < 1:
        raise ValueError("k must be positive")
    for increasing in (True, False):
        idx = _longest_monotone(list(seq), increasing)
        if len(idx) >= k:
            return idx[:k]
    return None


def monotone_subsequence(p: Sequence[int], k: int) -> tuple[int, ...] | None:
    """A monotone subsequence of length k, or None.

    Always succeeds for ``k <= ceil(sqrt(len(p)))``.
    """
    idx = monotone_subsequence_indices(p, k)
    return None if idx is None else tuple(p[i] for i in idx)


def clique_obstruction_17(Y, A: Sequence[int]) -> tuple[int, int, int]:
    """Three vertices of A in the same or reversed order on all three axes.

    The middle one lies strictly inside the box of the outer two, so those
    two are not adjacent in the box graph.  Found by running the monotone
    subsequence argument twice: 17 points give 5 monotone in y, which give
    3 monotone in z.
    """
    Y = as_pointset3(Y)
    A = list(A)
    if len(A) != 17 or len(set(A)) != 17:
        raise BadSubsetSize(f"need 17 distinct vertices, got {len(A)}")
    by_x = sorted(A, key=lambda v: Y[v][0])
    five = monotone_subsequence_indices([Y[v][1] for v in by_x], 5)
    B = [by_x[i] for i in five]
    three = monotone_subsequence_indices([Y[v][2] for v in B], 3)
    i, j, k = (B[s] for s in three)
    return i, j, k


def search_realizer(G: Graph, t: int, max_n: int = 12) -> Realizer | None:
    """Backtracking search for a plain realizer of size t (experimental).

    Each (edge, outside vertex) constraint is assigned to one permutation,
    which then must put the vertex above both ends; an assignment works iff
    every permutation's constraint digraph is acyclic.  Exponential time, so
    refused above ``max_n`` vertices.
    """
    n = G.n
    if n > max_n:
        raise ValueError(f"search limited to n <= {max_n}")
    if t < 1:
        raise ValueError("t must be positive")
    cons = [(x, e) for e in G.sorted_edges() for x in range(n) if x not in e]
    # below[a][x]: vertices forced below x in permutation a
    below = [[set() for _ in range(n)] for _ in range(t)]

    def reach(a, src, dst):
        stack, seen = [src], {src}
        while stack:
            w = stack.pop()
            if w == dst:
                return True
            for z in below[a][w]:
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        return False

    def place(idx, used):
        if idx == len(cons):
            return True
        x, (u, v) = cons[idx]
        # perms beyond the first unused are interchangeable
        for a in range(min(used + 1, t)):
            if reach(a, u, x) or reach(a, v, x):
                continue
            added = [y for y in (u, v) if y not in below[a][x]]
            below[a][x].update(added)
            if place(idx + 1, max(used, a + 1)):
                return True
            below[a][x].difference_update(added)
        return False

    if not place(0, 0):
        return None
    perms = []
    for a in range(t):
        # topological order, lowest first, smallest index breaks ties
        indeg = {x: 0 for x in range(n)}
        ups = {x: [] for x in range(n)}
        for x in range(n):
            for y in below[a][x]:
                indeg[x] += 1
                ups[y].append(x)
        ready = sorted(x for x in range(n) if indeg[x] == 0)
        order = []
        while ready:
            y = ready.pop(0)
            order.append(y)
            for x in ups[y]:
                indeg[x] -= 1
                if indeg[x] == 0:
                    ready.append(x)
            ready.sort()
        perms.append(tuple(order))
    return Realizer(tuple(perms))


def erdos_szekeres_guarantee(n: int) -> int:
    """ceil(sqrt(n)): monotone length every sequence of n distinct values contains."""
    r = isqrt(n)
    return r if r * r == n else r + 1

