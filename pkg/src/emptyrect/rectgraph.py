"""Rectangle graphs of planar point sets and their counting statistics."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from typing import NamedTuple

import numpy as np

from .geom import as_pointset2, empty_quadrant_count, PointSet2, spanned_rect
from .graph import cliques, Graph


def _sweep_pairs(ys):
    """Index pairs (i, j), i < j, spanning empty rectangles.

    ``ys[i]`` is the y-value of the i-th point in x-order.  For a fixed left
    point the visible points to its right form two staircases; ``lo``/``hi``
    track the nearest y-values seen so far below/above the left point.
    """
    n = len(ys)
    out = []
    for i in range(n):
        yi = ys[i]
        lo, hi = float("-inf"), float("inf")
        for j in range(i + 1, n):
            yj = ys[j]
            if lo < yj < hi:
                out.append((i, j))
                if yj > yi:
                    hi = yj
                else:
                    lo = yj
    return out


def _sweep_edge_count(ys) -> int:
    n = len(ys)
    count = 0
    for i in range(n):
        yi = ys[i]
        lo, hi = -1, n + 2
        for j in range(i + 1, n):
            yj = ys[j]
            if lo < yj < hi:
                count += 1
                if yj > yi:
                    hi = yj
                else:
                    lo = yj
    return count


def rectangle_graph_bruteforce(X) -> Graph:
    """Check every pair against every other point (cubic time)."""
    X = as_pointset2(X)
    n = X.n
    if n < 2:
        return Graph(n, frozenset())
    P = np.array(X.points, dtype=np.int64)
    I, J = np.triu_indices(n, 1)
    xlo = np.minimum(P[I, 0], P[J, 0])[:, None]
    xhi = np.maximum(P[I, 0], P[J, 0])[:, None]
    ylo = np.minimum(P[I, 1], P[J, 1])[:, None]
    yhi = np.maximum(P[I, 1], P[J, 1])[:, None]
    x, y = P[None, :, 0], P[None, :, 1]
    blocked = ((xlo < x) & (x < xhi) & (ylo < y) & (y < yhi)).any(axis=1)
    keep = ~blocked
    return Graph(n, frozenset(zip(I[keep].tolist(), J[keep].tolist())))


def rectangle_graph(X, oracle: bool = False) -> Graph:
    X = as_pointset2(X)
    if oracle:
        return rectangle_graph_bruteforce(X)
    order = sorted(range(X.n), key=lambda i: X[i][0])
    ys = [X[i][1] for i in order]
    return Graph(X.n, frozenset((order[i], order[j]) for i, j in _sweep_pairs(ys)))


def _spans_empty(A, X) -> bool:
    r = spanned_rect(A)
    if any(r.contains_in_interior(p) for p in A):
        return False
    return not any(r.contains_in_interior(p) for p in X)


def span_count(X, k: int, G: Graph | None = None) -> int:
    """Number of k-subsets whose spanned rectangle is empty with all k on its boundary.

    Candidates are restricted to k-cliques of the rectangle graph: every pair
    inside a qualifying subset spans a sub-rectangle, which is empty too.
    """
    X = as_pointset2(X)
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return X.n
    if k > 4:
        # each side of a rectangle carries at most one point of a generic set
        return 0
    if G is None:
        G = rectangle_graph(X)
    if k == 2:
        return G.m
    pts = X.points
    return sum(1 for c in cliques(G, k) if _spans_empty([pts[i] for i in c], pts))


def span_counts(X, G: Graph | None = None) -> tuple[int, int, int]:
    X = as_pointset2(X)
    if G is None:
        G = rectangle_graph(X)
    return G.m, span_count(X, 3, G), span_count(X, 4, G)


def quadrant_sum(X) -> int:
    X = as_pointset2(X)
    return sum(empty_quadrant_count(p, X) for p in X)


def exposed_count(X) -> int:
    """Total number of empty open quadrants over all points, minus 4.

    This is the multiplicity-weighted count of orthogonally exposed points;
    it is the quantity that makes the linear span identities exact.
    """
    X = as_pointset2(X)
    if X.n == 0:
        raise ValueError("exposed_count needs at least one point")
    return quadrant_sum(X) - 4


def exposed_points(X) -> int:
    """Number of points having at least one empty quadrant."""
    X = as_pointset2(X)
    return sum(1 for p in X if empty_quadrant_count(p, X) > 0)


def max_edges_bound(n: int) -> int:
    if n < 2:
        raise ValueError("bound is stated for n >= 2")
    return n * n // 4 + n - 2


@dataclass(frozen=True)
class SpanReport:
    n: int
    span2: int
    span3: int
    span4: int
    exposed: int
    exposed_points: int
    identity1_holds: bool
    identity2_holds: bool

    @property
    def bound(self) -> int | None:
        return max_edges_bound(self.n) if self.n >= 2 else None

    @property
    def at_bound(self) -> bool:
        return self.bound is not None and self.span2 == self.bound

    @property
    def within_bound(self) -> bool:
        return self.bound is None or self.span2 <= self.bound

    @property
    def exposed_definitions_agree(self) -> bool:
        return self.exposed == self.exposed_points

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "span2": self.span2,
            "span3": self.span3,
            "span4": self.span4,
            "exposed_quadrant": self.exposed,
            "exposed_points": self.exposed_points,
            "exposed_definitions_agree": self.exposed_definitions_agree,
            "identity1": self.identity1_holds,
            "identity2": self.identity2_holds,
            "bound": self.bound,
            "at_bound": self.at_bound,
        }


def verify_w_span(X, oracle: bool = False) -> SpanReport:
    X = as_pointset2(X)
    n = X.n
    if n == 0:
        raise ValueError("verify_w_span needs at least one point")
    G = rectangle_graph(X, oracle=oracle)
    s2, s3, s4 = span_counts(X, G)
    ex = exposed_count(X)
    return SpanReport(
        n=n, span2=s2, span3=s3, span4=s4, exposed=ex,
        exposed_points=exposed_points(X),
        identity1_holds=s2 - s4 + ex == 3 * (n - 1),
        identity2_holds=2 * s2 - s3 + ex == 4 * (n - 1),
    )


def extremal_pointset(n: int) -> PointSet2:
    """Two increasing chains in opposite blocks: NW block then SE block.

    Every NW-SE pair spans an empty rectangle, plus the n-2 chain-adjacent
    pairs, for floor(n^2/4) + n - 2 edges.
    """
    if n < 2:
        raise ValueError("construction needs n >= 2")
    k1, k2 = (n + 1) // 2, n // 2
    nw = [(i, k2 + i) for i in range(1, k1 + 1)]
    se = [(k1 + j, j) for j in range(1, k2 + 1)]
    return PointSet2(tuple(nw + se))


def decompose_conjugate(X, G: Graph | None = None) -> tuple[frozenset, frozenset]:
    """Split rectangle-graph edges into dominance (SW-NE) and conjugate (NW-SE) pairs."""
    X = as_pointset2(X)
    if G is None:
        G = rectangle_graph(X)
    diagram, conjugate = set(), set()
    for i, j in G.edges:
        p, q = X[i], X[j]
        if (p[0] - q[0]) * (p[1] - q[1]) > 0:
            diagram.add((i, j))
        else:
            conjugate.add((i, j))
    return frozenset(diagram), frozenset(conjugate)


def expected_edges_exact(n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be positive")
    # pairs at gap d = j - i occur n - d times
    return sum((Fraction(2 * (n - d), d + 1) for d in range(1, n)), Fraction(0))


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, trial]))


def _trial_edges(n, seed, trial):
    pts = trial_rng(seed, trial).random((n, 2))
    ys = np.argsort(np.argsort(pts[np.argsort(pts[:, 0]), 1])).tolist()
    return _sweep_edge_count(ys)


def _trial_block(args):
    n, seed, start, stop = args
    counts = [_trial_edges(n, seed, t) for t in range(start, stop)]
    return sum(counts), sum(c * c for c in counts)


def monte_carlo_edges(n: int, trials: int, seed: int, workers: int = 1) -> tuple[float, float]:
    """Mean and standard error of the rectangle-graph edge count of uniform random points.

    Trial ``t`` draws from a generator seeded by ``(seed, t)`` and the
    aggregation is over exact integer sums, so the result does not depend on
    ``workers``.
    """
    if n < 1 or trials < 1:
        raise ValueError("need n >= 1 and trials >= 1")
    if seed < 0 or seed >= 2**64:
        raise ValueError("seed must fit in 64 unsigned bits")
    if workers <= 1:
        s1, s2 = _trial_block((n, seed, 0, trials))
    else:
        step = -(-trials // workers)
        blocks = [(n, seed, a, min(a + step, trials)) for a in range(0, trials, step)]
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_trial_block, blocks))
        s1 = sum(p[0] for p in parts)
        s2 = sum(p[1] for p in parts)
    mean = s1 / trials
    if trials == 1:
        return mean, 0.0
    var = (s2 - s1 * s1 / trials) / (trials - 1)
    return mean, sqrt(max(var, 0.0) / trials)


class StreifenViolation(NamedTuple):
    edge: tuple[int, int]
    region: str
    common_neighbors: tuple[int, ...]


def _strip_region(p, q, z) -> str | None:
    xlo, xhi = sorted((p[0], q[0]))
    ylo, yhi = sorted((p[1], q[1]))
    if xlo < z[0] < xhi:
        if z[1] > yhi:
            return "up"
        if z[1] < ylo:
            return "down"
    if ylo < z[1] < yhi:
        if z[0] > xhi:
            return "right"
        if z[0] < xlo:
            return "left"
    return None


def streifen_violations(X, G: Graph | None = None) -> list[StreifenViolation]:
    """Edges with two or more common neighbours in one of the four strips.

    For an edge (x, y) the strips are the regions directly above, below,
    right of and left of R[x, y].  The returned list is always empty for a
    generic set; this function exists to check that.
    """
    X = as_pointset2(X)
    if G is None:
        G = rectangle_graph(X)
    adj = G.adjacency()
    out = []
    for i, j in G.sorted_edges():
        found: dict[str, list[int]] = {}
        for z in sorted(adj[i] & adj[j]):
            region = _strip_region(X[i], X[j], X[z])
            if region is not None:
                found.setdefault(region, []).append(z)
        for region, zs in sorted(found.items()):
            if len(zs) > 1:
                out.append(StreifenViolation((i, j), region, tuple(zs)))
    return out
