"""Shared point-set fixtures for the test suite."""

import numpy as np

from emptyrect.geom import PointSet2, random_pointset
from emptyrect.rectgraph import extremal_pointset

# one line per acceptance criterion, printed in the pytest terminal summary
ACCEPTANCE_LINES: list[str] = []


def chain(n, decreasing=False):
    return PointSet2(tuple((i, n + 1 - i if decreasing else i) for i in range(1, n + 1)))


def blocks_of_chains(sizes, decreasing_blocks=True):
    """Increasing chains placed block by block along a decreasing (or increasing) diagonal."""
    pts, x = [], 1
    total = sum(sizes)
    y_top = total
    for s in sizes:
        for k in range(s):
            if decreasing_blocks:
                pts.append((x + k, y_top - s + 1 + k))
            else:
                pts.append((x + k, x + k))
        x += s
        y_top -= s
    return PointSet2(tuple(pts))


def two_block(k1, k2):
    nw = [(i, k2 + i) for i in range(1, k1 + 1)]
    se = [(k1 + j, j) for j in range(1, k2 + 1)]
    return PointSet2(tuple(nw + se))


def grid(k):
    """k x k grid, slightly sheared so that it is generic."""
    pts = [(a * k + b, b * k + a) for a in range(k) for b in range(k)]
    return PointSet2(tuple((x + 1, y + 1) for x, y in pts))


def adversarial_sets():
    out = []
    for n in (1, 2, 3, 4, 7, 15, 30):
        out += [chain(n), chain(n, decreasing=True)]
    out += [extremal_pointset(n) for n in (2, 5, 10, 21, 40)]
    out += [two_block(a, b) for a, b in ((1, 5), (3, 8), (7, 2), (10, 10))]
    out += [blocks_of_chains(s) for s in ((2, 2, 2), (3, 1, 4, 1, 5), (5, 5, 5, 5))]
    out += [blocks_of_chains((3, 4, 2), decreasing_blocks=False)]
    out += [grid(k) for k in (2, 3, 4, 5)]
    return out


def random_sets(count, n_max, seed, n_min=1):
    rng = np.random.default_rng(seed)
    return [random_pointset(int(rng.integers(n_min, n_max + 1)), rng) for _ in range(count)]
