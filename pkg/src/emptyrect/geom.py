"""Points, rank normalization, rectangles, boxes and quadrants.

Everything downstream works on integer ranks.  Real-valued input is only
accepted by :func:`normalize_ranks` / :func:`normalize_ranks3`, which
reduce a point set to its per-axis order type.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence


class GeometryError(ValueError):
    pass


class NonGenericInput(GeometryError):
    """Two points share a coordinate value."""


class DuplicateCoordinate(NonGenericInput):
    def __init__(self, axis: str, value):
        super().__init__(f"duplicate {axis}-coordinate {value!r}")
        self.axis = axis
        self.value = value


class EmptySubset(GeometryError):
    pass


class PointNotInSet(GeometryError):
    pass


AXES = ("x", "y", "z")


def _check_generic(points, dim):
    for a in range(dim):
        seen = set()
        for p in points:
            if p[a] in seen:
                raise DuplicateCoordinate(AXES[a], p[a])
            seen.add(p[a])


@dataclass(frozen=True)
class PointSet2:
    """Generic planar point set with integer coordinates."""

    points: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pts = tuple((int(p[0]), int(p[1])) for p in self.points)
        object.__setattr__(self, "points", pts)
        _check_generic(pts, 2)

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def is_normalized(self) -> bool:
        r = set(range(1, self.n + 1))
        return {p[0] for p in self.points} == r and {p[1] for p in self.points} == r


@dataclass(frozen=True)
class PointSet3:
    """Generic point set in 3-space with integer coordinates."""

    points: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        pts = tuple((int(p[0]), int(p[1]), int(p[2])) for p in self.points)
        object.__setattr__(self, "points", pts)
        _check_generic(pts, 3)

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def project_xy(self) -> PointSet2:
        return PointSet2(tuple((p[0], p[1]) for p in self.points))


def as_pointset2(X) -> PointSet2:
    if isinstance(X, PointSet2):
        return X
    return PointSet2(tuple(tuple(p) for p in X))


def as_pointset3(Y) -> PointSet3:
    if isinstance(Y, PointSet3):
        return Y
    return PointSet3(tuple(tuple(p) for p in Y))


def _ranks(values, axis, keys=None):
    if keys is None:
        seen = {}
        for v in values:
            if v in seen:
                raise DuplicateCoordinate(AXES[axis], v)
            seen[v] = True
        keys = values
    order = sorted(range(len(values)), key=lambda i: keys[i])
    rank = [0] * len(values)
    for r, i in enumerate(order, start=1):
        rank[i] = r
    return rank


def _normalize(raw, dim, perturb):
    raw = [tuple(p) for p in raw]
    for p in raw:
        if len(p) != dim:
            raise GeometryError(f"expected {dim} coordinates, got {len(p)}")
    cols = []
    for a in range(dim):
        values = [p[a] for p in raw]
        keys = None
        if perturb:
            # ties on axis a broken by the remaining axes in cyclic order, then input index
            others = [(a + s) % dim for s in range(1, dim)]
            keys = [(p[a],) + tuple(p[b] for b in others) + (i,) for i, p in enumerate(raw)]
        cols.append(_ranks(values, a, keys))
    return [tuple(cols[a][i] for a in range(dim)) for i in range(len(raw))]


def normalize_ranks(raw: Iterable[Sequence[float]], perturb: bool = False) -> PointSet2:
    """Replace each coordinate by its rank (1..n) along its axis.

    Raises :class:`DuplicateCoordinate` on ties unless ``perturb`` is set, in
    which case ties are broken deterministically (by the other coordinate,
    then by input position).  Perturbing changes the instance.
    """
    return PointSet2(tuple(_normalize(raw, 2, perturb)))


def normalize_ranks3(raw: Iterable[Sequence[float]], perturb: bool = False) -> PointSet3:
    return PointSet3(tuple(_normalize(raw, 3, perturb)))


@dataclass(frozen=True)
class Rect:
    x_lo: int
    x_hi: int
    y_lo: int
    y_hi: int

    def __post_init__(self):
        if self.x_lo > self.x_hi or self.y_lo > self.y_hi:
            raise GeometryError(f"inverted rectangle {self}")

    def contains_in_interior(self, p) -> bool:
        return self.x_lo < p[0] < self.x_hi and self.y_lo < p[1] < self.y_hi

    def on_boundary(self, p) -> bool:
        inside = self.x_lo <= p[0] <= self.x_hi and self.y_lo <= p[1] <= self.y_hi
        return inside and not self.contains_in_interior(p)


@dataclass(frozen=True)
class Box:
    lo: tuple[int, int, int]
    hi: tuple[int, int, int]

    def __post_init__(self):
        if any(a > b for a, b in zip(self.lo, self.hi)):
            raise GeometryError(f"inverted box {self}")

    def contains_in_interior(self, p) -> bool:
        return all(lo < c < hi for lo, c, hi in zip(self.lo, p, self.hi))


def spanned_rect(A) -> Rect:
    A = list(A)
    if not A:
        raise EmptySubset("cannot span a rectangle on no points")
    xs = [p[0] for p in A]
    ys = [p[1] for p in A]
    return Rect(min(xs), max(xs), min(ys), max(ys))


def spanned_box(A) -> Box:
    A = list(A)
    if not A:
        raise EmptySubset("cannot span a box on no points")
    return Box(tuple(min(p[a] for p in A) for a in range(3)),
               tuple(max(p[a] for p in A) for a in range(3)))


def interior_empty(r: Rect, X) -> bool:
    return not any(r.contains_in_interior(p) for p in X)


def box_interior_empty(b: Box, Y) -> bool:
    return not any(b.contains_in_interior(p) for p in Y)


def dominates(p, q) -> bool:
    """True if q is strictly below p in every coordinate."""
    return all(a > b for a, b in zip(p, q))


class Quadrant(enum.Enum):
    NE = (1, 1)
    NW = (-1, 1)
    SW = (-1, -1)
    SE = (1, -1)

    def contains(self, anchor, p) -> bool:
        sx, sy = self.value
        return sx * (p[0] - anchor[0]) > 0 and sy * (p[1] - anchor[1]) > 0


def empty_quadrants(p, X) -> list[Quadrant]:
    pts = list(X)
    p = tuple(p)
    if p not in [tuple(q) for q in pts]:
        raise PointNotInSet(f"{p} is not a point of the set")
    others = [q for q in pts if tuple(q) != p]
    return [Q for Q in Quadrant if not any(Q.contains(p, q) for q in others)]


def empty_quadrant_count(p, X) -> int:
    """Number of open quadrants at ``p`` holding no other point of X."""
    return len(empty_quadrants(p, X))


def random_pointset(n: int, rng) -> PointSet2:
    """Rank-normalized uniform random points; ``rng`` is a numpy Generator."""
    return normalize_ranks(rng.random((n, 2)).tolist())


def random_pointset3(n: int, rng) -> PointSet3:
    return normalize_ranks3(rng.random((n, 3)).tolist())
