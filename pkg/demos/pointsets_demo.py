"""Small helpers shared by the demo scripts."""

from emptyrect.geom import PointSet2


def chain(n):
    return PointSet2(tuple((i, i) for i in range(1, n + 1)))
