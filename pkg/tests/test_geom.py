import pytest
from hypothesis import given, strategies as st

from emptyrect.geom import (
    Box,
    DuplicateCoordinate,
    empty_quadrant_count,
    empty_quadrants,
    EmptySubset,
    interior_empty,
    NonGenericInput,
    normalize_ranks,
    normalize_ranks3,
    PointNotInSet,
    PointSet2,
    Quadrant,
    Rect,
    spanned_box,
    spanned_rect,
)

CHAIN3 = [(1, 1), (2, 2), (3, 3)]


def test_normalize_examples():
    assert normalize_ranks([(0.5, 0.9), (0.1, 0.2)]).points == ((2, 2), (1, 1))
    assert normalize_ranks([(1, 1)]).points == ((1, 1),)


def test_normalize_duplicate():
    with pytest.raises(DuplicateCoordinate) as exc:
        normalize_ranks([(3.0, 1.0), (3.0, 2.0)])
    assert exc.value.axis == "x" and exc.value.value == 3.0


def test_normalize_perturb_breaks_ties_deterministically():
    X = normalize_ranks([(3.0, 1.0), (3.0, 2.0), (1.0, 2.0)], perturb=True)
    # x-tie broken by y, y-tie broken by x
    assert X.points == ((2, 1), (3, 3), (1, 2))


def test_normalize_3d():
    Y = normalize_ranks3([(0.3, 0.1, 0.9), (0.2, 0.5, 0.4)])
    assert Y.points == ((2, 1, 2), (1, 2, 1))


def test_pointset_rejects_nongeneric():
    with pytest.raises(NonGenericInput):
        PointSet2(((1, 1), (2, 1)))


distinct_reals = st.lists(
    st.tuples(st.floats(-1e6, 1e6, allow_nan=False), st.floats(-1e6, 1e6, allow_nan=False)),
    min_size=1, max_size=25,
).filter(lambda pts: len({p[0] for p in pts}) == len(pts) and len({p[1] for p in pts}) == len(pts))


@given(distinct_reals)
def test_normalize_preserves_order_and_is_idempotent(raw):
    X = normalize_ranks(raw)
    assert X.is_normalized()
    for i in range(len(raw)):
        for j in range(len(raw)):
            for a in range(2):
                assert (raw[i][a] < raw[j][a]) == (X[i][a] < X[j][a])
    assert normalize_ranks(X.points) == X


def test_spanned_rect_examples():
    assert spanned_rect([(1, 3), (4, 2)]) == Rect(1, 4, 2, 3)
    assert spanned_rect([(2, 2)]) == Rect(2, 2, 2, 2)
    assert spanned_rect([(1, 3), (2, 4), (3, 1)]) == Rect(1, 3, 1, 4)
    with pytest.raises(EmptySubset):
        spanned_rect([])


def test_spanned_box():
    assert spanned_box([(1, 5, 2), (3, 4, 6)]) == Box((1, 4, 2), (3, 5, 6))


def test_interior_empty_examples():
    assert not interior_empty(Rect(1, 3, 1, 3), CHAIN3)
    assert interior_empty(Rect(1, 2, 1, 2), CHAIN3)
    assert interior_empty(Rect(2, 2, 2, 2), CHAIN3)


@given(st.permutations(range(1, 9)), st.integers(0, 7), st.integers(0, 7))
def test_interior_empty_symmetric(perm, i, j):
    X = [(k + 1, perm[k]) for k in range(8)]
    assert interior_empty(spanned_rect([X[i], X[j]]), X) == interior_empty(spanned_rect([X[j], X[i]]), X)


def test_quadrant_counts():
    assert empty_quadrant_count((2, 2), CHAIN3) == 2
    assert set(empty_quadrants((2, 2), CHAIN3)) == {Quadrant.NW, Quadrant.SE}
    assert empty_quadrant_count((1, 1), CHAIN3) == 3
    assert set(empty_quadrants((1, 1), CHAIN3)) == {Quadrant.NW, Quadrant.SW, Quadrant.SE}
    assert empty_quadrant_count((5, 5), [(5, 5)]) == 4
    with pytest.raises(PointNotInSet):
        empty_quadrant_count((9, 9), CHAIN3)


@given(st.permutations(range(1, 11)))
def test_quadrant_sum_at_least_four(perm):
    X = [(k + 1, perm[k]) for k in range(len(perm))]
    assert sum(empty_quadrant_count(p, X) for p in X) >= 4
