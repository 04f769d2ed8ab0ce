from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gallai import Homothety, Point, affine_dimension, apply_homothety, make_pointset, qs, QuadScalar
from gallai.errors import DimensionMismatch, EmptySet, MixedRadicand, ZeroScale

from conftest import fractions


def P(*cs):
    return Point(cs)


def test_make_pointset_examples(equilateral):
    assert make_pointset([[1, 1]]).points == (P(0, 0),)
    assert make_pointset([[2, 3], [3, 3], [2, 4]]).points == (P(0, 0), P(1, 0), P(0, 1))
    assert equilateral.points == (P(0, 0), P(1, 0), P(Fraction(1, 2), QuadScalar(0, Fraction(1, 2), 3)))


def test_make_pointset_dedup_and_min_first():
    S = make_pointset([[3], [1], [3], [2]])
    assert S.points == (P(0), P(2), P(1))


def test_make_pointset_errors():
    with pytest.raises(EmptySet):
        make_pointset([])
    with pytest.raises(DimensionMismatch):
        make_pointset([[0], [0, 1]])
    with pytest.raises(MixedRadicand):
        make_pointset([["√2"], ["√3"]])


@pytest.mark.parametrize(
    "pts, dim",
    [([[0, 0]], 0), ([[0, 0], [1, 0], [2, 0]], 1), ([[0, 0], [1, 0], [0, 1]], 2), ([[0, 0, 0], [1, 1, 1], [2, 2, 2]], 1)],
)
def test_affine_dimension(pts, dim):
    assert affine_dimension(make_pointset(pts)) == dim


def test_apply_homothety_examples(triangle):
    S = make_pointset([[0, 0], [1, 0]])
    assert apply_homothety(Homothety(1, P(0, 0)), triangle) == triangle.points
    assert apply_homothety(Homothety(2, P(1, 1)), S) == (P(1, 1), P(3, 1))
    line = make_pointset([[0], [1]])
    assert apply_homothety(Homothety(QuadScalar(0, 1, 2), P(0)), line) == (P(0), P(QuadScalar(0, 1, 2)))


def test_zero_scale():
    with pytest.raises(ZeroScale):
        Homothety(0, P(0))


point_lists = st.integers(1, 3).flatmap(
    lambda k: st.lists(st.lists(fractions, min_size=k, max_size=k), min_size=1, max_size=5)
)


@given(point_lists, fractions.filter(lambda x: x > 0), st.data())
def test_homothety_properties(pts, scale, data):
    S = make_pointset(pts)
    t = Point(data.draw(st.lists(fractions, min_size=S.dim, max_size=S.dim)))
    h = Homothety(scale, t)
    img = apply_homothety(h, S)
    assert len(set(img)) == len(S)
    for i in range(len(S)):
        for j in range(len(S)):
            assert img[i] - img[j] == (S[i] - S[j]) * qs(scale)
    assert affine_dimension(make_pointset(img)) == affine_dimension(S)
