from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from gallai import (
    Budget,
    ConstantColoring,
    Homothety,
    LinearFloorMod,
    Point,
    QuadScalar,
    apply_homothety,
    apply_T,
    build_family,
    build_matrix,
    checkerboard,
    difference_lattice,
    difference_set,
    hermite_normal_form,
    in_Y,
    lattice_member,
    make_pointset,
    verify_family,
)
from gallai.disjoint import DIRECT, PROOF_FAITHFUL
from gallai.errors import BudgetExhausted, DegenerateConfiguration, DimensionMismatch, InputError

import oracles
from conftest import fractions

H, Q = Fraction(1, 2), Fraction(1, 4)


def test_in_Y_examples(triangle):
    assert in_Y(triangle, [0, 0])
    assert in_Y(triangle, [3, 0])
    assert in_Y(triangle, [-2, 2])
    assert not in_Y(triangle, [1, 1])
    assert not in_Y(triangle, [H, 0])
    with pytest.raises(DimensionMismatch):
        in_Y(triangle, [1])


def test_difference_set_closed_under_negation(triangle):
    ds = set(difference_set(triangle))
    assert ds == {-d for d in ds}
    assert len(ds) == 6 and not any(d.is_zero() for d in ds)
    # the literal index range drops the differences against the origin
    assert difference_set(triangle, literal=True) == (Point([1, -1]),)
    assert in_Y(triangle, [-2, 2], literal=True) and not in_Y(triangle, [1, 0], literal=True)


def test_difference_lattice_examples(triangle):
    assert difference_lattice(triangle).basis == ((1, 0), (0, 1))
    L = difference_lattice(make_pointset([[0], [2]]))
    assert L.basis == ((2,),) and lattice_member(L, [4]) and not lattice_member(L, [1])
    L = difference_lattice(make_pointset([[0, 0], [2, 0], [0, 3]]))
    assert L.basis == ((2, 0), (0, 3))
    gens = [(2, 0), (0, 3), (2, -3)]
    for v in [(1, 0), (0, 1), (2, 0), (0, 3), (2, -3), (4, 6), (1, 3)]:
        assert lattice_member(L, v) == oracles.member_by_enumeration(gens, v)
    assert lattice_member(L, [0, 0])


def test_lattice_with_denominators_and_radicals(equilateral):
    L = difference_lattice(make_pointset([[0], [H], [Fraction(1, 3)]]))
    assert lattice_member(L, [Fraction(1, 6)]) and not lattice_member(L, [Fraction(1, 12)])
    L = difference_lattice(equilateral)
    assert lattice_member(L, [Fraction(3, 2), QuadScalar(0, H, 3)])
    assert not lattice_member(L, [H, 0])
    assert not lattice_member(L, [0, QuadScalar(0, 1, 2)])


def test_hnf_canonical():
    assert hermite_normal_form([[4, 6], [2, 3]]) == [[2, 3]]
    assert hermite_normal_form([[0, 3], [2, 0], [2, -3]]) == [[2, 0], [0, 3]]
    assert hermite_normal_form([[3, 1], [0, 2], [5, 7]]) == hermite_normal_form([[5, 7], [3, 1], [0, 2], [8, 8]])


@st.composite
def exact_instances(draw):
    """Independent generators and v = sum(c_i y_i) / D with |c_i| <= 5.

    The rational solution is unique and equal to c / D, so the bounded
    enumeration decides membership exactly.
    """
    dim = draw(st.integers(1, 3))
    pts = draw(st.lists(st.lists(st.integers(-3, 3), min_size=dim, max_size=dim), min_size=dim, max_size=dim))
    S = make_pointset([[0] * dim, *pts])
    assume(len(S) == dim + 1 and build_matrix_ok(S))
    ys = [tuple(Fraction(x) for x in s.as_ints()) for s in S.points if not s.is_zero()]
    c = draw(st.lists(st.integers(-5, 5), min_size=dim, max_size=dim))
    D = draw(st.integers(1, 3))
    v = tuple(sum(ci * y[i] for ci, y in zip(c, ys)) / D for i in range(dim))
    return S, ys, v


def build_matrix_ok(S):
    try:
        build_matrix(S)
        return True
    except DegenerateConfiguration:
        return False


@settings(max_examples=150, deadline=None)
@given(exact_instances())
def test_membership_matches_enumeration(inst):
    S, ys, v = inst
    L = difference_lattice(S)
    assert lattice_member(L, v) == oracles.member_by_enumeration(ys, v)
    assert lattice_member(L, v) >= in_Y(S, v)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 3).flatmap(lambda k: st.lists(st.lists(fractions, min_size=k, max_size=k), min_size=2, max_size=4, unique_by=tuple)), st.data())
def test_soundness_and_relation(pts, data):
    S = make_pointset(pts)
    L = difference_lattice(S)
    u = Point(data.draw(st.lists(fractions, min_size=S.dim, max_size=S.dim)))
    v = Point(data.draw(st.lists(fractions, min_size=S.dim, max_size=S.dim)))
    if not lattice_member(L, u - v):
        assert not in_Y(S, u - v)
    assert in_Y(S, u - u)
    assert in_Y(S, u - v) == in_Y(S, v - u)
    for delta in difference_set(S):
        assert lattice_member(L, delta) and in_Y(S, delta * 3)


def test_non_transitivity():
    S = make_pointset([[0, 0], [1, 0], [0, 1], [1, -1]])
    S2 = make_pointset([[0, 0], [1, 0], [0, 1]])
    p, q, r = Point([1, 1]), Point([0, 1]), Point([0, 0])
    for T in (S, S2):
        assert in_Y(T, p - q) and in_Y(T, q - r) and not in_Y(T, p - r)
        assert lattice_member(difference_lattice(T), p - r)


@settings(max_examples=100, deadline=None)
@given(
    st.integers(1, 2).flatmap(lambda k: st.lists(st.lists(fractions, min_size=k, max_size=k), min_size=k + 1, max_size=k + 2)),
    st.integers(1, 5),
    st.data(),
)
def test_shared_dilation_copies_are_disjoint(pts, a0, data):
    S = make_pointset(pts)
    try:
        A = build_matrix(S)
    except DegenerateConfiguration:
        return
    L = difference_lattice(S)
    m = A.n_minus_1
    d0 = apply_T(A, data.draw(st.lists(st.integers(-3, 3), min_size=m, max_size=m)))
    p = Point(data.draw(st.lists(fractions, min_size=S.dim, max_size=S.dim)))
    q = Point(data.draw(st.lists(fractions, min_size=S.dim, max_size=S.dim)))
    A_ = set(apply_homothety(Homothety(a0, d0 + p), S))
    B_ = set(apply_homothety(Homothety(a0, d0 + q), S))
    if not lattice_member(L, (p - q) * Fraction(1, a0)):
        assert A_.isdisjoint(B_)
    # the converse direction: a shift by a0 times a difference collides
    y = data.draw(st.sampled_from(difference_set(S)))
    C_ = set(apply_homothety(Homothety(a0, d0 + p + y * a0), S))
    assert not A_.isdisjoint(C_)


def test_build_family_constant_proof_faithful(triangle):
    fam = build_family(ConstantColoring(), triangle, 3, mode=PROOF_FAITHFUL)
    assert fam.shared == (1, (0, 0))
    assert len(fam) == 3 and verify_family(ConstantColoring(), triangle, fam).ok
    L = difference_lattice(triangle)
    ts = [m.homothety.translate for m in fam.members]
    for i in range(3):
        for j in range(i + 1, 3):
            assert not lattice_member(L, ts[i] - ts[j])


def test_build_family_checkerboard(triangle):
    chi = checkerboard()
    fam = build_family(chi, triangle, 2, mode=PROOF_FAITHFUL)
    assert fam.shared[0] == 2 and verify_family(chi, triangle, fam).ok
    assert {m.homothety.scale for m in fam.members} == {2}
    fam = build_family(chi, triangle, 12)
    assert fam.mode == DIRECT and len(fam) == 12 and verify_family(chi, triangle, fam).ok


def test_build_family_k1_is_gallai(triangle):
    fam = build_family(LinearFloorMod([1, 2], 3), triangle, 1)
    assert len(fam) == 1 and verify_family(LinearFloorMod([1, 2], 3), triangle, fam).ok


def test_build_family_line_and_radical(equilateral):
    S = make_pointset([[0], [1], [3]])
    chi = LinearFloorMod([1], 3)
    for mode in (DIRECT, PROOF_FAITHFUL):
        fam = build_family(chi, S, 5, mode=mode)
        assert verify_family(chi, S, fam).ok
    fam = build_family(checkerboard(), equilateral, 4)
    assert verify_family(checkerboard(), equilateral, fam).ok


def test_build_family_errors(triangle):
    with pytest.raises(InputError):
        build_family(ConstantColoring(), triangle, 0)
    with pytest.raises(InputError):
        build_family(ConstantColoring(), triangle, 1, mode="fast")
    with pytest.raises(DegenerateConfiguration):
        build_family(ConstantColoring(), make_pointset([[0, 0], [1, 1]]), 1)
    with pytest.raises(BudgetExhausted):
        build_family(ConstantColoring(), triangle, 10, budget=Budget(1, 0, 2))
    with pytest.raises(BudgetExhausted):
        build_family(checkerboard(), triangle, 2, mode=PROOF_FAITHFUL, budget=Budget(1, 0, 4))


def test_verify_family_reports_violations(triangle):
    chi = checkerboard()
    fam = build_family(chi, triangle, 3)
    twin = fam.members[:2] + (fam.members[0],)
    rep = verify_family(chi, triangle, twin)
    assert not rep.ok
    bad = [c for c in rep.failures if c.check == "disjoint"]
    assert bad and "share point" in bad[0].detail and "members 0 and 2" in bad[0].detail
    rep = verify_family(LinearFloorMod([1, 0], 3), triangle, fam)
    mono = [c for c in rep.failures if c.check == "monochromatic"]
    assert mono and "member 0" in mono[0].detail
    broken = replace(fam.members[1], points=fam.members[1].points[::-1])
    rep = verify_family(chi, triangle, (fam.members[0], broken))
    assert [c.check for c in rep.failures] == ["homothetic"]
