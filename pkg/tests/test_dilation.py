from fractions import Fraction

import pytest

from gallai import (
    PROOF_FAITHFUL,
    ConstantColoring,
    DilationFactor,
    QuadScalar,
    build_family,
    checkerboard,
    factor_equal,
    make_pointset,
    multi_dilation_family,
    verify_family,
)
from gallai.errors import InputError, NotSquarefree


def test_factor_equal_examples():
    assert factor_equal(DilationFactor(3, 2), DilationFactor(3, 2))
    assert not factor_equal(DilationFactor(1, 2), DilationFactor(1, 3))
    assert not factor_equal(DilationFactor(2, 1), DilationFactor(1, 1))
    assert DilationFactor(Fraction(3, 2), 5).value == QuadScalar(0, Fraction(3, 2), 5)
    assert DilationFactor.from_scalar(QuadScalar(0, 2, 7)) == DilationFactor(2, 7)
    assert str(DilationFactor(2, 3)) == "2√3"


def test_factor_validation():
    with pytest.raises(NotSquarefree):
        DilationFactor(1, 4)
    with pytest.raises(InputError):
        DilationFactor(0, 2)
    with pytest.raises(InputError):
        DilationFactor.from_scalar(QuadScalar(1, 1, 2))


def test_multi_family_examples(triangle):
    line = make_pointset([[0], [1]])
    M = multi_dilation_family(ConstantColoring(), line, [1, 2], 2)
    assert len(M.families) == 2 and len(M) == 4
    assert [f.m for f in M.factors] == [1, 2]
    assert not factor_equal(*M.factors)
    M = multi_dilation_family(ConstantColoring(), line, [2, 3, 5], 1)
    assert M.factors == (DilationFactor(1, 2), DilationFactor(1, 3), DilationFactor(1, 5))


def test_single_radicand_reduces_to_build_family(triangle):
    chi = checkerboard()
    M = multi_dilation_family(chi, triangle, [1], 2)
    assert M.families[0][1] == build_family(chi, triangle, 2, 1, PROOF_FAITHFUL)


def test_pitch_propagation_and_verification(triangle):
    chi = checkerboard()
    M = multi_dilation_family(chi, triangle, [1, 2, 3], 3, workers=3)
    assert M == multi_dilation_family(chi, triangle, [1, 2, 3], 3)
    for pitch, fam in M.families:
        assert verify_family(chi, triangle, fam).ok
        for mem in fam.members:
            for p in mem.points:
                for x in p:
                    if pitch.m > 1:
                        assert x.rat == 0 and x.d in (1, pitch.m)
    for i, f in enumerate(M.factors):
        for g in M.factors[i + 1 :]:
            assert not factor_equal(f, g)


def test_multi_family_errors(triangle, equilateral):
    with pytest.raises(NotSquarefree):
        multi_dilation_family(ConstantColoring(), triangle, [1, 8], 1)
    with pytest.raises(InputError):
        multi_dilation_family(ConstantColoring(), triangle, [2, 2], 1)
    with pytest.raises(InputError):
        multi_dilation_family(ConstantColoring(), equilateral, [2], 1)
