import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gallai import (
    Budget,
    ConstantColoring,
    GridColoring,
    LinearFloorMod,
    QuadScalar,
    build_family,
    find_copy,
    gallai_number,
    make_pointset,
    multi_dilation_family,
)
from gallai.errors import InputError
from gallai.serialize import (
    WitnessDocument,
    decode_scalar,
    encode_family,
    encode_lattice_witness,
    encode_multifamily,
    encode_scalar,
    encode_threshold,
    format_pointset,
    parse_pointset_literal,
    parse_scalar,
)

from conftest import quad_scalars

H = Fraction(1, 2)


@pytest.mark.parametrize(
    "text, value",
    [
        ("3", QuadScalar(3)),
        ("-3/4", QuadScalar(Fraction(-3, 4))),
        ("√2", QuadScalar(0, 1, 2)),
        ("-√2", QuadScalar(0, -1, 2)),
        ("sqrt(3)", QuadScalar(0, 1, 3)),
        ("3sqrt(5)/2", QuadScalar(0, Fraction(3, 2), 5)),
        ("1/2+1/2√3", QuadScalar(H, H, 3)),
        ("1 - 2√7", QuadScalar(1, -2, 7)),
    ],
)
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value
    assert parse_scalar(str(value)) == value


@pytest.mark.parametrize("text", ["", "1/0", "√4", "x", "√2+√3", "1//2"])
def test_parse_scalar_rejects(text):
    with pytest.raises((InputError, ArithmeticError)):
        parse_scalar(text)


def test_pointset_literal(equilateral):
    assert parse_pointset_literal("0,0; 1,0; 1/2,1/2√3") == equilateral
    assert parse_pointset_literal(format_pointset(equilateral)) == equilateral
    with pytest.raises(InputError):
        parse_pointset_literal(" ; ")


@given(st.sampled_from([1, 2, 3, 5]).flatmap(quad_scalars))
def test_scalar_json_round_trip(x):
    assert decode_scalar(json.loads(json.dumps(encode_scalar(x)))) == x


def round_trip(kind, result):
    doc = WitnessDocument(kind, {"set": "0"}, result, {"ok": True, "entries": []})
    back = WitnessDocument.from_json(doc.to_json())
    assert back == doc
    return back.payload()


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(2, 3))
def test_witness_and_threshold_round_trip(seed, c):
    S = make_pointset([[0], [1], [2]])
    g = GridColoring(np.random.default_rng(seed).integers(0, c, 12), c)
    w = find_copy(g, S, 12)
    assert round_trip("witness", encode_lattice_witness(w)) == w
    t = gallai_number(make_pointset([[0], [1]]), c, 5)
    assert round_trip("threshold", encode_threshold(t)) == t


def test_unresolved_threshold_round_trip():
    t = gallai_number(make_pointset([[0], [1], [2]]), 2, 5)
    assert round_trip("threshold", encode_threshold(t)) == t


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 4), st.sampled_from(["direct", "proof-faithful"]), st.sampled_from([1, H, QuadScalar(0, 1, 2)]))
def test_family_round_trip(k, mode, r):
    S = make_pointset([[0, 0], [1, 0], [0, 1]])
    F = build_family(LinearFloorMod([1, 1], 2), S, k, r, mode)
    assert round_trip("family", encode_family(F)) == F


def test_radical_family_and_multifamily_round_trip(equilateral):
    F = build_family(LinearFloorMod([1, 1], 2), equilateral, 3)
    assert round_trip("family", encode_family(F)) == F
    M = multi_dilation_family(ConstantColoring(), make_pointset([[0], [1]]), [1, 2, 3], 2, Budget(4, 1, 4))
    assert round_trip("multifamily", encode_multifamily(M)) == M


def test_document_errors():
    with pytest.raises(InputError):
        WitnessDocument.from_json("not json")
    with pytest.raises(InputError):
        WitnessDocument.from_json('{"schema": "other/9"}')
    with pytest.raises(InputError):
        WitnessDocument("nonsense", {}, None).payload()
    with pytest.raises(InputError):
        decode_scalar("1/2")
