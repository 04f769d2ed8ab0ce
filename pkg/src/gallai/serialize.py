"""Exact text encodings: scalar and point-set literals, JSON witness documents.

In JSON a rational is ``[p, q]`` and a quadratic scalar ``rat + coef*sqrt(d)``
is the triple ``[[p, q], [p', q'], d]``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from .disjoint import CopyFamily, FamilyMember
from .report import Check, VerificationReport
from .dilation import DilationFactor, MultiFamily
from .errors import InputError
from .geometry import Homothety, Point, PointSet, make_pointset
from .lattice import GridColoring, LatticeWitness, ThresholdResult
from .lifting import CosetIndex, CosetWitness
from .scalar import QuadScalar, qs

SCHEMA = "gallai-witness/1"

# -- literals ------------------------------------------------------------------

_RAT = re.compile(r"\d+(?:/\d+)?")
_RAD = re.compile(r"(?P<c>\d+(?:/\d+)?)?\*?(?:√|sqrt\()(?P<d>\d+)\)?(?:/(?P<s>\d+))?")


def parse_scalar(text: str) -> QuadScalar:
    """Parse ``p/q``, ``p/q+r/s√d`` and variants such as ``-√2``, ``3sqrt(5)/2``."""
    s = text.replace(" ", "")
    if not s:
        raise InputError("empty scalar literal")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise InputError(f"bad scalar literal {text!r}")
    total = qs(0)
    for term in terms:
        sign = -1 if term[0] == "-" else 1
        body = term.lstrip("+-")
        if _RAT.fullmatch(body):
            try:
                total = total + qs(Fraction(body)) * sign
            except ZeroDivisionError as exc:
                raise InputError(f"bad scalar literal {text!r}: zero denominator") from exc
            continue
        m = _RAD.fullmatch(body)
        if not m:
            raise InputError(f"bad scalar literal {text!r}")
        try:
            coef = Fraction(m.group("c") or 1) / int(m.group("s") or 1)
            total = total + QuadScalar(0, coef * sign, int(m.group("d")))
        except (ArithmeticError, InputError) as exc:
            raise InputError(f"bad scalar literal {text!r}: {exc}") from exc
    return total


def parse_pointset_literal(text: str) -> PointSet:
    """``"0,0; 1,0; 1/2,1/2√3"``: points split by ';', coordinates by ','."""
    pts = [p for p in text.strip().split(";") if p.strip()]
    if not pts:
        raise InputError("empty point-set literal")
    return make_pointset([Point(parse_scalar(c) for c in p.split(",")) for p in pts])


def format_scalar(x: QuadScalar) -> str:
    return str(qs(x))


def format_pointset(S: PointSet) -> str:
    return ";".join(",".join(format_scalar(c) for c in p) for p in S.points)


# -- exact JSON numbers --------------------------------------------------------


def encode_scalar(x) -> list:
    x = qs(x)
    rat = [x.rat.numerator, x.rat.denominator]
    if x.coef == 0:
        return rat
    return [rat, [x.coef.numerator, x.coef.denominator], x.d]


def decode_scalar(obj) -> QuadScalar:
    if isinstance(obj, list) and len(obj) == 2 and all(isinstance(v, int) for v in obj):
        return qs(Fraction(obj[0], obj[1]))
    if isinstance(obj, list) and len(obj) == 3:
        return QuadScalar(Fraction(*obj[0]), Fraction(*obj[1]), obj[2])
    raise InputError(f"not an exact scalar encoding: {obj!r}")


def encode_point(p: Point) -> list:
    return [encode_scalar(c) for c in p.coords]


def decode_point(obj) -> Point:
    return Point(decode_scalar(c) for c in obj)


def encode_pointset(S: PointSet) -> list:
    return [encode_point(p) for p in S.points]


def decode_pointset(obj) -> PointSet:
    pts = tuple(decode_point(p) for p in obj)
    S = make_pointset(pts)
    if S.points != pts:
        raise InputError("encoded point set is not canonical")
    return S


# -- results -------------------------------------------------------------------


def encode_grid(g: GridColoring) -> dict:
    return {"shape": list(g.shape), "colors": g.colors, "cells": g.cells.ravel().tolist()}


def decode_grid(obj) -> GridColoring:
    return GridColoring(np.array(obj["cells"], dtype=np.int64).reshape(obj["shape"]), obj["colors"])


def encode_lattice_witness(w: LatticeWitness | None) -> dict | None:
    if w is None:
        return None
    return {"translate": list(w.translate), "scale": w.scale, "color": w.color, "points": [list(p) for p in w.points]}


def decode_lattice_witness(obj) -> LatticeWitness | None:
    if obj is None:
        return None
    return LatticeWitness(tuple(obj["translate"]), obj["scale"], obj["color"], tuple(tuple(p) for p in obj["points"]))


def encode_threshold(t: ThresholdResult) -> dict:
    return {
        "status": "resolved" if t.resolved else "unresolved",
        "value": t.value,
        "certificate": None if t.certificate is None else encode_grid(t.certificate),
    }


def decode_threshold(obj) -> ThresholdResult:
    cert = obj["certificate"]
    return ThresholdResult(obj["status"] == "resolved", obj["value"], None if cert is None else decode_grid(cert))


def _encode_member(m: FamilyMember) -> dict:
    out: dict[str, Any] = {
        "scale": encode_scalar(m.homothety.scale),
        "translate": encode_point(m.homothety.translate),
        "color": m.color,
        "points": [encode_point(p) for p in m.points],
        "witness": None,
    }
    if m.witness is not None:
        w = m.witness
        out["witness"] = {
            "a": w.a,
            "w": list(w.w),
            "e": [encode_scalar(x) for x in w.index.e],
            "r": encode_scalar(w.index.r),
            "color": w.color,
        }
    return out


def _decode_member(obj) -> FamilyMember:
    wit = None
    if obj.get("witness") is not None:
        w = obj["witness"]
        idx = CosetIndex(tuple(decode_scalar(x) for x in w["e"]), decode_scalar(w["r"]))
        wit = CosetWitness(w["a"], tuple(w["w"]), idx, w["color"])
    return FamilyMember(
        Homothety(decode_scalar(obj["scale"]), decode_point(obj["translate"])),
        obj["color"],
        tuple(decode_point(p) for p in obj["points"]),
        wit,
    )


def encode_family(F: CopyFamily) -> dict:
    return {
        "mode": F.mode,
        "pitch": encode_scalar(F.pitch),
        "shared": None if F.shared is None else {"a0": F.shared[0], "w0": list(F.shared[1])},
        "S": encode_pointset(F.S),
        "members": [_encode_member(m) for m in F.members],
    }


def decode_family(obj) -> CopyFamily:
    shared = None if obj["shared"] is None else (obj["shared"]["a0"], tuple(obj["shared"]["w0"]))
    return CopyFamily(
        decode_pointset(obj["S"]),
        tuple(_decode_member(m) for m in obj["members"]),
        obj["mode"],
        decode_scalar(obj["pitch"]),
        shared,
    )


def _encode_factor(f: DilationFactor) -> dict:
    return {"q": [f.q.numerator, f.q.denominator], "m": f.m}


def _decode_factor(obj) -> DilationFactor:
    return DilationFactor(Fraction(*obj["q"]), obj["m"])


def encode_multifamily(M: MultiFamily) -> dict:
    return {
        "families": [{"pitch": _encode_factor(p), "family": encode_family(F)} for p, F in M.families],
        "factors": [_encode_factor(f) for f in M.factors],
    }


def decode_multifamily(obj) -> MultiFamily:
    return MultiFamily(
        tuple((_decode_factor(f["pitch"]), decode_family(f["family"])) for f in obj["families"]),
        tuple(_decode_factor(f) for f in obj["factors"]),
    )


def encode_report(rep: VerificationReport) -> dict:
    return {"ok": rep.ok, "entries": [{"check": e.check, "ok": e.ok, "detail": e.detail} for e in rep.entries]}


def decode_report(obj) -> VerificationReport:
    return VerificationReport(tuple(Check(e["check"], e["ok"], e["detail"]) for e in obj["entries"]))


# -- documents -----------------------------------------------------------------


@dataclass
class WitnessDocument:
    """A self-describing result: input echo, payload and verification report.

    ``kind`` is one of ``witness``, ``threshold``, ``family``, ``multifamily``;
    ``result`` and ``verification`` hold the JSON encodings.
    """

    kind: str
    input: dict[str, Any]
    result: Any
    verification: dict[str, Any] | None = None
    schema: str = field(default=SCHEMA)

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema": self.schema,
                "kind": self.kind,
                "input": self.input,
                "result": self.result,
                "verification": self.verification,
            },
            indent=1,
            ensure_ascii=False,
        )

    @classmethod
    def from_json(cls, text: str) -> WitnessDocument:
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"not a witness document: {exc}") from exc
        if not isinstance(obj, dict) or obj.get("schema") != SCHEMA:
            raise InputError(f"unsupported schema {obj.get('schema') if isinstance(obj, dict) else None!r}")
        return cls(obj["kind"], obj["input"], obj["result"], obj.get("verification"), obj["schema"])

    def payload(self):
        """Decode ``result`` into library objects."""
        decoders = {
            "witness": decode_lattice_witness,
            "threshold": decode_threshold,
            "family": decode_family,
            "multifamily": decode_multifamily,
        }
        if self.kind not in decoders:
            raise InputError(f"unknown document kind {self.kind!r}")
        return decoders[self.kind](self.result)

    @property
    def verified(self) -> bool:
        return self.verification is None or bool(self.verification.get("ok"))
