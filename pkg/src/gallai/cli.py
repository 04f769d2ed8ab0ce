"""Command-line front end.

Exit codes: 0 verified success, 1 verification failure, 2 budget exhausted or
no witness within bounds, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .coloring import (
    Coloring,
    ConstantColoring,
    ExpressionColoring,
    LinearFloorMod,
    PeriodicTile,
    SeededRandom,
    checkerboard,
    coloring_from_spec,
)
from .dilation import factor_equal, multi_dilation_family
from .disjoint import DIRECT, PROOF_FAITHFUL, Budget, build_family, verify_family
from .errors import BudgetExhausted, GallaiError, InputError
from .geometry import PointSet
from .lattice import GridColoring, certify_avoiding, find_copy, gallai_number, verify_lattice_witness
from .pnm import load_grid_image
from .report import Check, VerificationReport
from .serialize import (
    WitnessDocument,
    decode_grid,
    decode_pointset,
    encode_family,
    encode_grid,
    encode_lattice_witness,
    encode_multifamily,
    encode_pointset,
    encode_report,
    encode_threshold,
    format_pointset,
    parse_pointset_literal,
    parse_scalar,
)
from .svg import render_svg

log = logging.getLogger("gallai")

EXIT_OK, EXIT_VERIFY, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3


# -- input parsing -------------------------------------------------------------


def parse_coloring_spec(text: str, colors: int | None = None, seed: int | None = None) -> Coloring:
    """Build a coloring from a command-line spec.

    Accepted forms: ``const[:color]``, ``checkerboard``, ``linear:w1,w2[:offset]``,
    ``tile:PATH``, ``image:PATH``, ``random[:seed]``; anything else is an
    expression such as ``(floor(x) + floor(y)) mod 2``.
    """
    head, _, rest = text.partition(":")
    head = head.strip()
    if head == "const":
        color = int(rest) if rest else 0
        return ConstantColoring(color, colors or color + 1)
    if head == "checkerboard":
        return checkerboard(int(rest) if rest else 2)
    if head == "linear":
        weights, _, offset = rest.partition(":")
        if colors is None:
            raise InputError("linear colorings need --colors")
        return LinearFloorMod([int(w) for w in weights.split(",")], colors, int(offset or 0))
    if head == "tile":
        return PeriodicTile(load_tile(rest), colors)
    if head == "image":
        g = load_grid_image(rest)
        return PeriodicTile(g.cells, g.colors, kind="grid-image")
    if head == "random":
        s = int(rest) if rest else (seed if seed is not None else 0)
        return SeededRandom(s, colors or 2)
    return ExpressionColoring(text, colors)


def load_tile(path: str) -> np.ndarray:
    """Whitespace-separated integers; one line gives a 1-D tile, else line y, column x."""
    rows = [line.split() for line in Path(path).read_text().splitlines() if line.strip()]
    try:
        arr = np.array([[int(v) for v in r] for r in rows], dtype=np.int64)
    except ValueError as exc:
        raise InputError(f"malformed tile file {path}: {exc}") from exc
    return arr[0] if arr.shape[0] == 1 else arr.T


def parse_set(text: str) -> PointSet:
    p = Path(text)
    if ";" not in text and p.is_file():
        text = p.read_text()
    return parse_pointset_literal(text)


def parse_budget(text: str | None) -> Budget:
    if not text:
        return Budget()
    try:
        vals = [int(v) for v in text.split(",")]
    except ValueError as exc:
        raise InputError(f"--budget expects a_max,d_max,denom_max, got {text!r}") from exc
    return Budget(*vals)


def parse_int_list(text: str) -> list[int]:
    return [int(v) for v in text.replace(" ", "").split(",") if v]


# -- subcommands ---------------------------------------------------------------


def _report_from(checks: Sequence[Check]) -> VerificationReport:
    return VerificationReport(tuple(checks))


def cmd_find(args) -> WitnessDocument:
    S = parse_set(args.set)
    if args.image:
        g = load_grid_image(args.image)
        if S.dim == 1 and g.cells.shape[1] == 1:
            # a single-row image is an interval grid
            g = GridColoring(g.cells[:, 0], g.colors)
        spec = PeriodicTile(g.cells, g.colors, kind="grid-image").spec()
    else:
        if args.coloring is None or args.side is None:
            raise InputError("find needs --image or both --coloring and --side")
        chi = parse_coloring_spec(args.coloring, args.colors, args.seed)
        g = GridColoring.from_coloring(chi, (args.side,) * S.dim)
        spec = chi.spec()
    b_max = args.b_max or max(g.shape)
    w = find_copy(g, S, b_max)
    rep = verify_lattice_witness(g, S, w) if w is not None else None
    return WitnessDocument(
        "witness",
        {"S": encode_pointset(S), "set": format_pointset(S), "coloring": spec, "grid": encode_grid(g), "b_max": b_max},
        encode_lattice_witness(w),
        None if rep is None else encode_report(rep),
    )


def _threshold_report(S: PointSet, res) -> VerificationReport:
    if res.certificate is None:
        return _report_from([Check("certificate", True, "no certificate needed for N = 1")])
    ok = certify_avoiding(res.certificate, S)
    return _report_from([Check("certificate", ok, f"side-{res.certificate.shape[0]} coloring avoids S")])


def cmd_number(args) -> WitnessDocument:
    S = parse_set(args.set)
    c = args.colors or 2
    res = gallai_number(S, c, args.max_side or 12, workers=args.threads or 1, canonical=args.canonical)
    rep = _threshold_report(S, res)
    return WitnessDocument(
        "threshold",
        {"S": encode_pointset(S), "set": format_pointset(S), "colors": c, "max_side": args.max_side or 12},
        encode_threshold(res),
        encode_report(rep),
    )


def _coloring_arg(args) -> Coloring:
    if args.coloring is None:
        raise InputError("--coloring is required")
    return parse_coloring_spec(args.coloring, args.colors, args.seed)


def cmd_family(args) -> WitnessDocument:
    S = parse_set(args.set)
    chi = _coloring_arg(args)
    budget = parse_budget(args.budget)
    pitch = parse_scalar(args.pitch) if args.pitch else parse_scalar("1")
    mode = args.mode or DIRECT
    F = build_family(chi, S, args.k or 1, pitch, mode, budget)
    rep = verify_family(chi, S, F)
    return WitnessDocument(
        "family",
        {
            "S": encode_pointset(S),
            "set": format_pointset(S),
            "coloring": chi.spec(),
            "k": args.k or 1,
            "mode": mode,
            "pitch": str(pitch),
            "budget": list((budget.a_max, budget.d_max, budget.denom_max)),
        },
        encode_family(F),
        encode_report(rep),
    )


def _multifamily_report(chi, S, M) -> VerificationReport:
    checks: list[Check] = []
    for pitch, fam in M.families:
        for e in verify_family(chi, S, fam).entries:
            checks.append(Check(e.check, e.ok, f"[pitch {pitch}] {e.detail}"))
    fs = M.factors
    clash = [(a, b) for i, a in enumerate(fs) for b in fs[i + 1 :] if factor_equal(a, b)]
    checks.append(
        Check("distinct-factors", not clash, ", ".join(str(f) for f in fs) if not clash else f"coinciding: {clash}")
    )
    return _report_from(checks)


def cmd_dilations(args) -> WitnessDocument:
    S = parse_set(args.set)
    chi = _coloring_arg(args)
    budget = parse_budget(args.budget)
    radicands = parse_int_list(args.radicands or "1,2")
    M = multi_dilation_family(chi, S, radicands, args.k or 1, budget, workers=args.threads or 1)
    rep = _multifamily_report(chi, S, M)
    return WitnessDocument(
        "multifamily",
        {
            "S": encode_pointset(S),
            "set": format_pointset(S),
            "coloring": chi.spec(),
            "k": args.k or 1,
            "mode": PROOF_FAITHFUL,
            "radicands": radicands,
            "budget": list((budget.a_max, budget.d_max, budget.denom_max)),
        },
        encode_multifamily(M),
        encode_report(rep),
    )


def verify_document(doc: WitnessDocument) -> VerificationReport:
    """Re-check a document from its input echo and payload alone."""
    S = decode_pointset(doc.input["S"])
    payload = doc.payload()
    if doc.kind == "witness":
        g = decode_grid(doc.input["grid"])
        if payload is None:
            ok = certify_avoiding(g, S) if doc.input.get("b_max", 0) >= max(g.shape) else True
            return _report_from([Check("absent", ok, "no monochromatic copy within bounds")])
        return verify_lattice_witness(g, S, payload)
    if doc.kind == "threshold":
        return _threshold_report(S, payload)
    chi = coloring_from_spec(doc.input["coloring"])
    if doc.kind == "family":
        return verify_family(chi, S, payload)
    return _multifamily_report(chi, S, payload)


def cmd_verify(args) -> WitnessDocument:
    doc = WitnessDocument.from_json(Path(args.document).read_text())
    doc.verification = encode_report(verify_document(doc))
    return doc


# -- driver --------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gallai", description="Monochromatic homothetic copies, found exactly.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", help="JSON file whose keys mirror the long flags")
        sp.add_argument("--set", help="point-set literal such as '0,0;1,0;0,1', or a file")
        sp.add_argument("--coloring", help="coloring spec (expression, const, checkerboard, tile:, image:, random:)")
        sp.add_argument("--colors", type=int, help="number of colors c")
        sp.add_argument("--seed", type=int)
        sp.add_argument("--threads", type=int)
        sp.add_argument("--out", help="write the document here instead of stdout")

    sp = sub.add_parser("find", help="monochromatic copy in a finite grid")
    common(sp)
    sp.add_argument("--image", help="P2/P3 grid image")
    sp.add_argument("--side", type=int, help="grid side when sampling --coloring")
    sp.add_argument("--b-max", type=int, dest="b_max")

    sp = sub.add_parser("number", help="least grid side forcing a monochromatic copy")
    common(sp)
    sp.add_argument("--max-side", type=int, dest="max_side")
    sp.add_argument("--canonical", action="store_true", help="break color-permutation symmetry")

    for name, hlp in (("family", "pairwise-disjoint family"), ("dilations", "families at distinct dilation factors")):
        sp = sub.add_parser(name, help=hlp)
        common(sp)
        sp.add_argument("--k", type=int, help="copies per family")
        sp.add_argument("--budget", help="a_max,d_max,denom_max")
        if name == "family":
            sp.add_argument("--mode", choices=[DIRECT, PROOF_FAITHFUL])
            sp.add_argument("--pitch", help="coset lattice pitch r, e.g. 1 or √2")
        else:
            sp.add_argument("--radicands", help="comma-separated distinct squarefree integers")

    sp = sub.add_parser("verify", help="re-check a witness document")
    sp.add_argument("document")
    sp.add_argument("--out")

    sp = sub.add_parser("render", help="SVG figure of a witness document")
    sp.add_argument("document")
    sp.add_argument("--window", help="xmin,ymin,xmax,ymax")
    sp.add_argument("--samples", type=int, default=40)
    sp.add_argument("--out")
    return p


def _apply_config(args) -> None:
    path = getattr(args, "config", None)
    if not path:
        return
    try:
        cfg: dict[str, Any] = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read config {path}: {exc}") from exc
    for key, value in cfg.items():
        key = key.replace("-", "_")
        if not hasattr(args, key):
            raise InputError(f"unknown config key {key!r}")
        if getattr(args, key) in (None, False):
            if isinstance(value, list):
                value = ",".join(str(v) for v in value)
            setattr(args, key, value)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


COMMANDS = {"find": cmd_find, "number": cmd_number, "family": cmd_family, "dilations": cmd_dilations, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        _apply_config(args)
        if args.command == "render":
            doc = WitnessDocument.from_json(Path(args.document).read_text())
            window = tuple(float(v) for v in args.window.split(",")) if args.window else None
            _emit(render_svg(doc, window, args.samples), args.out)
            return EXIT_OK
        doc = COMMANDS[args.command](args)
    except BudgetExhausted as exc:
        log.error("budget exhausted: %s", exc)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        log.error("input error: %s", exc)
        return EXIT_INPUT
    except GallaiError as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        return EXIT_INPUT
    _emit(doc.to_json(), args.out)
    if doc.kind == "threshold" and doc.result["status"] != "resolved":
        log.warning("unresolved up to side %s", doc.result["value"])
        return EXIT_BUDGET if doc.verified else EXIT_VERIFY
    if doc.kind == "witness" and doc.result is None:
        log.warning("no monochromatic copy within the grid")
        return EXIT_BUDGET
    return EXIT_OK if doc.verified else EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
