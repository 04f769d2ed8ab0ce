"""Finite colorings of E^k that can be evaluated exactly.

Every coloring is a pure callable ``point -> int`` with values in
``range(colors)``. Points may be :class:`~gallai.geometry.Point` objects or any
sequence of scalars.
"""

from __future__ import annotations

import hashlib
import math
from typing import Any, Sequence

import numpy as np

from . import expr
from .errors import InexactEvaluation, InputError
from .scalar import QuadScalar, qs


def _coords(point) -> tuple[QuadScalar, ...]:
    coords = getattr(point, "coords", None)
    if coords is not None:
        return coords
    return tuple(qs(c) for c in point)


class Coloring:
    kind: str = ""
    colors: int = 1

    def __call__(self, point) -> int:
        return self.color(_coords(point))

    def color(self, coords: Sequence[QuadScalar]) -> int:
        raise NotImplementedError

    def spec(self) -> dict[str, Any]:
        """JSON-compatible description, inverse of :func:`coloring_from_spec`."""
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Coloring) and self.spec() == other.spec()

    def __hash__(self):
        return hash(repr(self.spec()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.spec()})"


class ConstantColoring(Coloring):
    kind = "constant"

    def __init__(self, color: int = 0, colors: int = 1):
        if not 0 <= color < colors:
            raise InputError(f"color {color} outside range({colors})")
        self.value = color
        self.colors = colors

    def color(self, coords):
        return self.value

    def spec(self):
        return {"kind": self.kind, "color": self.value, "colors": self.colors}


class PeriodicTile(Coloring):
    """chi(x) = tile[floor(x_1) mod p_1, ..., floor(x_k) mod p_k].

    Also used for grid images, which are extended periodically so that the
    coloring stays total.
    """

    def __init__(self, tile, colors: int | None = None, kind: str = "periodic-tile"):
        tile = np.asarray(tile, dtype=np.int64)
        if tile.ndim == 0 or tile.size == 0:
            raise InputError("tile must be a nonempty array")
        if tile.min() < 0:
            raise InputError("tile colors must be nonnegative")
        self.tile = tile
        self.tile.setflags(write=False)
        self.colors = int(tile.max()) + 1 if colors is None else colors
        if tile.max() >= self.colors:
            raise InputError(f"tile uses color {tile.max()} but only {self.colors} colors declared")
        self.kind = kind

    def color(self, coords):
        if len(coords) != self.tile.ndim:
            raise InputError(f"tile is {self.tile.ndim}-dimensional, point is {len(coords)}-dimensional")
        idx = tuple(math.floor(c) % p for c, p in zip(coords, self.tile.shape))
        return int(self.tile[idx])

    def spec(self):
        return {"kind": self.kind, "tile": self.tile.tolist(), "colors": self.colors}


class LinearFloorMod(Coloring):
    """chi(x) = (sum_i w_i * floor(x_i) + offset) mod colors."""

    kind = "linear-floor-mod"

    def __init__(self, weights: Sequence[int], colors: int, offset: int = 0):
        self.weights = tuple(int(w) for w in weights)
        self.offset = int(offset)
        self.colors = colors

    def color(self, coords):
        if len(coords) != len(self.weights):
            raise InputError(f"{len(self.weights)} weights for a {len(coords)}-dimensional point")
        s = self.offset + sum(w * math.floor(c) for w, c in zip(self.weights, coords))
        return s % self.colors

    def spec(self):
        return {"kind": self.kind, "weights": list(self.weights), "offset": self.offset, "colors": self.colors}


def checkerboard(dim: int = 2) -> LinearFloorMod:
    return LinearFloorMod([1] * dim, colors=2)


class ExpressionColoring(Coloring):
    """A coloring given by an expression; the value is reduced mod ``colors``."""

    kind = "expression"

    def __init__(self, text: str, colors: int | None = None):
        self.text = text
        self.tree = expr.parse(text)
        if colors is None:
            colors = expr.top_level_modulus(self.tree)
            if colors is None:
                raise InputError("cannot infer the color count; pass colors explicitly")
        self.colors = colors
        self._fn = expr.compile_expr(self.tree)

    def value(self, coords) -> QuadScalar:
        return self._fn(coords)

    def color(self, coords):
        v = self._fn(coords)
        if not v.is_integer():
            raise InexactEvaluation(f"expression {self.text!r} gave non-integer {v}")
        return int(v) % self.colors

    def spec(self):
        return {"kind": self.kind, "text": self.text, "colors": self.colors}

    def __getstate__(self):
        return {"text": self.text, "colors": self.colors}

    def __setstate__(self, state):
        self.__init__(state["text"], state["colors"])


class SeededRandom(Coloring):
    """Keyed hash of integer coordinates; undefined off the integer lattice."""

    kind = "seeded-random"

    def __init__(self, seed: int, colors: int = 2):
        self.seed = int(seed)
        self.colors = colors
        self._key = self.seed.to_bytes(16, "little", signed=True)

    def color(self, coords):
        if not all(c.is_integer() for c in coords):
            raise InexactEvaluation("seeded-random colorings are defined on integer points only")
        msg = ",".join(str(int(c)) for c in coords).encode()
        h = hashlib.blake2b(msg, key=self._key, digest_size=8).digest()
        return int.from_bytes(h, "little") % self.colors

    def spec(self):
        return {"kind": self.kind, "seed": self.seed, "colors": self.colors}


def coloring_from_spec(spec: dict[str, Any]) -> Coloring:
    kind = spec.get("kind")
    if kind == "constant":
        return ConstantColoring(spec.get("color", 0), spec["colors"])
    if kind in ("periodic-tile", "grid-image"):
        return PeriodicTile(spec["tile"], spec.get("colors"), kind=kind)
    if kind == "linear-floor-mod":
        return LinearFloorMod(spec["weights"], spec["colors"], spec.get("offset", 0))
    if kind == "expression":
        return ExpressionColoring(spec["text"], spec.get("colors"))
    if kind == "seeded-random":
        return SeededRandom(spec["seed"], spec["colors"])
    raise InputError(f"unknown coloring kind {kind!r}")
