"""Monochromatic homothetic copies in finite colored grids.

``find_copy`` is the fast vectorised search, ``certify_avoiding`` is a
deliberately naive enumerator kept as its independent oracle, and
``gallai_number`` computes grid-side thresholds by backtracking over
colorings.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, InputError
from .geometry import PointSet
from .report import Check, VerificationReport


@dataclass(frozen=True)
class GridColoring:
    """Dense coloring of {0..N_1-1} x ... x {0..N_n-1}; axis i is coordinate i."""

    cells: np.ndarray
    colors: int

    def __post_init__(self):
        cells = np.array(self.cells, dtype=np.int64)
        if cells.ndim == 0 or cells.size == 0:
            raise InputError("grid must be nonempty")
        if cells.min() < 0 or cells.max() >= self.colors:
            raise InputError(f"grid colors must lie in range({self.colors})")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)

    @property
    def dim(self) -> int:
        return self.cells.ndim

    @property
    def shape(self) -> tuple[int, ...]:
        return self.cells.shape

    @property
    def side(self) -> int:
        if len(set(self.shape)) != 1:
            raise InputError(f"grid of shape {self.shape} is not a cube")
        return self.shape[0]

    def __getitem__(self, idx) -> int:
        return int(self.cells[tuple(idx)])

    def __eq__(self, other):
        if not isinstance(other, GridColoring):
            return NotImplemented
        return self.colors == other.colors and np.array_equal(self.cells, other.cells)

    def __hash__(self):
        return hash((self.colors, self.cells.shape, self.cells.tobytes()))

    @classmethod
    def from_coloring(cls, coloring, shape: Sequence[int]) -> GridColoring:
        cells = np.empty(tuple(shape), dtype=np.int64)
        for idx in itertools.product(*(range(n) for n in shape)):
            cells[idx] = coloring(idx)
        return cls(cells, coloring.colors)


@dataclass(frozen=True)
class LatticeWitness:
    translate: tuple[int, ...]
    scale: int
    color: int
    points: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ThresholdResult:
    """``resolved`` with ``value`` = N, or unresolved with ``value`` = searched bound.

    The certificate is an avoiding coloring of side N-1 (resolved, None when
    N == 1) or of side ``value`` (unresolved).
    """

    resolved: bool
    value: int
    certificate: GridColoring | None = field(default=None)


def _integer_offsets(S: PointSet) -> list[tuple[int, ...]]:
    if not S.is_integral():
        raise InputError("lattice search needs integer coordinates")
    return [p.as_ints() for p in S.points]


def find_copy(g: GridColoring, S: PointSet, b_max: int) -> LatticeWitness | None:
    """The monochromatic copy a + b*S minimising (b, a), or None."""
    if S.dim != g.dim:
        raise DimensionMismatch(f"S has dimension {S.dim}, grid has {g.dim}")
    if b_max < 1:
        raise InputError("b_max must be at least 1")
    base = _integer_offsets(S)
    cells = g.cells
    shape = cells.shape
    for b in range(1, b_max + 1):
        offs = [tuple(b * x for x in s) for s in base]
        lo = [-min(o[i] for o in offs) for i in range(g.dim)]
        hi = [shape[i] - 1 - max(o[i] for o in offs) for i in range(g.dim)]
        if any(l > h for l, h in zip(lo, hi)):
            # extents only grow with b
            break
        views = [cells[tuple(slice(l + o[i], h + o[i] + 1) for i, (l, h) in enumerate(zip(lo, hi)))] for o in offs]
        mask = np.ones(views[0].shape, dtype=bool)
        for v in views[1:]:
            mask &= v == views[0]
        hits = np.flatnonzero(mask)
        if hits.size:
            rel = np.unravel_index(hits[0], mask.shape)
            a = tuple(int(l + r) for l, r in zip(lo, rel))
            points = tuple(tuple(ai + oi for ai, oi in zip(a, o)) for o in offs)
            return LatticeWitness(a, b, int(cells[points[0]]), points)
    return None


def certify_avoiding(g: GridColoring, S: PointSet) -> bool:
    """True iff no monochromatic copy of S fits in g (plain enumeration)."""
    if S.dim != g.dim:
        raise DimensionMismatch(f"S has dimension {S.dim}, grid has {g.dim}")
    base = _integer_offsets(S)
    shape = g.shape
    reach = [max(abs(s[i]) for s in base) for i in range(g.dim)]
    for b in range(1, max(shape) + 1):
        ranges = [range(-b * reach[i], shape[i]) for i in range(g.dim)]
        for a in itertools.product(*ranges):
            pts = [tuple(a[i] + b * s[i] for i in range(g.dim)) for s in base]
            if not all(0 <= p[i] < shape[i] for p in pts for i in range(g.dim)):
                continue
            first = g[pts[0]]
            if all(g[p] == first for p in pts):
                return False
    return True


def verify_lattice_witness(g: GridColoring, S: PointSet, w: LatticeWitness) -> VerificationReport:
    """Recompute a + b*S and the colors of its cells from scratch."""
    entries = []
    expected = tuple(tuple(ai + w.scale * si for ai, si in zip(w.translate, s)) for s in _integer_offsets(S))
    entries.append(Check("homothetic", w.scale >= 1 and expected == w.points, f"points = {w.translate} + {w.scale}*S"))
    inside = all(len(p) == g.dim and all(0 <= x < n for x, n in zip(p, g.shape)) for p in w.points)
    entries.append(Check("inside", inside, f"all points inside grid of shape {g.shape}"))
    if inside:
        colors = {g[p] for p in w.points}
        entries.append(Check("monochromatic", colors == {w.color}, f"colors {sorted(colors)}, recorded {w.color}"))
    return VerificationReport(tuple(entries))


# -- threshold search ----------------------------------------------------------


def _copies_by_last_cell(S: PointSet, side: int) -> list[list[tuple[int, ...]]]:
    """For each flat cell, the copies whose row-major-last cell it is.

    Each copy is stored as the tuple of its other cells.
    """
    dim = S.dim
    base = _integer_offsets(S)
    shape = (side,) * dim
    table: list[list[tuple[int, ...]]] = [[] for _ in range(side**dim)]
    for b in range(1, max(side, 1) + 1):
        offs = [tuple(b * x for x in s) for s in base]
        lo = [-min(o[i] for o in offs) for i in range(dim)]
        hi = [side - 1 - max(o[i] for o in offs) for i in range(dim)]
        if any(l > h for l, h in zip(lo, hi)):
            break
        for a in itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi))):
            flat = sorted(int(np.ravel_multi_index(tuple(ai + oi for ai, oi in zip(a, o)), shape)) for o in offs)
            table[flat[-1]].append(tuple(flat[:-1]))
    return table


def _conflict(colors: list[int], copies: list[tuple[int, ...]], col: int) -> bool:
    for others in copies:
        for j in others:
            if colors[j] != col:
                break
        else:
            return True
    return False


def _search_subtree(
    table: list[list[tuple[int, ...]]], c: int, prefix: tuple[int, ...], canonical: bool
) -> tuple[int, ...] | None:
    """Lexicographically first avoiding completion of ``prefix``, or None.

    Cell 0 is pinned to color 0. With ``canonical`` each cell may use at most
    one color beyond those already used (color-permutation symmetry).
    """
    n = len(table)
    start = len(prefix)
    colors = list(prefix) + [-1] * (n - start)
    if start == n:
        return tuple(colors)
    top = [0] * (n + 1)  # top[i] = number of distinct colors used in cells < i
    for i, col in enumerate(prefix):
        top[i + 1] = max(top[i], col + 1)
    pos = start
    while True:
        col = colors[pos] + 1
        limit = 1 if pos == 0 else (min(c, top[pos] + 1) if canonical else c)
        while col < limit and _conflict(colors, table[pos], col):
            col += 1
        if col >= limit:
            colors[pos] = -1
            pos -= 1
            if pos < start:
                return None
            continue
        colors[pos] = col
        top[pos + 1] = max(top[pos], col + 1)
        pos += 1
        if pos == n:
            return tuple(colors)


def _prefixes(table, c: int, depth: int, canonical: bool) -> list[tuple[int, ...]]:
    """Conflict-free prefixes of the given depth in lexicographic order."""
    out: list[tuple[int, ...]] = [()]
    for pos in range(depth):
        nxt = []
        for pre in out:
            used = max(pre, default=-1) + 1
            limit = 1 if pos == 0 else (min(c, used + 1) if canonical else c)
            colors = list(pre) + [-1] * (len(table) - pos)
            for col in range(limit):
                if not _conflict(colors, table[pos], col):
                    nxt.append(pre + (col,))
        out = nxt
    return out


def _subtree_task(args):
    return _search_subtree(*args)


def avoiding_coloring(
    S: PointSet, c: int, side: int, workers: int = 1, canonical: bool = False
) -> GridColoring | None:
    """Lexicographically least c-coloring of side ``side`` avoiding S (cell 0 = 0)."""
    table = _copies_by_last_cell(S, side)
    n = len(table)
    if workers <= 1:
        found = _search_subtree(table, c, (), canonical)
    else:
        depth = 0
        while depth < n and c**depth < 8 * workers:
            depth += 1
        tasks = [(table, c, pre, canonical) for pre in _prefixes(table, c, depth, canonical)]
        found = None
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map preserves task order, and tasks are in lexicographic order,
            # so the first hit is the global lexicographic minimum
            for res in pool.map(_subtree_task, tasks):
                if res is not None:
                    found = res
                    break
    if found is None:
        return None
    return GridColoring(np.array(found, dtype=np.int64).reshape((side,) * S.dim), c)


def gallai_number(
    S: PointSet, c: int, n_max: int, workers: int = 1, canonical: bool = False
) -> ThresholdResult:
    """Least side N <= n_max forcing a monochromatic copy of S in every c-coloring."""
    if c < 1 or n_max < 1:
        raise InputError("need c >= 1 and n_max >= 1")
    _integer_offsets(S)
    previous: GridColoring | None = None
    for side in range(1, n_max + 1):
        cert = avoiding_coloring(S, c, side, workers=workers, canonical=canonical)
        if cert is None:
            return ThresholdResult(True, side, previous)
        previous = cert
    return ThresholdResult(False, n_max, previous)
