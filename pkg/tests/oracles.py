"""Independent brute-force oracles.

Written without reusing the library's search code so that agreement is
meaningful.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def has_mono_copy(cells: dict, S: list[tuple[int, ...]]) -> bool:
    """Pair-anchored enumeration: fix the image P of S[0] and Q of S[1], derive b.

    ``cells`` maps integer points to colors; S[0] must be the origin.
    """
    if len(S) == 1:
        return bool(cells)
    y1 = S[1]
    i = next(i for i, x in enumerate(y1) if x)
    for P in cells:
        for Q in cells:
            diff = [q - p for p, q in zip(P, Q)]
            if diff[i] % y1[i] or diff[i] // y1[i] < 1:
                continue
            b = diff[i] // y1[i]
            if any(d != b * y for d, y in zip(diff, y1)):
                continue
            pts = [tuple(p + b * s for p, s in zip(P, sv)) for sv in S]
            if all(pt in cells for pt in pts) and len({cells[pt] for pt in pts}) == 1:
                return True
    return False


def grid_dict(cells_flat, shape) -> dict:
    idx = itertools.product(*(range(n) for n in shape))
    return dict(zip(idx, cells_flat))


def threshold_by_enumeration(S, c: int, side: int) -> bool:
    """True iff every c-coloring of the side^dim grid has a monochromatic copy."""
    dim = len(S[0])
    shape = (side,) * dim
    n = side**dim
    for flat in itertools.product(range(c), repeat=n):
        if not has_mono_copy(grid_dict(flat, shape), S):
            return False
    return True


def all_aps_monochromatic(colors: str) -> bool:
    """Does a string coloring contain a monochromatic 3-term progression?"""
    n = len(colors)
    for a, b, c in itertools.combinations(range(n), 3):
        if b - a == c - b and colors[a] == colors[b] == colors[c]:
            return True
    return False


def member_by_enumeration(gens: list[tuple[Fraction, ...]], v: tuple[Fraction, ...], bound: int = 5) -> bool:
    """Is v an integer combination of gens with coefficients in [-bound, bound]?"""
    dim = len(v)
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=len(gens)):
        if all(sum(c * g[i] for c, g in zip(coeffs, gens)) == v[i] for i in range(dim)):
            return True
    return False
