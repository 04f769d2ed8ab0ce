"""Lifting a Euclidean coloring to cosets of a scaled integer lattice.

For S = {0, y_1, ..., y_{n-1}} in E^k the matrix A = [y_1 ... y_{n-1}] gives a
linear map T: E^{n-1} -> E^k sending the simplex U = {0, u_1, ..., u_{n-1}} onto
S. A coloring chi of E^k pulls back to chi' = chi o T, and each coset
e + (rZ)^{n-1} is searched for a monochromatic copy r*a*U + d + e. Its image
under T is the homothetic copy (r*a)*S + T(d + e).

r = 1 covers the plane and line cases; other pitches give families with
prescribed dilation factors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .coloring import Coloring
from .errors import BudgetExhausted, DegenerateConfiguration, DimensionMismatch, InputError
from .geometry import Homothety, Point, PointSet, apply_homothety, rank, row_echelon
from .scalar import QuadScalar, ScalarLike, qs


@dataclass(frozen=True)
class EmbeddingMatrix:
    """k x (n-1) matrix whose columns are the nonzero points of S."""

    columns: tuple[Point, ...]
    k: int

    @property
    def rows(self) -> list[list[QuadScalar]]:
        return [[col[i] for col in self.columns] for i in range(self.k)]

    @property
    def n_minus_1(self) -> int:
        return len(self.columns)


def build_matrix(S: PointSet) -> EmbeddingMatrix:
    if not S.points[0].is_zero():
        raise InputError("S must be canonical (first point at the origin)")
    k = S.dim
    A = EmbeddingMatrix(tuple(S.nonzero), k)
    r = rank(A.rows) if A.columns else 0
    if r < k:
        raise DegenerateConfiguration(f"S spans an affine subspace of dimension {r} < {k}")
    return A


def apply_T(A: EmbeddingMatrix, v: Sequence[ScalarLike]) -> Point:
    """Exact product A @ v."""
    if len(v) != A.n_minus_1:
        raise DimensionMismatch(f"vector of length {len(v)} for a matrix with {A.n_minus_1} columns")
    acc = [qs(0)] * A.k
    for vj, col in zip(v, A.columns):
        vj = qs(vj)
        if vj:
            acc = [a + vj * c for a, c in zip(acc, col.coords)]
    return Point._raw(tuple(acc))


def preimage(A: EmbeddingMatrix, p: Point) -> tuple[QuadScalar, ...]:
    """Some v with T(v) = p (free variables set to zero)."""
    if p.dim != A.k:
        raise DimensionMismatch(f"target has dim {p.dim}, expected {A.k}")
    aug = [row + [p[i]] for i, row in enumerate(A.rows)]
    red, pivots = row_echelon(aug)
    m = A.n_minus_1
    if m in pivots:
        raise DegenerateConfiguration(f"{p} is not in the image of T")
    v = [qs(0)] * m
    for row, c in zip(red, pivots):
        v[c] = row[m]
    return tuple(v)


def simplex_U(m: int) -> tuple[Point, ...]:
    """{0, u_1, ..., u_m} in E^m."""
    pts = [Point([0] * m)]
    for j in range(m):
        pts.append(Point([1 if i == j else 0 for i in range(m)]))
    return tuple(pts)


@dataclass(frozen=True)
class CosetIndex:
    """The coset e + (rZ)^{n-1} with 0 <= e_i < r."""

    e: tuple[QuadScalar, ...]
    r: QuadScalar

    def __post_init__(self):
        r = qs(self.r)
        e = tuple(qs(x) for x in self.e)
        if r.sign() <= 0:
            raise InputError("lattice pitch must be positive")
        for x in e:
            if x.sign() < 0 or (x - r).sign() >= 0:
                raise InputError(f"coset offset {x} outside [0, {r})")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "e", e)

    @classmethod
    def from_fractions(cls, f: Sequence[ScalarLike], r: ScalarLike = 1) -> CosetIndex:
        """The coset with offset e = r * f for f in [0, 1)^{n-1}."""
        r = qs(r)
        return cls(tuple(r * qs(x) for x in f), r)

    @property
    def fractions(self) -> tuple[QuadScalar, ...]:
        return tuple(x / self.r for x in self.e)


@dataclass(frozen=True)
class CosetWitness:
    """Monochromatic r*a*U + d + e inside the coset; d = r*w with w integral."""

    a: int
    w: tuple[int, ...]
    index: CosetIndex
    color: int

    @property
    def d(self) -> tuple[QuadScalar, ...]:
        return tuple(self.index.r * x for x in self.w)

    def simplex_points(self) -> tuple[tuple[QuadScalar, ...], ...]:
        r, e = self.index.r, self.index.e
        base = tuple(r * wi + ei for wi, ei in zip(self.w, e))
        out = [base]
        for j in range(len(base)):
            out.append(tuple(x + r * self.a if i == j else x for i, x in enumerate(base)))
        return tuple(out)


class PullbackColoring(Coloring):
    """z -> chi(T(r*z + e)) on integer vectors z."""

    kind = "pullback"

    def __init__(self, chi: Coloring, A: EmbeddingMatrix, idx: CosetIndex):
        if len(idx.e) != A.n_minus_1:
            raise DimensionMismatch(f"coset offset of length {len(idx.e)}, expected {A.n_minus_1}")
        self.chi, self.A, self.idx = chi, A, idx
        self.colors = chi.colors
        self._origin = apply_T(A, idx.e)
        self._steps = tuple(col * idx.r for col in A.columns)

    def point(self, z: Sequence[int]) -> Point:
        acc = self._origin
        for zj, step in zip(z, self._steps):
            if zj:
                acc = acc + step * zj
        return acc

    def color(self, coords) -> int:
        return self.chi(self.point([int(c) for c in coords]))

    def at(self, z: Sequence[int]) -> int:
        return self.chi(self.point(z))

    def spec(self):
        return {"kind": self.kind, "base": self.chi.spec()}


def pullback_color(chi: Coloring, A: EmbeddingMatrix, idx: CosetIndex) -> PullbackColoring:
    """The lattice coloring of the coset; probes evaluability at 0 and the u_j."""
    pb = PullbackColoring(chi, A, idx)
    for z in simplex_U(A.n_minus_1):
        pb.at(z.as_ints())  # raises InexactEvaluation when chi cannot evaluate there
    return pb


def shells(radius: int, m: int) -> Iterator[tuple[int, ...]]:
    """Integer vectors with sup-norm <= radius, by shell then lexicographically."""
    yield (0,) * m
    for s in range(1, radius + 1):
        for w in itertools.product(range(-s, s + 1), repeat=m):
            if max(abs(x) for x in w) == s:
                yield w


def coset_search(chi: Coloring, A: EmbeddingMatrix, idx: CosetIndex, a_max: int, d_max: int) -> CosetWitness:
    """First (a, d) in (a, shell, lex) order with r*a*U + d + e monochromatic under chi'."""
    if a_max < 1 or d_max < 0:
        raise InputError("budget needs a_max >= 1 and d_max >= 0")
    pb = pullback_color(chi, A, idx)
    m = A.n_minus_1
    cache: dict[tuple[int, ...], int] = {}

    def col(z):
        c = cache.get(z)
        if c is None:
            c = cache[z] = pb.at(z)
        return c

    for a in range(1, a_max + 1):
        for w in shells(d_max, m):
            c0 = col(w)
            if all(col(w[:j] + (w[j] + a,) + w[j + 1 :]) == c0 for j in range(m)):
                return CosetWitness(a, w, idx, c0)
    raise BudgetExhausted(f"no monochromatic simplex with a <= {a_max}, |d/r| <= {d_max} in coset {idx.e}")


def realize_copy(A: EmbeddingMatrix, witness: CosetWitness, S: PointSet) -> tuple[tuple[Point, ...], Homothety]:
    """T(r*a*U + d + e) together with the homothety (r*a, T(d + e)) producing it."""
    r = witness.index.r
    shift = tuple(di + ei for di, ei in zip(witness.d, witness.index.e))
    h = Homothety(r * witness.a, apply_T(A, shift))
    image = apply_homothety(h, S)
    direct = tuple(apply_T(A, v) for v in witness.simplex_points())
    if image != direct:
        raise AssertionError("T(raU + d + e) != (ra)S + T(d + e)")
    return image, h
