"""Points, point sets and homotheties with exact coordinates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, EmptySet, ZeroScale
from .scalar import QuadScalar, ScalarLike, common_radicand, qs


class Point:
    """An immutable point of E^k with QuadScalar coordinates.

    Supports vector addition/subtraction and scalar multiplication. Ordering
    is lexicographic over coordinates.
    """

    __slots__ = ("coords", "_hash")

    def __init__(self, coords: Iterable[ScalarLike | str]):
        cs = tuple(qs(c) for c in coords)
        if not cs:
            raise DimensionMismatch("points need at least one coordinate")
        common_radicand(cs)
        object.__setattr__(self, "coords", cs)
        object.__setattr__(self, "_hash", hash(cs))

    @classmethod
    def _raw(cls, coords: tuple[QuadScalar, ...]) -> Point:
        p = object.__new__(cls)
        object.__setattr__(p, "coords", coords)
        object.__setattr__(p, "_hash", hash(coords))
        return p

    @classmethod
    def origin(cls, dim: int) -> Point:
        return cls([0] * dim)

    def __setattr__(self, name, value):
        raise AttributeError("Point is immutable")

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def radicand(self) -> int:
        return common_radicand(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: Point) -> None:
        if len(other.coords) != len(self.coords):
            raise DimensionMismatch(f"dimension {self.dim} vs {other.dim}")

    def __add__(self, other: Point) -> Point:
        self._check(other)
        return Point._raw(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Point) -> Point:
        self._check(other)
        return Point._raw(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Point:
        return Point._raw(tuple(-a for a in self.coords))

    def __mul__(self, scalar: ScalarLike) -> Point:
        s = qs(scalar)
        return Point._raw(tuple(s * a for a in self.coords))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return self._hash

    def __lt__(self, other: Point) -> bool:
        self._check(other)
        for a, b in zip(self.coords, other.coords):
            if a != b:
                return a < b
        return False

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_integral(self) -> bool:
        return all(c.is_integer() for c in self.coords)

    def as_ints(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.coords)

    def __repr__(self) -> str:
        return "Point(" + ", ".join(str(c) for c in self.coords) + ")"

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def as_point(p: Point | Iterable[ScalarLike]) -> Point:
    return p if isinstance(p, Point) else Point(p)


@dataclass(frozen=True)
class PointSet:
    """A finite configuration, canonically translated so the first point is 0."""

    points: tuple[Point, ...]

    @property
    def dim(self) -> int:
        return self.points[0].dim

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i) -> Point:
        return self.points[i]

    @property
    def nonzero(self) -> tuple[Point, ...]:
        """The points y_1..y_{n-1} after the origin."""
        return self.points[1:]

    @property
    def radicand(self) -> int:
        return common_radicand(c for p in self.points for c in p.coords)

    def is_integral(self) -> bool:
        return all(p.is_integral() for p in self.points)

    def is_rational(self) -> bool:
        return all(c.is_rational for p in self.points for c in p.coords)

    def as_set(self) -> frozenset[Point]:
        return frozenset(self.points)


def make_pointset(raw_points: Sequence[Point | Iterable[ScalarLike]]) -> PointSet:
    """Deduplicate and translate the lexicographic minimum to the origin.

    The minimum moves to the front; the other points keep their input order,
    so the result is a deterministic function of the input sequence.
    """
    if not raw_points:
        raise EmptySet("point set is empty")
    pts = list(dict.fromkeys(as_point(p) for p in raw_points))
    dim = pts[0].dim
    for p in pts:
        if p.dim != dim:
            raise DimensionMismatch("points of differing dimension")
    common_radicand(c for p in pts for c in p.coords)
    base = min(pts)
    pts.remove(base)
    return PointSet(tuple(p - base for p in [base, *pts]))


@dataclass(frozen=True)
class Homothety:
    """x -> translate + scale * x with a positive scale."""

    scale: QuadScalar
    translate: Point

    def __post_init__(self):
        object.__setattr__(self, "scale", qs(self.scale))
        object.__setattr__(self, "translate", as_point(self.translate))
        if not self.scale:
            raise ZeroScale("homothety scale must be nonzero")
        if self.scale.sign() < 0:
            raise ZeroScale("homothety scale must be positive")

    def __call__(self, p: Point) -> Point:
        return self.translate + p * self.scale


def apply_homothety(h: Homothety, S: PointSet) -> tuple[Point, ...]:
    """Image of S under h, in the order of S's points.

    Returned as a tuple rather than a canonical PointSet so that the image
    keeps its absolute position.
    """
    if h.translate.dim != S.dim:
        raise DimensionMismatch(f"translate has dim {h.translate.dim}, S has dim {S.dim}")
    return tuple(h(p) for p in S.points)


# -- exact linear algebra over Q(sqrt d) ---------------------------------------


def row_echelon(rows: Sequence[Sequence[QuadScalar]]) -> tuple[list[list[QuadScalar]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[QuadScalar]]) -> int:
    return len(row_echelon(rows)[1])


def affine_dimension(S: PointSet) -> int:
    """Dimension of the affine span of S."""
    ys = [list(p.coords) for p in S.nonzero]
    return rank(ys) if ys else 0
