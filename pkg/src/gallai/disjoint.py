"""Pairwise-disjoint families of monochromatic homothetic copies.

Two copies a0*S + t + p and a0*S + t + q that share (a0, t) can only meet when
q - p = a0*(s - s') for some s, s' in S. Choosing the offsets p pairwise
non-congruent modulo the integer span of the differences of S therefore
rules out every intersection; that span is handled exactly through a Hermite
normal form basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from .coloring import Coloring
from .errors import BudgetExhausted, DimensionMismatch, InputError, MixedRadicand
from .geometry import Homothety, Point, PointSet
from .lifting import (
    CosetIndex,
    CosetWitness,
    EmbeddingMatrix,
    PullbackColoring,
    apply_T,
    build_matrix,
    coset_search,
    realize_copy,
    shells,
)
from .report import Check, VerificationReport
from .scalar import QuadScalar, ScalarLike, qs

PROOF_FAITHFUL = "proof-faithful"
DIRECT = "direct"


# -- the difference set and the literal relation -------------------------------


def difference_set(S: PointSet, literal: bool = False) -> tuple[Point, ...]:
    """Nonzero differences generating the obstruction set.

    By default every ordered pair of distinct points of S contributes, the
    origin included. ``literal=True`` keeps only y_i - y_j with 1 <= i <= j,
    which omits the differences against the origin and is not enough to
    guarantee disjointness; it is kept for comparison only.
    """
    out: list[Point] = []
    seen: set[Point] = set()
    if literal:
        ys = S.nonzero
        pairs = [(ys[i], ys[j]) for i in range(len(ys)) for j in range(i, len(ys))]
    else:
        pairs = [(s, t) for s in S.points for t in S.points if s != t]
    for s, t in pairs:
        delta = s - t
        if not delta.is_zero() and delta not in seen:
            seen.add(delta)
            out.append(delta)
    return tuple(out)


def _integer_multiple(v: Point, delta: Point) -> bool:
    i = next(i for i, x in enumerate(delta.coords) if x)
    try:
        m = v[i] / delta[i]
        return m.is_integer() and delta * m == v
    except MixedRadicand:
        return False


def in_Y(S: PointSet, v: Point | Sequence[ScalarLike], literal: bool = False) -> bool:
    """True iff v = m * delta for an integer m and a difference delta of S."""
    v = v if isinstance(v, Point) else Point(v)
    if v.dim != S.dim:
        raise DimensionMismatch(f"vector of dim {v.dim}, S of dim {S.dim}")
    if v.is_zero():
        return True
    return any(_integer_multiple(v, d) for d in difference_set(S, literal))


# -- Hermite normal form -------------------------------------------------------


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style HNF basis of the integer row span.

    Rows are in echelon form with positive pivots; entries above each pivot
    lie in [0, pivot).
    """
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    ncols = len(A[0])
    r = 0
    for col in range(ncols):
        if r == len(A):
            break
        while True:
            nz = [i for i in range(r, len(A)) if A[i][col]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][col]))
            A[r], A[piv] = A[piv], A[r]
            clean = True
            for i in range(r + 1, len(A)):
                if A[i][col]:
                    q = A[i][col] // A[r][col]
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    clean = clean and A[i][col] == 0
            if clean:
                break
        if r < len(A) and A[r][col]:
            if A[r][col] < 0:
                A[r] = [-x for x in A[r]]
            for i in range(r):
                q = A[i][col] // A[r][col]
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
            r += 1
    return A[:r]


@dataclass(frozen=True)
class DifferenceLattice:
    """Integer span of the differences of S, as scale^{-1} * span(basis).

    Coordinates in Q(sqrt d) are flattened to (rational parts, sqrt-d parts).
    """

    basis: tuple[tuple[int, ...], ...]
    scale: int
    dim: int
    radicand: int

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(row) if x) for row in self.basis)

    def flatten(self, v: Point) -> list[Fraction] | None:
        """Rational coordinates of v, or None if v lies outside the field of S."""
        if v.dim != self.dim:
            raise DimensionMismatch(f"vector of dim {v.dim}, lattice of dim {self.dim}")
        rats = [c.rat for c in v.coords]
        coefs = [c.coef for c in v.coords]
        if any(c.d not in (1, self.radicand) for c in v.coords):
            return None
        if self.radicand == 1:
            return rats
        return rats + coefs

    def reduce(self, flat: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Canonical representative of scale*flat modulo the basis span."""
        x = [Fraction(self.scale) * c for c in flat]
        for row, p in zip(self.basis, self.pivots):
            q = math.floor(x[p] / row[p])
            if q:
                x = [xi - q * ri for xi, ri in zip(x, row)]
        return tuple(x)

    def key(self, v: Point) -> tuple:
        """Equal keys iff the vectors are congruent modulo the lattice."""
        flat = self.flatten(v)
        if flat is None:
            return ("foreign", v)
        return self.reduce(flat)


def difference_lattice(S: PointSet) -> DifferenceLattice:
    if len(S) < 2:
        raise InputError("difference lattice needs at least two points")
    d = S.radicand
    probe = DifferenceLattice((), 1, S.dim, d)
    gens = [probe.flatten(delta) for delta in difference_set(S)]
    scale = 1
    for g in gens:
        for x in g:
            scale = scale * x.denominator // math.gcd(scale, x.denominator)
    ints = [[int(x * scale) for x in g] for g in gens]
    basis = tuple(tuple(r) for r in hermite_normal_form(ints))
    return DifferenceLattice(basis, scale, S.dim, d)


def lattice_member(L: DifferenceLattice, v: Point | Sequence[ScalarLike]) -> bool:
    v = v if isinstance(v, Point) else Point(v)
    flat = L.flatten(v)
    if flat is None:
        return False
    if any((L.scale * x).denominator != 1 for x in flat):
        return False
    return not any(L.reduce(flat))


# -- families ------------------------------------------------------------------


@dataclass(frozen=True)
class Budget:
    a_max: int = 8
    d_max: int = 2
    denom_max: int = 8

    def __post_init__(self):
        if self.a_max < 1 or self.d_max < 0 or self.denom_max < 1:
            raise InputError(f"invalid budget {self}")


@dataclass(frozen=True)
class FamilyMember:
    homothety: Homothety
    color: int
    points: tuple[Point, ...]
    witness: CosetWitness | None = None


@dataclass(frozen=True)
class CopyFamily:
    S: PointSet
    members: tuple[FamilyMember, ...]
    mode: str
    pitch: QuadScalar = field(default_factory=lambda: qs(1))
    shared: tuple[int, tuple[int, ...]] | None = None  # (a0, w0) with d0 = pitch * w0

    def __len__(self) -> int:
        return len(self.members)


def candidate_fractions(m: int, denom_max: int) -> Iterator[tuple[Fraction, ...]]:
    """Vectors f in [0,1)^m by least common denominator, then lexicographically."""
    for q in range(1, denom_max + 1):
        for nums in product(range(q), repeat=m):
            f = tuple(Fraction(n, q) for n in nums)
            lcd = 1
            for x in f:
                lcd = lcd * x.denominator // math.gcd(lcd, x.denominator)
            if lcd == q:
                yield f


def coset_candidates(A: EmbeddingMatrix, L: DifferenceLattice, r: QuadScalar, denom_max: int) -> Iterator[CosetIndex]:
    """Cosets e = r*f whose images T(e) are pairwise non-congruent modulo r*L."""
    seen: set[tuple] = set()
    for f in candidate_fractions(A.n_minus_1, denom_max):
        key = L.key(apply_T(A, f))
        if key not in seen:
            seen.add(key)
            yield CosetIndex.from_fractions(f, r)


def build_family(
    chi: Coloring,
    S: PointSet,
    k: int,
    r: ScalarLike = 1,
    mode: str = DIRECT,
    budget: Budget = Budget(),
) -> CopyFamily:
    """k pairwise-disjoint monochromatic copies of S found on lattice cosets.

    ``proof-faithful`` fixes one (a0, d0) shared by all members, accepting the
    first pair for which k candidate cosets are monochromatic. ``direct``
    searches each coset independently and keeps copies that are disjoint from
    those already accepted.
    """
    if k < 1:
        raise InputError("family size must be at least 1")
    if mode not in (DIRECT, PROOF_FAITHFUL):
        raise InputError(f"unknown mode {mode!r}")
    r = qs(r)
    A = build_matrix(S)
    L = difference_lattice(S)
    cands = coset_candidates(A, L, r, budget.denom_max)
    if mode == DIRECT:
        family = _direct(chi, S, A, k, cands, budget)
    else:
        family = _proof_faithful(chi, S, A, k, list(cands), budget)
    return CopyFamily(S, tuple(family[0]), mode, r, family[1])


def _direct(chi, S, A, k, cands, budget):
    members: list[FamilyMember] = []
    used: set[Point] = set()
    for idx in cands:
        try:
            wit = coset_search(chi, A, idx, budget.a_max, budget.d_max)
        except BudgetExhausted:
            continue
        pts, h = realize_copy(A, wit, S)
        if used.isdisjoint(pts):
            used.update(pts)
            members.append(FamilyMember(h, wit.color, pts, wit))
            if len(members) == k:
                return members, None
    raise BudgetExhausted(f"found {len(members)} of {k} disjoint copies within {budget}")


def _proof_faithful(chi, S, A, k, cands, budget):
    if len(cands) < k:
        raise BudgetExhausted(f"only {len(cands)} non-congruent cosets with denominators <= {budget.denom_max}")
    m = A.n_minus_1
    pullbacks = [PullbackColoring(chi, A, idx) for idx in cands]
    caches: list[dict] = [{} for _ in cands]

    def col(i, z):
        c = caches[i].get(z)
        if c is None:
            c = caches[i][z] = pullbacks[i].at(z)
        return c

    for a in range(1, budget.a_max + 1):
        for w in shells(budget.d_max, m):
            hits = []
            steps = [w[:j] + (w[j] + a,) + w[j + 1 :] for j in range(m)]
            for i, idx in enumerate(cands):
                c0 = col(i, w)
                if all(col(i, z) == c0 for z in steps):
                    hits.append(CosetWitness(a, w, idx, c0))
                    if len(hits) == k:
                        members = []
                        for wit in hits:
                            pts, h = realize_copy(A, wit, S)
                            members.append(FamilyMember(h, wit.color, pts, wit))
                        return members, (a, w)
    raise BudgetExhausted(f"no (a0, d0) within {budget} is shared by {k} monochromatic cosets")


# -- verification --------------------------------------------------------------


def _derive_homothety(S: PointSet, pts: Sequence[Point]) -> tuple[QuadScalar, Point] | None:
    """Recover (scale, translate) with pts = translate + scale*S, or None."""
    if len(pts) != len(S):
        return None
    t = pts[0] - S[0]
    if len(S) == 1:
        return qs(1), t
    y = S[1]
    i = next(i for i, x in enumerate(y.coords) if x)
    try:
        b = (pts[1][i] - t[i]) / y[i]
        ok = b.sign() > 0 and all(p == t + s * b for p, s in zip(pts, S.points))
    except MixedRadicand:
        return None
    return (b, t) if ok else None


def verify_family(chi: Coloring, S: PointSet, members: Sequence[FamilyMember] | CopyFamily) -> VerificationReport:
    """Re-check homothety, monochromaticity and pairwise disjointness from scratch."""
    if isinstance(members, CopyFamily):
        members = members.members
    entries: list[Check] = []
    bad = 0
    for i, mem in enumerate(members):
        derived = _derive_homothety(S, mem.points)
        if derived is None:
            entries.append(Check("homothetic", False, f"member {i} is not a positive homothetic image of S"))
            bad += 1
        elif derived != (mem.homothety.scale, mem.homothety.translate):
            entries.append(Check("homothetic", False, f"member {i} disagrees with its recorded homothety"))
            bad += 1
    if not bad:
        entries.append(Check("homothetic", True, f"{len(members)} members are homothetic images of S"))

    bad = 0
    for i, mem in enumerate(members):
        for p in mem.points:
            c = chi(p)
            if c != mem.color:
                entries.append(Check("monochromatic", False, f"member {i}: point {p} has color {c}, expected {mem.color}"))
                bad += 1
                break
    if not bad:
        entries.append(Check("monochromatic", True, f"{len(members)} members are monochromatic"))

    bad = 0
    owner: dict[Point, int] = {}
    for i, mem in enumerate(members):
        for p in mem.points:
            j = owner.get(p)
            if j is not None and j != i:
                entries.append(Check("disjoint", False, f"members {j} and {i} share point {p}"))
                bad += 1
            else:
                owner[p] = i
    if not bad:
        entries.append(Check("disjoint", True, f"{len(members)} members are pairwise disjoint"))
    return VerificationReport(tuple(entries))
