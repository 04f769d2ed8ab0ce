"""Families at pairwise-distinct dilation factors.

Each family is built on cosets of (sqrt(m) Z)^{n-1} for a distinct squarefree
m. Its members share the dilation factor a0*sqrt(m); since square roots of
distinct squarefree integers are linearly independent over Q, factors from
different families can never coincide.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .coloring import Coloring
from .disjoint import PROOF_FAITHFUL, Budget, CopyFamily, build_family
from .errors import InputError, NotSquarefree
from .geometry import PointSet
from .scalar import QuadScalar, is_squarefree


@dataclass(frozen=True)
class DilationFactor:
    """The positive real q * sqrt(m), m squarefree."""

    q: Fraction
    m: int

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        if not is_squarefree(self.m):
            raise NotSquarefree(f"{self.m} is not a squarefree positive integer")
        if self.q <= 0:
            raise InputError("dilation factors are positive")

    @property
    def value(self) -> QuadScalar:
        return QuadScalar(0, self.q, self.m)

    @classmethod
    def from_scalar(cls, x: QuadScalar) -> DilationFactor:
        if x.rat and x.coef:
            raise InputError(f"{x} is not a rational multiple of a square root")
        if x.coef:
            return cls(x.coef, x.d)
        return cls(x.rat, 1)

    def __str__(self) -> str:
        if self.m == 1:
            return str(self.q)
        return f"√{self.m}" if self.q == 1 else f"{self.q}√{self.m}"


def factor_equal(f1: DilationFactor, f2: DilationFactor) -> bool:
    return f1.q == f2.q and f1.m == f2.m


@dataclass(frozen=True)
class MultiFamily:
    families: tuple[tuple[DilationFactor, CopyFamily], ...]  # (pitch, family)
    factors: tuple[DilationFactor, ...]

    def __len__(self) -> int:
        return sum(len(f) for _, f in self.families)


def multi_dilation_family(
    chi: Coloring,
    S: PointSet,
    radicands: Sequence[int],
    k_per: int,
    budget: Budget = Budget(),
    workers: int = 1,
) -> MultiFamily:
    """One proof-faithful family per radicand m at pitch sqrt(m)."""
    if not S.is_rational():
        raise InputError("dilation families need a rational configuration")
    if len(set(radicands)) != len(radicands):
        raise InputError("radicands must be pairwise distinct")
    pitches = [DilationFactor(1, m) for m in radicands]

    def one(p: DilationFactor) -> CopyFamily:
        return build_family(chi, S, k_per, p.value, PROOF_FAITHFUL, budget)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            fams = list(pool.map(one, pitches))
    else:
        fams = [one(p) for p in pitches]
    factors = tuple(DilationFactor(fam.shared[0], p.m) for p, fam in zip(pitches, fams))
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if factor_equal(factors[i], factors[j]):
                raise AssertionError(f"dilation factors {factors[i]} and {factors[j]} coincide")
    return MultiFamily(tuple(zip(pitches, fams)), factors)
