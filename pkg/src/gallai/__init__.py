"""Exact search for monochromatic homothetic copies of finite point sets.

Colored lattices are searched directly; Euclidean colorings are pulled back
to cosets of a scaled integer lattice, which yields arbitrarily large
pairwise-disjoint families and families at distinct dilation factors.
"""

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
from .dilation import DilationFactor, MultiFamily, factor_equal, multi_dilation_family
from .disjoint import (
    DIRECT,
    PROOF_FAITHFUL,
    Budget,
    CopyFamily,
    DifferenceLattice,
    FamilyMember,
    build_family,
    difference_lattice,
    difference_set,
    hermite_normal_form,
    in_Y,
    lattice_member,
    verify_family,
)
from .errors import *  # noqa: F401,F403
from .geometry import Homothety, Point, PointSet, affine_dimension, apply_homothety, make_pointset
from .lattice import (
    GridColoring,
    LatticeWitness,
    ThresholdResult,
    certify_avoiding,
    find_copy,
    gallai_number,
    verify_lattice_witness,
)
from .lifting import (
    CosetIndex,
    CosetWitness,
    EmbeddingMatrix,
    apply_T,
    build_matrix,
    coset_search,
    preimage,
    pullback_color,
    realize_copy,
    simplex_U,
)
from .report import Check, VerificationReport
from .scalar import QuadScalar, Rational, is_squarefree, qs

__version__ = "0.1.0"
