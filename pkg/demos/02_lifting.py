"""
Pulling a plane coloring back to the integer lattice
=====================================================

The right triangle S = {(0,0), (1,0), (0,1)} is the image of the standard
simplex under a linear map T. A coloring of the plane therefore induces a
coloring of each coset of the integer lattice, and a monochromatic corner
there maps to a monochromatic copy of S.
"""

from fractions import Fraction

from gallai import CosetIndex, apply_T, build_matrix, checkerboard, coset_search, make_pointset, realize_copy

chi = checkerboard()  # (floor(x) + floor(y)) mod 2

# For the equilateral triangle T is not the identity
eq = make_pointset([[0, 0], [1, 0], ["1/2", "1/2√3"]])
A = build_matrix(eq)
print("columns of T:", [[str(x) for x in row] for row in A.rows])
print("T(0, 2) =", apply_T(A, [0, 2]))

# Search a few cosets e + Z^2 of the plane
tri = make_pointset([[0, 0], [1, 0], [0, 1]])
A = build_matrix(tri)
for e in ([0, 0], [Fraction(1, 2), 0], [Fraction(1, 3), Fraction(3, 4)]):
    w = coset_search(chi, A, CosetIndex.from_fractions(e), a_max=6, d_max=2)
    pts, h = realize_copy(A, w, tri)
    print(f"coset {[str(x) for x in e]}: scale {w.a}, offset {w.w}, color {w.color}")
    print("   copy:", [str(p) for p in pts])
    # the copy really is monochromatic in the plane
    assert {chi(p) for p in pts} == {w.color}
