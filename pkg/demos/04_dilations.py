"""
Families at distinct dilation factors
=====================================

Building each family on cosets of (sqrt(m) Z)^k for a different squarefree m
makes every dilation factor a rational multiple of a different square root,
so no two families can share one. Comparison is exact.
"""

from gallai import ConstantColoring, checkerboard, factor_equal, make_pointset, multi_dilation_family, verify_family

tri = make_pointset([[0, 0], [1, 0], [0, 1]])

M = multi_dilation_family(ConstantColoring(), tri, [1, 2, 3, 5, 7], k_per=10)
print(f"{len(M.families)} families, {len(M)} copies")
print("factors:", [str(f) for f in M.factors])
assert not any(factor_equal(f, g) for i, f in enumerate(M.factors) for g in M.factors[i + 1 :])

# Under the checkerboard the per-family scale grows, the radicand keeps them apart
chi = checkerboard()
M = multi_dilation_family(chi, tri, [1, 2, 3], k_per=3)
for pitch, fam in M.families:
    m0 = fam.members[0]
    print(f"pitch {pitch}: factor {m0.homothety.scale}, verified {verify_family(chi, tri, fam).ok}")
    print("   first copy:", [str(p) for p in m0.points])
