"""
Many disjoint monochromatic copies
==================================

Copies found on cosets whose offsets are pairwise non-congruent modulo the
lattice spanned by the differences of S can never share a point. Fifty of
them under the checkerboard, then the same on the line.
"""

import time

from gallai import PROOF_FAITHFUL, LinearFloorMod, build_family, checkerboard, difference_lattice, make_pointset, verify_family

tri = make_pointset([[0, 0], [1, 0], [0, 1]])
chi = checkerboard()

t0 = time.perf_counter()
fam = build_family(chi, tri, 50)
print(f"{len(fam)} copies in {time.perf_counter() - t0:.2f}s")
for entry in verify_family(chi, tri, fam).entries:
    print(f"  {entry.check:14s} {entry.ok}  {entry.detail}")

# The slower mode shares one scale and offset across every member
shared = build_family(chi, tri, 4, mode=PROOF_FAITHFUL)
print("shared (a0, w0):", shared.shared)

# Congruence, not the raw difference relation, is what separates offsets
L = difference_lattice(make_pointset([[0, 0], [2, 0], [0, 3]]))
print("difference lattice basis:", L.basis)

# On the line: S = {0, 1, 3} under floor(x) mod 3
line = make_pointset([[0], [1], [3]])
chi3 = LinearFloorMod([1], 3)
fam = build_family(chi3, line, 20)
print("line family ok:", verify_family(chi3, line, fam).ok)
print("first copies:", [[str(p[0]) for p in m.points] for m in fam.members[:4]])
