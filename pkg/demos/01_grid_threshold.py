"""
Colored grids and the least forcing side
========================================

Two colors on 0..n-1: how long must the interval be before some
progression x, x+b, x+2b is forced to be monochromatic?
"""

import numpy as np

from gallai import GridColoring, certify_avoiding, find_copy, gallai_number, make_pointset

ap3 = make_pointset([[0], [1], [2]])

# A hand-made coloring with no monochromatic 3-term progression
rrbb = GridColoring(np.array([0, 0, 1, 1, 0, 0, 1, 1]), 2)
print("RRBBRRBB avoids it:", certify_avoiding(rrbb, ap3))

# Grow it by one cell and a copy appears whatever the color
for extra in (0, 1):
    g = GridColoring(np.append(rrbb.cells, extra), 2)
    w = find_copy(g, ap3, 9)
    print(f"append {extra}: copy at {w.points} in color {w.color}")

# The search proves 9 is the least such side, and keeps the side-8 certificate
res = gallai_number(ap3, 2, 12)
print("least side:", res.value, "certificate:", res.certificate.cells.tolist())

# Pairs are plain pigeonhole: c colors need c + 1 cells
pair = make_pointset([[0], [1]])
print([gallai_number(pair, c, 10).value for c in range(1, 5)])

# Worker count changes nothing but wall time
assert gallai_number(ap3, 2, 12, workers=4) == res
