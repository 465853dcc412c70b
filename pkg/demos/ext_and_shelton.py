"""Ext between cell modules, computed twice.

Once from the hom complex between projective resolutions, once from
Shelton's recursion on parabolic coset representatives.
"""

import time

from arcext.dg import DGAlgebra, ext_table
from arcext.shelton import cross_check

for m, n in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)]:
    t0 = time.monotonic()
    ext = ext_table(DGAlgebra(m, n))
    r = cross_check(m, n, ext)
    print(f"({m},{n}): total dim Ext = {r['total_ext']:4d}, Shelton {r['total_shelton']:4d}, "
          f"{len(r['discrepancies'])} discrepancies  [{time.monotonic() - t0:.1f}s]")

print("\nExt^k(M(lam), M(mu)) for (2,2):")
for (lam, mu, k), d in ext_table(DGAlgebra(2, 2)).items():
    if lam != mu:
        print(f"  {lam} -> {mu}  k={k}  dim {d}")
