"""
Zero patterns of the determinant system
=======================================

Each point of F_{q^m}^{kn} is a k x n matrix G; its pattern marks which
k-subspaces U give det(G Y_U^T) = 0.  Nonzero patterns are exactly the
representable q-matroids, so counting patterns bounds representability.
"""

import time

from qmatroids import det_system, pattern_bound_for, pattern_census, sweep_patterns

for n, k, ms in [(2, 1, (1, 2, 3)), (3, 1, (1, 2)), (4, 2, (1, 2))]:
    system = det_system(2, n, k)
    bound = pattern_bound_for(2, n, k)
    for m in ms:
        t0 = time.perf_counter()
        count = len(sweep_patterns(system, m))
        print(f"n={n} k={k} m={m}: {count:4d} patterns (bound {bound}), "
              f"{time.perf_counter() - t0:.2f}s")

# patterns and represented q-matroids agree one to one
print(pattern_census(2, 3, 1, 2))
