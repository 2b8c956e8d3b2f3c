"""
Many paving q-matroids from one spread
======================================

Any set of 2-spaces in F_2^4 that pairwise meet only in 0 is a valid set of
rank-1 non-bases.  A spread has 5 such planes, so its 2^5 subsets give 32
different q-matroids of rank 2.
"""

import itertools

from qmatroids import load_fixture, paving_from_collection
from qmatroids.bounds import lower_bound_N
from qmatroids.cdc import lifted_mrd, min_subspace_distance_cdc

spread = load_fixture("spread_f2_4.json")
print("spread size", len(spread), "| min distance", min_subspace_distance_cdc(spread))

tables = {paving_from_collection(sub, 2, 2, 4)
          for r in range(len(spread) + 1)
          for sub in itertools.combinations(spread.codewords, r)}
print("distinct pavings", len(tables), "| counting bound", 2 ** lower_bound_N(4, 2, 2))

# lifted Gabidulin codes grow fast: q^((n-k)(k-d/2+1)) codewords
for q, n, k in [(2, 6, 3), (2, 8, 4), (3, 8, 4)]:
    code = lifted_mrd(q, n, k, 4)
    print(f"lifted MRD q={q} n={n} k={k} d=4: {len(code)} codewords")
