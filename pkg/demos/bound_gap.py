"""
Lower bound on all q-matroids against upper bound on representable ones
========================================================================

The lower exponent is an exact integer; the upper one is a 60-digit log2.
Their difference turns positive and keeps growing.
"""

from qmatroids.bounds import asymptotic_table, crossover

for q in (2, 3):
    rows = asymptotic_table(q, 4, 16)
    print(f"q={q}, crossover n0={crossover(asymptotic_table(q, 4, 40))}")
    for r in rows:
        print(f"  n={r.n:2d}  gap={float(r.gap):.6g}")
