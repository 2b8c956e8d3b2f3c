"""
A paving q-matroid and a matrix that represents it
==================================================

Two complementary planes A, B in F_2^4 are declared dependent; every other
2-space is a basis.  A 2 x 4 matrix over F_16 gives the same rank function.
"""

from qmatroids import (derived_structure, field_make, paving_from_collection,
                       primitive_element, qmatroid_from_generator, search_representation,
                       subspace_from_rows)
from qmatroids.codes import GeneratorMatrix

A = subspace_from_rows([[1, 0, 0, 0], [0, 1, 0, 0]], q=2, n=4)
B = subspace_from_rows([[0, 0, 1, 0], [0, 0, 0, 1]], q=2, n=4)
M = paving_from_collection([A, B], 2)

s = derived_structure(M)
print("rank", s.rank, "| bases", len(s.bases), "of 35 | paving", s.is_paving)

# G = [[1, a, 0, 0], [0, 0, 1, a^2]] with a primitive in F_16
F16 = field_make(2, 4)
a = primitive_element(F16)
G = GeneratorMatrix(2, 4, [[1, a.value, 0, 0], [0, 0, 1, (a * a).value]], 4)
print("G represents M:", qmatroid_from_generator(G) == M)

# bounded search finds a representation, the smallest in canonical order
found = search_representation(M, m_max=4)
print("search over F_{2^m}, m <= 4 ->", found.rows, "over F_%d" % found.field.order)
