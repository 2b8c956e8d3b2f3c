"""Regenerate the pinned fixtures under src/qmatroids/fixtures.

Run once; the output is committed and the tests compare against it, so a
change in any of these values shows up as a regression.
"""

from pathlib import Path

from qmatroids import bounds
from qmatroids.cdc import ConstantDimensionCode, greedy_partial_spread
from qmatroids.codes import GeneratorMatrix
from qmatroids.field import field_make, primitive_element
from qmatroids.io import FORMAT_TAG, dumps
from qmatroids.lattice import subspace_from_rows
from qmatroids.qmatroid import paving_from_collection, uniform

OUT = Path(__file__).resolve().parent.parent / "src" / "qmatroids" / "fixtures"


def write(name, obj):
    (OUT / name).write_text(dumps(obj), encoding="utf-8")
    print("wrote", name)


a = subspace_from_rows([[1, 0, 0, 0], [0, 1, 0, 0]], q=2, n=4)
b = subspace_from_rows([[0, 0, 1, 0], [0, 0, 0, 1]], q=2, n=4)
write("two_planes_code.json", ConstantDimensionCode.from_subspaces([a, b]))
write("two_planes_paving.json", paving_from_collection([a, b], 2))

f16 = field_make(2, 4)
alpha = primitive_element(f16).value
write("two_planes_generator.json",
      GeneratorMatrix(2, 4, [[1, alpha, 0, 0], [0, 0, 1, f16.pow(alpha, 2)]], 4))

write("uniform_2_4.json", uniform(2, 4, 2))
write("spread_f2_4.json", ConstantDimensionCode.from_subspaces(greedy_partial_spread(2, 4, 2)))

crossings = {}
for q in (2, 3):
    for printed in (False, True):
        rows = bounds.asymptotic_table(q, 4, 40, printed=printed)
        crossings[f"q{q}_{'printed' if printed else 'corrected'}"] = bounds.crossover(rows)
write("bounds_crossover.json", {
    "format": FORMAT_TAG, "type": "crossover", "n_from": 4, "n_to": 40, "n0": crossings,
    "upper_R_all_10_2_printed": bounds._fixed(bounds.upper_bound_R_all(10, 2, printed=True).log2, 12),
})
