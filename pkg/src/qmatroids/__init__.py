"""q-matroids over F_q^n: rank tables, representations, codes, zero patterns, bounds."""

from .errors import (FieldDivisionByZero, InvalidCharacteristic, InvalidCollection,
                     InvalidRankTable, QMatroidError, ShapeError, SizeLimitError)
from .field import FieldElement, FieldSpec, field_make, gf, primitive_element
from .linalg import Matrix, det, kernel_basis, mat_mul, rank, rref, transpose
from .lattice import (LatticeIndex, Subspace, enumerate_grassmannian, gaussian_binomial,
                      intersect, iter_grassmannian, lattice_index, ortho_complement,
                      subspace_distance, subspace_from_rows, subspace_sum)
from .qmatroid import (AxiomReport, RankTable, Structure, check_axioms, derived_structure,
                       dualize, enumerate_qmatroids, paving_from_collection, uniform)
from .codes import (GeneratorMatrix, RankMetricCode, dual_code, is_mrd, min_rank_distance,
                    qmatroid_from_generator, random_generator, rank_weight,
                    search_representation)
from .cdc import (ConstantDimensionCode, cdc_to_paving, gabidulin_code,
                  grassmann_independent_check, greedy_partial_spread, has_min_distance,
                  lifted_mrd, min_subspace_distance_cdc)
from .zeropattern import (DetSystem, ZeroPattern, det_system, evaluate_pattern,
                          pattern_bound_for, pattern_census, pattern_of_qmatroid,
                          sweep_patterns, sweep_representable,
                          zero_pattern_bound, zero_pattern_bound_linear)
from .bounds import (BoundRow, LogValue, asymptotic_table, crossover, lower_bound_N,
                     lower_bound_N_all, qbinom_sandwich, upper_bound_R_all,
                     upper_bound_R_rank1, upper_bound_R_rank_k, upper_bound_R_uniform)
from .io import dumps, from_json, loads, to_json
from .fixtures import load_fixture

__version__ = "0.1.0"
