"""Symmetric rank-metric codes over finite fields.

Exact constructions, counting, and verification for codes of symmetric
matrices under the rank distance: finite field towers, the symmetric
matrix space, closed-form sphere/ball counting with power-of-q bounds,
symmetric linearized polynomials with the maximum-code constructions,
and budget-guarded packing/covering certificates.
"""

from symrank.errors import BudgetExceeded, ConstructionError
from symrank.gf import (Field, FieldElement, build_base_field, build_extension,
                        enumerate_field, field_from_json, field_to_json,
                        frobenius, trace)
from symrank.matspace import (DEFAULT_AMBIENT_BUDGET, RankProfile, SymMatrix,
                              distance, enumerate_sym, enumerate_sym_range,
                              matrix_from_json, matrix_to_json,
                              puncture_matrix, rank, rank_census, sym_dim)
from symrank.counting import (BoundPair, ExactCount, ExactRatio,
                              QuasiPerfectVerdict, ball2_closed_form,
                              ball_bounds, ball_size, count_to_json,
                              density_upper_bound, is_prime_power,
                              mrd_density_bounds, packing_radius,
                              prime_power_decomposition, quasi_perfect_verdict,
                              ratio_from_json, ratio_to_json, singleton_max_dim,
                              singleton_max_size, sphere_bounds,
                              sphere_packing_max_size, sphere_size)
from symrank.codes import (ALL_CHECKS, DEFAULT_CODEWORD_BUDGET, BoundCheck,
                           CoveringStats, SymCode, VerificationReport,
                           code_from_json, code_to_json, codewords,
                           covering_density, covering_stats, is_mrd,
                           is_perfect, min_distance, random_subcode,
                           verify_covering, verify_packing, verify_report)
from symrank.linpoly import (QPoly, build_punctured_code, build_schmidt_code,
                             enumerate_symmetric_qpolys, gram,
                             is_symmetric_qpoly, polynomial_basis, qpoly_rank,
                             random_symmetric_qpoly, symmetric_qpoly_count)

__version__ = "0.1.0"
