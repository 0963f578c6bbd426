"""Type A nilpotent Springer/Hessenberg combinatorics: fillings, highest forms,
circle-fixed points, dimension-pair rolldowns, Billey restrictions and exact
verification that the resulting Springer Schubert classes form a basis."""

from .basis import (
    RankResult, RestrictionMatrix, block_report, build_matrix,
    check_upper_triangular, d_block_closed_form, is_full_column_rank,
)
from .billey import project_s1, schubert_restrict, springer_schubert
from .combinatorics import (
    Filling, Partition, Permutation, bruhat_leq, english_fill, english_read,
    filling_from_sigma_reading, reduced_word, rotated_english_fill,
    rotated_english_sigma, sigma_read,
)
from .fixed_points import (
    HessenbergFunction, fixed_points, fixed_points_bruteforce, identity_h,
    is_permissible, permissible_fillings,
)
from .matrix_forms import (
    NilMatrix, WeightAssignment, adjacent_pair_matrix, circle_weights, conjugate,
    count_distinct_highest_forms, highest_form_fillings, is_highest_form,
    jordan_matrix, pivots,
)
from .pinball import (
    PinballRow, betti_numbers, dimension_pairs, omega, pinball_table, rolldown,
    top_parts,
)
from .polynomials import LinForm, Poly, UniPoly

__version__ = "0.1.0"
