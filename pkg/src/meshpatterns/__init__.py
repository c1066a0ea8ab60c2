"""
Mesh patterns in permutations: occurrence counting, box insertion, closed-form
generating functions for pattern families and a brute-force oracle to check
them against.
"""
from .embed import (embed_at_box, embed_multi, embed_multi_sequential, figure1_pattern,
                    run34_pattern, staircase_pattern)
from .families import FamilyResult, FormulaMismatch
from .oracle import (DistributionTable, VerificationReport, avoidance_counts, distribution_table,
                     verify_against_series, verify_avoidance)
from .patterns import (CATALOG, MeshPattern, Permutation, catalog_pattern, count_occurrences,
                       find_occurrences, is_irreducible, parse_mesh_pattern, parse_permutation,
                       rotate180)
from .qseries import (DEFAULT_ORDER, QPolynomial, Series, X, Q, factorial_series,
                      stirling_first_kind_series, staircase_sum)
from .registry import FAMILIES, build, formula, inner_series

__version__ = "0.1.0"

__all__ = [
    "Permutation", "MeshPattern", "CATALOG", "parse_permutation", "parse_mesh_pattern",
    "catalog_pattern", "find_occurrences", "count_occurrences", "is_irreducible", "rotate180",
    "QPolynomial", "Series", "X", "Q", "DEFAULT_ORDER", "factorial_series",
    "stirling_first_kind_series", "staircase_sum",
    "embed_at_box", "embed_multi", "embed_multi_sequential", "staircase_pattern",
    "run34_pattern", "figure1_pattern",
    "FamilyResult", "FormulaMismatch", "FAMILIES", "build", "formula", "inner_series",
    "DistributionTable", "VerificationReport", "distribution_table", "avoidance_counts",
    "verify_against_series", "verify_avoidance",
]
