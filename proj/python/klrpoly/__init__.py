"""Kazhdan-Lusztig R-polynomials on symmetric groups.

Thin re-export of the compiled extension. Permutations may be passed as
one-line strings ("2354167") wherever a Permutation is expected.
"""

from ._klrpoly import (  # noqa: F401
    BruhatPath,
    InvariantViolation,
    Permutation,
    Polynomial,
    RTable,
    VPath,
    bruhat_graph,
    bruhat_leq,
    canonical_fixed_point,
    classify_s_interval,
    interval,
    interval_ending_with,
    interval_pairing,
    inversion_sum,
    length,
    monotone_paths,
    parity_census,
    refined_reflect,
    refinement_sum,
    reflect,
    rpoly_from_rtilde,
    rpoly_r,
    rtilde,
    rtilde_by_paths,
    substitute_shift,
    vpath_signed_sum,
    vpaths,
)

__version__ = "0.1.0"
