"""Autotopy groups of Latin squares computed from the cycle structure of their rows."""

from .autotopy import (
    AutotopyGroup,
    CandidateMatrix,
    OrderGuardError,
    assemble_alphas,
    autotopy_group,
    autotopy_group_any,
    autotopy_group_brute,
    autotopy_group_pivoted,
    block_shifted_diagonals,
    build_T,
    build_Tl,
    conjugate_group,
    pivot_optimize,
    theta,
    transformed_row,
    verify_autotopism,
)
from .bounds import (
    BoundReport,
    bound_report,
    bsw_bound,
    cayley_order,
    cycle_partition_bound,
    derangements,
    derangements_with_k_cycles,
    parity_bound,
    single_cycle_bound,
    thm41_bound,
    thm51_bound,
    thm52_bound,
)
from .invariants import SquareInvariants, compute_invariants, lambda_cycle, r_set, sigma_ik
from .latin import (
    Isotopism,
    LatinSquare,
    LatinSquareError,
    apply_isotopism,
    cayley_cyclic,
    cayley_from_elements,
    cayley_from_table,
    from_grid,
    is_group_table,
    is_reduced,
    jm_random,
    parse_square,
    read_isotopism,
    read_square,
    reduce,
    relative_cycle_structure,
    to_text,
    transpose,
)
from .perm import Permutation, compose, conjugate, identity, inverse

__version__ = "0.1.0"
