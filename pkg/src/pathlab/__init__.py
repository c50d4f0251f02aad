"""Exact combinatorics of lattice paths between two boundaries."""

from .paths import (
    ContactStats,
    Path,
    PathError,
    Region,
    RegionError,
    contact_stats,
    contains,
    descent_set,
    noncontact_heights,
    north_index_set,
    parse_path,
    region_new,
)
from .polynomials import MultiPoly
from .words import factorize, switch, switch_inv
from .swaps import contact_word, swap, swap_inv, swapall
from .enumeration import (
    distribution,
    enumerate_paths,
    enumerate_tuples,
    lgv_count,
    path_distribution,
    poly_symmetric,
)
from .tuples import PathTuple, apply_perm_h, bltr_tuple_bijection, h_stats, transpose_h, u_stats, v_stats
from .matroids import (
    BasesOracle,
    LinearOrder,
    activities,
    bltr_single_path,
    lpm_oracle,
    natural_order,
    phi_xy,
    reorder_bijection,
    reversed_order,
    strong_exchange,
    tutte_poly,
    uniform_oracle,
)
from .tableaux import (
    Tableau,
    YoungShape,
    easy_bijection,
    find_violations,
    flagged_schur,
    is_perflagged,
    j_inv_move,
    j_move,
    psi,
    psi_inv,
    tab_of_tuple,
    tuple_of_tab,
)
from .applications import (
    Watermelon,
    andre_barbier_count,
    conjecture_52_check,
    conjecture_53_check,
    contact_formula_count,
    corollary_ij_check,
    easy_bottom_count,
    path_of_perm,
    perm_of_path,
    perm_stats,
    tuple_to_watermelon,
    watermelon_to_tuple,
)
from .triangulations import (
    Triangulation,
    catalan_det,
    degree_sequence,
    enumerate_k_triangulations,
    nicolas_check,
    nontrivial_diagonals,
)

__all__ = [name for name in dir() if not name.startswith("_")]
