"""Skyline fillings, Demazure polynomials, crystal graphs, and the
truncated-staircase non-symmetric Cauchy kernel."""

from .correspondences import (
    Biword,
    from_multiset,
    main_theorem_predicate,
    phi,
    phi_inverse,
    rsk,
    rsk_commutes_check,
    swap_rows,
)
from .crystal import (
    CrystalGraph,
    DemazureCrystal,
    atom_set,
    bounded_entry_restriction,
    crystal_graph,
    demazure_crystal,
    e_op,
    f_op,
    string_decomposition,
)
from .demazure import atom, atom_via_ssaf, key_polynomial, key_via_ssaf, pi_op, pihat_op
from .fillings import (
    SSAF,
    insert,
    key_ssaf,
    psi,
    psi_inverse,
    right_key,
    validate,
)
from .kernel import (
    KernelInstance,
    alpha_vector,
    alpha_via_sorting,
    kernel_lhs,
    kernel_rhs,
    sigma_nw_word,
    sigma_se_word,
    verify_expansion,
)
from .permutations import (
    ReducedWord,
    apply_word,
    bruhat_leq,
    bubble_sort_op,
    min_coset_rep,
    orbit_bruhat_leq,
    tableau_criterion_leq,
)
from .polynomials import SparsePoly
from .shapes import (
    cells,
    decreasing_rearrangement,
    orbit,
    truncated_staircase,
)
from .tableaux import (
    SSYT,
    entrywise_leq,
    enumerate_ssyt,
    evacuation,
    is_key,
    key_tableau,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
