"""Perfect codes and total perfect codes in Cayley graphs of finite groups.

The library works with dense multiplication tables at desk scale (orders up
to 64 for most operations, 128 for the cyclic/dihedral fast paths).  It
provides three equivalent ways of deciding whether a vertex subset is a
(total) perfect code in a Cayley graph -- the definitional ball check, the
group-ring product check, and (for subgroups) the transversal check -- plus
criteria and explicit connection-set constructions for normal, cyclic,
abelian and dihedral subgroups, exact cyclotomic Fourier tests for tilings
of abelian groups, and a brute-force analysis of (total-)perfect-code-
preserving automorphisms.
"""

from .errors import BoundExceededError, CayleyCodesError, GroupTableError
from .groups import (
    Automorphism,
    FiniteGroup,
    Subgroup,
    all_automorphisms,
    all_subgroups,
    centre,
    direct_product,
    from_table,
    inner_automorphism,
    is_normal,
    is_power_automorphism,
    left_cosets,
    make_abelian,
    make_cyclic,
    make_dihedral,
    right_cosets,
    subgroup_as_group,
    subgroup_generated,
    sylow_two_subgroup,
)
from .cayley import (
    CayleyGraph,
    ConnectionSet,
    build_cayley,
    enumerate_perfect_codes,
    group_ring_check_perfect,
    group_ring_check_total,
    group_ring_indicator,
    group_ring_product,
    is_left_transversal,
    is_perfect_code,
    is_total_perfect_code,
    subgroup_code_transversal_check,
)
from .criteria import (
    AbelianTwoGroupBasis,
    CriterionVerdict,
    abelian_criterion,
    abelian_sylow_reduction,
    construct_connection_set_normal,
    cyclic_criterion,
    decide_subgroup_code,
    dihedral_construct_sets,
    dihedral_criterion,
    dihedral_cyclic_criterion,
    generic_subgroup_code_decision,
    normal_subgroup_code,
    parity_criterion,
    property_one_holds,
    two_group_basis,
)
from .spectral import (
    Character,
    CyclotomicSum,
    char_sum,
    characters,
    cyclotomic_polynomial,
    power_automorphism_tiling_transport,
    spectral_tiling_check,
    verify_lemma_equivalence,
)
from .pcp import (
    PcpReport,
    all_power_automorphisms,
    is_pcp_automorphism,
    is_tpcp_automorphism,
    prop3_witness,
    verify_cor_thm4,
    verify_trivial_centre_corollary,
)

__version__ = "0.1.0"
