"""Iterated Segal deloopings of the unit gamma-set, executably.

The library models gamma-sets (pointed functors out of finite pointed
sets) and their iterated deloopings as multisimplicial gamma-sets, and
mechanically certifies, at finite truncation, that delooping the unit n
times produces the n-sphere with its free partial commutative monoid
structure, sitting inside the mod-2 Eilenberg-MacLane object — including
exact integer homology of the diagonals.
"""

from .finset import (
    DeltaMap,
    PointedMap,
    PointedSet,
    circle_level,
    circle_map,
    codegeneracy,
    coface,
    compose,
    compose_delta,
    delta_identity,
    delta_map,
    enumerate_delta_maps,
    enumerate_ptd_maps,
    gamma_face,
    identity_map,
    ptd_map,
    smash,
    wedge,
    zero_map,
)
from .plasma import (
    Plasma,
    enumerate_strict_plasmas,
    has_strict_identity,
    is_plasma_morphism,
    make_plasma,
    plasma_of_abelian_group,
    standard_plasmas,
    validate_plasma,
)
from .gamma import (
    FiniteAbelianGroup,
    GammaNatTrans,
    GammaSet,
    axes_inclusion,
    check_nat_trans,
    corepresentable,
    eilenberg_maclane,
    f1,
    gamma_iso_on_truncation,
    gamma_product,
    segal_comparison,
    verify_functor,
)
from .deloop import (
    MultiSimplicialGammaSet,
    MultiSimplicialPointedSet,
    cube_quotient,
    deloop,
    deloop_n,
    degenerate_indices,
    em_deloop,
    em_inclusion,
    evaluate_at_one,
    fold_construction,
    is_degenerate,
    levelwise_equal,
    lift_gamma,
    multisimp_iso_on_truncation,
    nondegenerate_census,
    product_multi,
    product_pointed,
    sphere,
    verify_face_action,
    verify_multisimplicial,
    wedge_pointed,
)
from .homology import (
    ChainComplex,
    HomologyGroup,
    HomologyReport,
    SimplicialPointedSet,
    check_simplicial_identities,
    diagonal,
    homology,
    normalized_chains,
    smith_normal_form,
)

__version__ = "0.1.0"
