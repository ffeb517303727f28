"""Chein loops M(G, 2) and their half-automorphism groups."""

from .chein import CheinEmbedding, chein
from .errors import *  # noqa: F401,F403
from .groups import (
    FiniteGroup,
    GroupMapping,
    SubgroupDescriptor,
    automorphism_group,
    center,
    closure_from_permutations,
    direct_product,
    generalized_dihedral_decomposition,
    holomorph_order,
    inner_automorphism_group,
    is_elementary_abelian_2,
    isomorphic,
    preset,
    validate_group,
)
from .half import (
    ClassifiedMapping,
    GammaSet,
    HalfGroup,
    Kind,
    classify,
    compute_H,
    corollary1_witness,
    enumerate_automorphisms,
    enumerate_half_automorphisms,
    gamma,
    is_half_automorphism,
    theorem2_witness,
)
from .loops import (
    Check,
    FiniteLoop,
    commuting_pairs,
    compose,
    has_aaip,
    inverse,
    inversion_mapping,
    is_associative,
    is_diassociative,
    is_moufang,
    validate_loop,
)
from .report import AnalysisReport, analyze

__version__ = "0.1.0"
