"""Brute-force exterior algebra on the standard symplectic model space."""

from .forms import MAX_DEFAULT_N, ModelSpace, MultiVector
from .identities import (
    HodgeRiemannCheck,
    IdentityCheck,
    TypeDecomposition,
    decompose,
    holomorphic_degree,
    holomorphic_monomial,
    random_holomorphic_form,
    verify_hodge_riemann_16,
    verify_wedge_identity_6,
    verify_wedge_identity_7,
)
from .signature import gram_matrix, j_invariant_basis, pairing, signature_of_pairing

wedge = MultiVector.wedge

__all__ = [
    "HodgeRiemannCheck",
    "IdentityCheck",
    "MAX_DEFAULT_N",
    "ModelSpace",
    "MultiVector",
    "TypeDecomposition",
    "decompose",
    "gram_matrix",
    "holomorphic_degree",
    "holomorphic_monomial",
    "j_invariant_basis",
    "pairing",
    "random_holomorphic_form",
    "signature_of_pairing",
    "verify_hodge_riemann_16",
    "verify_wedge_identity_6",
    "verify_wedge_identity_7",
    "wedge",
]
