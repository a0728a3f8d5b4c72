from ._logcsm import (
    characteristic_polynomial,
    csm_complement,
    freeness,
    groebner_basis,
    ideal_membership,
    is_linear_type,
    proof_chain_check,
    verify,
)

__all__ = [
    "characteristic_polynomial",
    "csm_complement",
    "freeness",
    "groebner_basis",
    "ideal_membership",
    "is_linear_type",
    "proof_chain_check",
    "verify",
]
