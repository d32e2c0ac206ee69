"""Exact verification toolkit for derivation modules on isolated hypersurface singularities."""

from .criterion import (
    BetaMatrix,
    VerificationReport,
    check_congruence,
    check_nonmembership,
    hessian_cofactor,
    verify_case,
    verify_simple_elliptic,
)
from .derivations import (
    ComponentIdeal,
    Derivation,
    DerivationTuple,
    NotADerivationError,
    NotInJacobianError,
    NotLiftableError,
    check_descent,
    component_ideal,
    congruence_quotient,
    der1_kernel,
    euler_hamiltonian,
    euler_vector,
    hamiltonian_pair,
    hess_kernel,
    lift_derivation,
    predicted_component_ideal,
    symmetrize_tuple,
)
from .groebner import (
    ArtinianQuotient,
    Coset,
    GroebnerBasis,
    Ideal,
    NotFiniteColengthError,
    artinian_quotient,
    buchberger,
    contains,
    extended_divide,
    milnor_number,
    normal_form,
    tjurina_number,
)
from .operators import (
    DiffOperator,
    commutator,
    compose,
    d2_compatible,
    der2_span,
    derivation_operator,
    divided_derivative,
    in_der2,
    multiplication_operator,
    operator_matrix,
    phi,
    shift,
    solve_der_m,
    theta2,
)
from .poly import Polynomial, Ring, hessian, jacobian, parse_poly

__all__ = [
    "ArtinianQuotient",
    "BetaMatrix",
    "ComponentIdeal",
    "Coset",
    "Derivation",
    "DerivationTuple",
    "DiffOperator",
    "GroebnerBasis",
    "Ideal",
    "NotADerivationError",
    "NotFiniteColengthError",
    "NotInJacobianError",
    "NotLiftableError",
    "Polynomial",
    "Ring",
    "VerificationReport",
    "artinian_quotient",
    "buchberger",
    "check_congruence",
    "check_descent",
    "check_nonmembership",
    "commutator",
    "component_ideal",
    "compose",
    "congruence_quotient",
    "contains",
    "d2_compatible",
    "der1_kernel",
    "der2_span",
    "derivation_operator",
    "divided_derivative",
    "euler_hamiltonian",
    "euler_vector",
    "extended_divide",
    "hamiltonian_pair",
    "hess_kernel",
    "hessian",
    "hessian_cofactor",
    "in_der2",
    "jacobian",
    "lift_derivation",
    "milnor_number",
    "multiplication_operator",
    "normal_form",
    "operator_matrix",
    "parse_poly",
    "phi",
    "predicted_component_ideal",
    "shift",
    "solve_der_m",
    "symmetrize_tuple",
    "theta2",
    "tjurina_number",
    "verify_case",
    "verify_simple_elliptic",
]
