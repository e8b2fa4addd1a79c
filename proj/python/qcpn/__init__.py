"""Exact K-theory of quantum projective spaces and the quantum-sphere algebra.

Classes in K_0 are plain coefficient lists ``[c0, ..., cn]`` in the basis
``1, t, ..., t^n`` with ``t = 1 - [L_1]``; sphere-algebra elements are
expression strings such as ``"q^-2 * z0 * z0s"``.
"""

from ._core import (
    DomainError,
    ParseError,
    StepCapExceeded,
    adjoint,
    associated_class,
    basis_matrix,
    canonical,
    certify_basis,
    det_exact,
    e_class,
    e_class_formula,
    euler_class,
    exhaustive_confluence,
    expand_in_e_basis,
    fundamental_decomposition,
    fuzz_confluence,
    line_class,
    multiply,
    nesting_check,
    normal_form,
    pair_mu,
    pair_vector,
    phi,
    pi_weights,
    render,
    restrict,
    run_cli,
    u1_degree,
    verify_defining_relations,
)

__version__ = "0.1.0"
__all__ = [name for name in dir() if not name.startswith("_")]
