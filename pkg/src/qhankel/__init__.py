"""Exact q-series toolkit: Carlitz q-Euler/q-Bernoulli sequences, specialized
big q-Jacobi families, moment functionals, and Hankel determinant identities,
all over the exact field Q(q)."""

from .ratcore import (
    DeserializeError,
    DivisionByZeroError,
    PoleError,
    QPoly,
    RatFuncQ,
    Q,
    Q_ONE,
    Q_ZERO,
    const,
    deserialize,
    eval_at,
    poly_gcd,
    qpow,
    ratfunc_arith,
    serialize,
)
from .qkit import (
    PochSpec,
    VanishingPochhammerError,
    parity_sign,
    poch,
    q_binom,
    q_factorial,
    q_hyper_terminating,
    q_int,
    q_pochhammer,
    verify_q_chu_vandermonde,
)
from .carlitz import (
    MomentSeq,
    limit_q1,
    q_bernoulli_explicit,
    q_bernoulli_recursive,
    q_bernoulli_seq,
    q_euler_explicit,
    q_euler_recursive,
    q_euler_seq,
)
from .orthopoly import (
    DegenerateRecurrenceError,
    FamilyId,
    FavardData,
    ZPoly,
    affine_transform,
    build_j_via_phi2,
    build_jtilde_via_phi2,
    build_p_via_phi2,
    coeffs_ab,
    coeffs_monic,
    coeffs_p,
    family_polys,
    favard_data_monic,
    favard_data_p,
    p1_at_zero_closed,
    three_term_build,
)
from .functionals import (
    FunctionalId,
    OrthogonalityReport,
    PairingError,
    apply_functional,
    from_diagonal_basis,
    moments_for,
    phi,
    phi_closed_m_n,
    phi_closed_n1_n,
    phi_on_basis,
    phi_via_basis,
    qbinom_basis,
    theta_moment,
    theta_moment_seq,
    theta_on_basis,
    to_diagonal_basis,
    verify_orthogonality,
    verify_phi_relation,
    xi_moment,
    xi_moment_seq,
)
from .hankel import (
    HankelResult,
    InsufficientMomentsError,
    JFraction,
    NotQuasiDefiniteError,
    closed_form_chapoton_zeng,
    closed_form_theorem1,
    closed_form_theta_det,
    closed_form_xi_det,
    det_cofactor,
    det_exact,
    det_heilermann,
    det_shifted_via_favard,
    hankel_matrix,
    jfraction_expand,
    jfraction_for_eps,
    jfraction_for_theta,
    jfraction_for_xi,
    jfraction_from_moments,
    shift0_exponent,
    shift12_exponent,
    verify_exponent_integrality,
)

__version__ = "0.1.0"
