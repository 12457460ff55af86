//! Exact symbolic calculus for determinant-defined symmetric functions.
//!
//! The crate works in a polynomial ring with exact rational coefficients
//! over one of several generator alphabets. A [`Family`] supplies the
//! two-parameter complete functions `h(r, k)`; on top of those sit
//! determinant constructions (Schur-type functions, generalized elementary
//! functions, hook expansions), a Clifford-operator action on
//! charge-graded polynomial states, and a semi-infinite wedge model used
//! to cross-check that action.

pub mod boson;
pub mod coeff;
pub mod det;
pub mod error;
pub mod family;
pub mod fermion;
pub mod partition;
pub mod poly;
pub mod schur;
pub mod suites;

pub use boson::{
    apply_psi, apply_psi_star, apply_word, d_skew, d_upper, expand_state, heisenberg_alpha,
    verify_char_vertex, verify_linrec_vertex, verify_prop42, BosonState, Letter, OperatorWord,
};
pub use coeff::{coeff, parse_coeff, ratio, sign_pow, Coeff};
pub use det::{det_poly, COLUMN_LIMIT};
pub use error::{Error, Result};
pub use family::{
    base_poly, k_coeff, lie_j, phi, phi_inverse, phi_pow, Family, FamilyKind, RecurrenceCoeffs,
};
pub use fermion::{boson_to_fermion, f_psi, f_psi_star, fermion_to_boson, FermionState};
pub use partition::{
    parse_int_vector, partitions_up_to_weight, straighten, FrobeniusCoords, Partition,
    SignedPartition,
};
pub use poly::{GeneratorId, Monomial, Poly, Tag};
pub use schur::{
    dual_jacobi_trudi, elementary, giambelli, he_matrices, hook_schur, newton_sum,
    product_is_identity, schur, schur_partition, PolyMatrix,
};
pub use suites::{
    bernstein_suite, char_vertex_suite, clifford_suite, correspondence_suite, expansion_suite,
    giambelli_suite, heisenberg_suite, hook_suite, linrec_vertex_suite, newton_suite,
    run_named_suite, shifted_suite, standard_families, straighten_suite, wedge_expansion_suite,
    SuiteReport, SUITE_NAMES,
};
