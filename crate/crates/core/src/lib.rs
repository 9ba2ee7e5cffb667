//! Exact computation of transvectants, Wronskians and the Wronskian
//! combinants of families of binary forms.
//!
//! Everything is computed over the rationals with no rounding anywhere. The
//! main entry points are [`transvectant`], [`wronskian`],
//! [`wronskian_combinants`], [`psi_matrix`] and [`recover_subspace`]; the
//! [`verify`] module runs randomized exact checks of the identities relating
//! them.

pub mod binform;
pub mod combinant;
pub mod error;
pub mod grassmann;
pub mod linalg;
pub mod scalar;
pub mod transvect;
pub mod verify;
pub mod wronskian;

pub use binform::{BiForm, BinaryForm, Mat2};
pub use combinant::{
    component_order, express_in_basis, extract_components, gamma, psi_apply, psi_matrix,
    psi_order, recover_subspace, slots, verify_keyprop, wronskian_combinants, BasisExpression,
    CombinantVector, KeypropReport, LinearMap, Recovery,
};
pub use error::{Error, Result};
pub use grassmann::{
    canonicalize, equal_points, image_membership, pluecker_point, Membership, ProjectivePoint,
    Subspace,
};
pub use linalg::Matrix;
pub use scalar::Scalar;
pub use transvect::transvectant;
pub use wronskian::{is_dependent, wronskian};
