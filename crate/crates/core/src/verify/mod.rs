//! Verification harnesses. Each returns a [`VerificationReport`] whose
//! records can be written as JSON lines plus a CSV summary.

pub mod claims;
pub mod report;
pub mod theorems;

pub use claims::{check_sign_claims, SignGrid};
pub use report::{Record, VerificationReport};
pub use theorems::{
    verify_complete_radius, verify_corollary3, verify_edge_monotonicity, verify_lemma_equivalence,
    verify_quotient_consistency, verify_theorem1, verify_theorem2, QuotientGrid,
};
