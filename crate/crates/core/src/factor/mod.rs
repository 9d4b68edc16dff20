//! Component factors with parts in `{P2, C3, P5} ∪ T(3)`.

pub mod criterion;
pub mod search;
pub mod trees;

pub use criterion::{has_factor_criterion, has_factor_criterion_with, CriterionWitness, ScanStrategy};
pub use search::{
    find_factor, find_factor_capped, is_valid_certificate, verify_certificate, Block, BlockKind,
    CertificateDefect, FactorCertificate, DEFAULT_BLOCK_CAP,
};
pub use trees::{enumerate_trees, expand_to_t3, generate_13_trees, is_t3_member, TreeSpec};
