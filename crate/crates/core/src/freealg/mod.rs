//! Noncommutative polynomials over finitely presented algebras, rewriting
//! normal forms, tensor products and homomorphism extension.

mod confluence;
mod hom;
mod ncpoly;
mod presentation;
mod qbinomial;
mod random;
mod tensor;

pub use confluence::{check_rule_confluence, critical_pairs, CriticalPair};
pub use hom::{apply_hom, apply_linear, relation_mismatch, word_image, Element, HomMode};
pub use ncpoly::NcPoly;
pub use presentation::{cached_presentation, AlgebraId, Generator, Presentation, PresentationBuilder, Rule, Word, DEFAULT_STEP_BUDGET};
pub use qbinomial::{qbinomial, qbinomial_identity_check, qbinomial_presentation};
pub use random::{random_element, random_word, seeded_rng};
pub use tensor::TensorPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeAlgError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("rule {rule} in {presentation} does not decrease in the word order")]
    NonDecreasingRule { presentation: String, rule: String },
    #[error("no image given for generator `{0}`")]
    MissingImage(String),
    #[error("mismatched presentations: {left} vs {right}")]
    MismatchedPresentations { left: String, right: String },
    #[error("rewrite step budget of {budget} exceeded while reducing `{word}`")]
    StepBudgetExceeded { word: String, budget: usize },
    #[error("presentation {0} has no star structure")]
    NoStar(String),
    #[error("negative power of non-invertible generator `{0}`")]
    NegativePower(String),
    #[error("{0}")]
    Other(String),
}
