//! Compositional distributional semantics for constituency-annotated corpora.
//!
//! The pipeline runs in three layers:
//!
//! - [`corpus`] reads bracketed constituent trees and checks their shape;
//! - [`syntax`] finds the objects of each sentence and derives completions,
//!   modifier sets and interaction sets from the tree alone;
//! - [`semantics`] builds a [`SemanticModel`] whose object words are vectors
//!   in the free semimodule over their instances, modifier words are
//!   projectors, and interaction words are binary operators.
//!
//! Vectors are generic over an involutive commutative [`Semiring`]; the
//! [`oracle`] module provides a dense reference evaluator used by the tests.

pub mod corpus;
pub mod oracle;
pub mod semantics;
pub mod semimodule;
pub mod semiring;
pub mod syntax;

pub use corpus::{parse_corpus, CategoryConfig, Corpus, InstanceRef, SentenceId, Word};
pub use semantics::{SemanticModel, SemanticsError};
pub use semimodule::{BasisIndex, SparseBiVec, SparseVec};
pub use semiring::{Boolean, Natural, Semiring, SemiringKind};
