//! A dense, brute-force reference implementation over small bases.
//!
//! Nothing here calls into the syntax or semantics modules: objects and
//! their relations are recomputed from the raw tree, and every vector
//! operation is a composite of explicit Frobenius structure matrices.

mod dense;
mod diagram;
mod syntax;

use thiserror::Error;

pub use dense::{dense_frobenius, DenseAlgebra, DenseMatrix, FrobeniusMaps};
pub use diagram::{evaluate_sentence_diagram, DiagramEvaluator, OracleModel, DENSE_LIMIT};
pub use syntax::{BruteObject, BruteSentence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("dimension mismatch: {left:?} against {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("basis of size {size} exceeds the dense limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("no sentence with id `{0}`")]
    UnknownSentence(String),
    #[error("diagram not evaluable: {0}")]
    Unsupported(String),
}

impl OracleError {
    pub fn code(&self) -> &'static str {
        match self {
            OracleError::DimensionMismatch { .. } => "DimensionMismatch",
            OracleError::TooLarge { .. } => "TooLarge",
            OracleError::UnknownSentence(_) => "UnknownSentence",
            OracleError::Unsupported(_) => "Unsupported",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{parse_corpus, CategoryConfig, SentenceId};
    use crate::semiring::Natural;

    const EX1: &str = "(S (NP (Det The) (NP (Adj quick) (NP (Adj brown) (N fox)))) \
        (VP (V jumps) (PP (P over) (NP (NP (Det the) (NP (Adj lazy) (N dog))) \
        (PP (P of) (NP (Det a) (NP (Adj passing) (N lady))))))))";

    fn nats(xs: &[u64]) -> Vec<Natural> {
        xs.iter().map(|&x| Natural::new(x)).collect()
    }

    #[test]
    fn ex1_diagram() {
        let corpus = parse_corpus(EX1, &CategoryConfig::default()).unwrap();
        let v = evaluate_sentence_diagram::<Natural>(&corpus, &SentenceId::new("s1")).unwrap();
        assert_eq!(v, nats(&[2, 1, 1]));
    }

    #[test]
    fn ex1_literal_sets() {
        let corpus = parse_corpus(EX1, &CategoryConfig::default()).unwrap();
        let model = OracleModel::new(&corpus);
        let w = |s: &str| s.parse().unwrap();
        assert_eq!(model.m[&w("The/Det")], [0].into());
        assert_eq!(model.m[&w("lazy/Adj")], [1].into());
        assert_eq!(model.i[&w("of/P")], [(0, 1), (0, 2), (1, 2)].into());
        assert_eq!(model.i[&w("jumps/V")], [(0, 1), (0, 2)].into());
    }

    #[test]
    fn tiny_sentences() {
        let corpus = parse_corpus("(N dog)", &CategoryConfig::default()).unwrap();
        let v = evaluate_sentence_diagram::<Natural>(&corpus, &SentenceId::new("s1")).unwrap();
        assert_eq!(v, nats(&[1]));
        let corpus = parse_corpus("(NP (Det the) (N dog))", &CategoryConfig::default()).unwrap();
        let v = evaluate_sentence_diagram::<Natural>(&corpus, &SentenceId::new("s1")).unwrap();
        assert_eq!(v, nats(&[1]));
    }

    #[test]
    fn too_large() {
        let text = "(NP (N a) (NP (N b) (NP (N c) (NP (N d) (NP (N e) (NP (N f) (NP (N g) (NP (N h) (N i)))))))))";
        let corpus = parse_corpus(text, &CategoryConfig::default()).unwrap();
        let err = evaluate_sentence_diagram::<Natural>(&corpus, &SentenceId::new("s1")).unwrap_err();
        assert_eq!(err, OracleError::TooLarge { size: 9, limit: 8 });
    }
}
