//! Sentence vectors, evaluated bottom-up over the completion classes.

use std::collections::BTreeSet;

use crate::corpus::{SentenceId, Word};
use crate::semimodule::{SparseBiVec, SparseVec};
use crate::semiring::Semiring;
use crate::syntax::{ClassKind, CompletionClass, ObjectAnalysis};

use super::{SemanticModel, SemanticsError};

impl SemanticModel {
    pub fn sentence_vector<S: Semiring>(
        &self,
        id: &SentenceId,
    ) -> Result<SparseVec<S>, SemanticsError> {
        let analysis = self
            .analysis(id)
            .ok_or_else(|| SemanticsError::UnknownSentence(id.clone()))?;
        let classes = analysis.completion_classes()?;
        self.eval_class(analysis, &classes)
    }

    fn eval_class<S: Semiring>(
        &self,
        analysis: &ObjectAnalysis,
        class: &CompletionClass,
    ) -> Result<SparseVec<S>, SemanticsError> {
        let max_span = analysis.span(class.max);
        match &class.kind {
            ClassKind::Leaf { position } => {
                let v = self.word_vector(analysis.word(*position))?;
                let outside = difference(&max_span, &[analysis.span(class.min)]);
                self.modify(analysis, &outside, v)
            }
            ClassKind::Join {
                left,
                right,
                join_node,
            } => {
                let l = self.eval_class::<S>(analysis, left)?;
                let r = self.eval_class::<S>(analysis, right)?;
                let join_span = analysis.span(*join_node);
                let between = difference(
                    &join_span,
                    &[analysis.span(left.max), analysis.span(right.max)],
                );
                let mut t = l.tensor(&r)?;
                let mut gate: Option<SparseBiVec<S>> = None;
                for u in analysis.words_at(&between) {
                    let op = self.interaction::<S>(&u)?;
                    gate = Some(match gate {
                        None => op.coefficients().clone(),
                        Some(g) => g.bi_mult(op.coefficients())?,
                    });
                }
                if let Some(g) = gate {
                    t = g.bi_mult(&t)?;
                }
                let v = t.plus_map();
                let outside = difference(&max_span, &[join_span]);
                self.modify(analysis, &outside, v)
            }
        }
    }

    /// Applies the modifier of every distinct word at `positions`.
    fn modify<S: Semiring>(
        &self,
        analysis: &ObjectAnalysis,
        positions: &BTreeSet<usize>,
        mut v: SparseVec<S>,
    ) -> Result<SparseVec<S>, SemanticsError> {
        let words: BTreeSet<Word> = analysis.words_at(positions);
        for u in &words {
            v = self.modifier_apply(u, &v)?;
        }
        Ok(v)
    }
}

fn difference(base: &BTreeSet<usize>, minus: &[BTreeSet<usize>]) -> BTreeSet<usize> {
    base.iter()
        .filter(|p| minus.iter().all(|m| !m.contains(p)))
        .copied()
        .collect()
}
