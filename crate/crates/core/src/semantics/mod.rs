//! The semantic model built from a corpus.
//!
//! Object words become indicator vectors over their instances. A non-object
//! word `u` is read as a modifier through the set `m_u` of object-word
//! instances lying in objects that `u` modifies, and as an interaction
//! through the set `i_u` of ordered instance pairs lying in objects that `u`
//! puts into relation. Both sets are semiring independent; vectors are
//! produced on demand for any [`Semiring`].

mod logic;
mod ops;
mod persist;
mod sentence;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::corpus::{validate, Corpus, InstanceRef, SentenceId, Violation, Word};
use crate::semimodule::{BasisIndex, SemimoduleError, SparseBiVec, SparseVec};
use crate::semiring::{Semiring, SemiringKind};
use crate::syntax::{AnalysisError, ObjectAnalysis};

pub use logic::{parse_logic, LogicError, LogicExpr};
pub use ops::{InteractionOp, ModifierOp};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("corpus fails validation ({} violations)", .0.len())]
    ValidationFailed(Vec<Violation>),
    #[error("`{0}` is not an object word")]
    NotAnObjectWord(Word),
    #[error("`{0}` is an object word and cannot act as a modifier")]
    NotAModifierCandidate(Word),
    #[error("`{0}` is an object word and cannot act as an interaction")]
    NotAnInteractionCandidate(Word),
    #[error("`{0}` has a category outside the configured lexical categories")]
    UnknownCategory(Word),
    #[error("semiring `{0}` does not satisfy additive cancellation")]
    UnsupportedInstance(&'static str),
    #[error("partial subtraction undefined while building a projector")]
    SubtractionUndefined,
    #[error("no sentence with id `{0}`")]
    UnknownSentence(SentenceId),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Semimodule(#[from] SemimoduleError),
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error("malformed model: {0}")]
    Persist(String),
    #[error("stored model disagrees with its corpus in `{0}`")]
    ModelMismatch(&'static str),
}

impl SemanticsError {
    pub fn code(&self) -> &'static str {
        match self {
            SemanticsError::ValidationFailed(_) => "ValidationFailed",
            SemanticsError::NotAnObjectWord(_) => "NotAnObjectWord",
            SemanticsError::NotAModifierCandidate(_) => "NotAModifierCandidate",
            SemanticsError::NotAnInteractionCandidate(_) => "NotAnInteractionCandidate",
            SemanticsError::UnknownCategory(_) => "UnknownCategory",
            SemanticsError::UnsupportedInstance(_) => "UnsupportedInstance",
            SemanticsError::SubtractionUndefined => "SubtractionUndefined",
            SemanticsError::UnknownSentence(_) => "UnknownSentence",
            SemanticsError::Analysis(e) => e.code(),
            SemanticsError::Semimodule(e) => e.code(),
            SemanticsError::Logic(_) => "LogicSyntax",
            SemanticsError::Persist(_) => "MalformedModel",
            SemanticsError::ModelMismatch(_) => "ModelMismatch",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SemanticModel {
    corpus: Corpus,
    semiring: SemiringKind,
    basis: Arc<BasisIndex>,
    word_index: BTreeMap<Word, BTreeSet<usize>>,
    modifier_support: BTreeMap<Word, BTreeSet<usize>>,
    interaction_support: BTreeMap<Word, BTreeSet<(usize, usize)>>,
    /// 1-based rank of each basis instance among its sentence's object words.
    object_rank: Vec<usize>,
    /// Index into `corpus.sentences` of each basis instance.
    sentence_of: Vec<usize>,
    analyses: Vec<ObjectAnalysis>,
}

/// Supports contributed by one sentence, in global basis positions.
#[derive(Default)]
struct LocalSupports {
    modifiers: BTreeMap<Word, BTreeSet<usize>>,
    interactions: BTreeMap<Word, BTreeSet<(usize, usize)>>,
}

fn sentence_supports(
    analysis: &ObjectAnalysis,
    global: &BTreeMap<usize, usize>,
    is_object_word: impl Fn(&Word) -> bool,
) -> LocalSupports {
    let mut out = LocalSupports::default();
    let globals = |positions: BTreeSet<usize>| -> Vec<usize> {
        positions.iter().map(|p| global[p]).collect()
    };

    // An object and its completion contain the same object words, so every
    // contribution can be read off the completion.
    for id in analysis.ids() {
        let modifiers = analysis.modifiers(id);
        if modifiers.is_empty() {
            continue;
        }
        let inside = globals(analysis.object_words_in(analysis.completion(id)));
        for word in analysis.words_at(&modifiers) {
            debug_assert!(!is_object_word(&word), "object word among modifiers");
            out.modifiers.entry(word).or_default().extend(&inside);
        }
    }

    let completions: BTreeSet<_> = analysis.ids().map(|id| analysis.completion(id)).collect();
    for &a in &completions {
        for &b in &completions {
            if !analysis.left_of(a, b) {
                continue;
            }
            let words: Vec<Word> = analysis
                .words_at(&analysis.interactions(a, b))
                .into_iter()
                .filter(|w| !is_object_word(w))
                .collect();
            if words.is_empty() {
                continue;
            }
            let left = globals(analysis.object_words_in(a));
            let right = globals(analysis.object_words_in(b));
            let pairs: Vec<(usize, usize)> = left
                .iter()
                .flat_map(|&x| right.iter().map(move |&y| (x, y)))
                .collect();
            for word in words {
                out.interactions.entry(word).or_default().extend(&pairs);
            }
        }
    }
    out
}

impl SemanticModel {
    pub fn build(corpus: &Corpus, semiring: SemiringKind) -> Result<Self, SemanticsError> {
        let violations = validate(corpus);
        if !violations.is_empty() {
            return Err(SemanticsError::ValidationFailed(violations));
        }
        let config = &corpus.config;

        let analyses = corpus
            .sentences
            .par_iter()
            .map(|s| ObjectAnalysis::new(s, config))
            .collect::<Result<Vec<_>, _>>()?;

        let mut instances = Vec::new();
        let mut object_rank = Vec::new();
        let mut sentence_of = Vec::new();
        let mut word_index: BTreeMap<Word, BTreeSet<usize>> = BTreeMap::new();
        let mut global_maps = Vec::with_capacity(analyses.len());
        for (k, (sentence, analysis)) in corpus.sentences.iter().zip(&analyses).enumerate() {
            let mut global = BTreeMap::new();
            for (rank, &position) in analysis.object_word_positions().iter().enumerate() {
                let idx = instances.len();
                instances.push(InstanceRef::new(sentence.id.clone(), position));
                object_rank.push(rank + 1);
                sentence_of.push(k);
                global.insert(position, idx);
                word_index
                    .entry(analysis.word(position).clone())
                    .or_default()
                    .insert(idx);
            }
            global_maps.push(global);
        }

        let locals: Vec<LocalSupports> = analyses
            .par_iter()
            .zip(global_maps.par_iter())
            .map(|(a, g)| sentence_supports(a, g, |w| config.is_object_word(&w.cat)))
            .collect();

        let mut modifier_support: BTreeMap<Word, BTreeSet<usize>> = BTreeMap::new();
        let mut interaction_support: BTreeMap<Word, BTreeSet<(usize, usize)>> = BTreeMap::new();
        for local in locals {
            for (w, set) in local.modifiers {
                modifier_support.entry(w).or_default().extend(set);
            }
            for (w, set) in local.interactions {
                interaction_support.entry(w).or_default().extend(set);
            }
        }

        Ok(SemanticModel {
            corpus: corpus.clone(),
            semiring,
            basis: Arc::new(BasisIndex::new(instances)),
            word_index,
            modifier_support,
            interaction_support,
            object_rank,
            sentence_of,
            analyses,
        })
    }

    pub fn corpus(&self) -> &Corpus {
        &self.corpus
    }

    pub fn semiring(&self) -> SemiringKind {
        self.semiring
    }

    pub fn basis(&self) -> &Arc<BasisIndex> {
        &self.basis
    }

    pub fn analyses(&self) -> &[ObjectAnalysis] {
        &self.analyses
    }

    pub fn analysis(&self, id: &SentenceId) -> Option<&ObjectAnalysis> {
        self.analyses.iter().find(|a| a.sentence() == id)
    }

    pub fn object_rank(&self, index: usize) -> usize {
        self.object_rank[index]
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.word_index.keys()
    }

    /// Every distinct non-object word of the corpus.
    pub fn non_object_words(&self) -> BTreeSet<Word> {
        self.corpus
            .sentences
            .iter()
            .flat_map(|s| s.words.iter())
            .filter(|w| !self.is_object_word(w))
            .cloned()
            .collect()
    }

    pub fn is_object_word(&self, w: &Word) -> bool {
        self.corpus.config.is_object_word(&w.cat)
    }

    fn check_known(&self, w: &Word) -> Result<(), SemanticsError> {
        if self.corpus.config.is_lexical(&w.cat) {
            Ok(())
        } else {
            Err(SemanticsError::UnknownCategory(w.clone()))
        }
    }

    fn object_word(&self, w: &Word) -> Result<(), SemanticsError> {
        self.check_known(w)?;
        if self.is_object_word(w) {
            Ok(())
        } else {
            Err(SemanticsError::NotAnObjectWord(w.clone()))
        }
    }

    /// Basis positions of the instances of an object word.
    pub fn instances_of(&self, w: &Word) -> Result<&BTreeSet<usize>, SemanticsError> {
        static EMPTY: BTreeSet<usize> = BTreeSet::new();
        self.object_word(w)?;
        Ok(self.word_index.get(w).unwrap_or(&EMPTY))
    }

    /// `m_u`: instances lying in objects modified by `u`.
    pub fn modifier_support(&self, u: &Word) -> Result<&BTreeSet<usize>, SemanticsError> {
        static EMPTY: BTreeSet<usize> = BTreeSet::new();
        self.check_known(u)?;
        if self.is_object_word(u) {
            return Err(SemanticsError::NotAModifierCandidate(u.clone()));
        }
        Ok(self.modifier_support.get(u).unwrap_or(&EMPTY))
    }

    /// `i_u`: ordered instance pairs lying in objects related by `u`.
    pub fn interaction_support(
        &self,
        u: &Word,
    ) -> Result<&BTreeSet<(usize, usize)>, SemanticsError> {
        static EMPTY: BTreeSet<(usize, usize)> = BTreeSet::new();
        self.check_known(u)?;
        if self.is_object_word(u) {
            return Err(SemanticsError::NotAnInteractionCandidate(u.clone()));
        }
        Ok(self.interaction_support.get(u).unwrap_or(&EMPTY))
    }

    /// `i_u(w, w')`: pairs of `i_u` whose components are instances of `w`
    /// and `w'` respectively.
    pub fn interaction_pairs(
        &self,
        u: &Word,
        w: &Word,
        w2: &Word,
    ) -> Result<BTreeSet<(usize, usize)>, SemanticsError> {
        let left = self.instances_of(w)?;
        let right = self.instances_of(w2)?;
        Ok(self
            .interaction_support(u)?
            .iter()
            .filter(|(x, y)| left.contains(x) && right.contains(y))
            .copied()
            .collect())
    }

    pub fn word_vector<S: Semiring>(&self, w: &Word) -> Result<SparseVec<S>, SemanticsError> {
        Ok(SparseVec::indicator(self.basis.clone(), self.instances_of(w)?))
    }

    /// `⟨w|w⟩`, the number of occurrences of `w` in the corpus.
    pub fn squared_norm<S: Semiring>(&self, w: &Word) -> Result<S, SemanticsError> {
        let v = self.word_vector::<S>(w)?;
        Ok(v.inner_product(&v)?)
    }

    /// The co-occurrence form `IP_k` applied to `star(a) ⊗ b`: pairs of
    /// instances in the same sentence at most `k` object words apart.
    pub fn ip_k_form<S: Semiring>(
        &self,
        k: usize,
        a: &SparseVec<S>,
        b: &SparseVec<S>,
    ) -> Result<S, SemanticsError> {
        if !Arc::ptr_eq(a.basis(), &self.basis) && **a.basis() != *self.basis {
            return Err(SemimoduleError::BasisMismatch.into());
        }
        if !Arc::ptr_eq(b.basis(), &self.basis) && **b.basis() != *self.basis {
            return Err(SemimoduleError::BasisMismatch.into());
        }
        let mut by_sentence: BTreeMap<usize, Vec<(usize, &S)>> = BTreeMap::new();
        for (&y, v) in b.coeffs() {
            by_sentence
                .entry(self.sentence_of[y])
                .or_default()
                .push((self.object_rank[y], v));
        }
        let mut total = S::zero();
        for (&x, u) in a.coeffs() {
            let Some(candidates) = by_sentence.get(&self.sentence_of[x]) else {
                continue;
            };
            let rank = self.object_rank[x];
            let conj = u.star();
            for (other, v) in candidates {
                if rank.abs_diff(*other) <= k {
                    total = total.add(&conj.mul(v));
                }
            }
        }
        Ok(total)
    }

    pub fn ip_k<S: Semiring>(&self, k: usize, w: &Word, w2: &Word) -> Result<S, SemanticsError> {
        let a = self.word_vector::<S>(w)?;
        let b = self.word_vector::<S>(w2)?;
        self.ip_k_form(k, &a, &b)
    }

    /// The projector `M_u`.
    pub fn modifier<S: Semiring>(&self, u: &Word) -> Result<ModifierOp<S>, SemanticsError> {
        let support = self.modifier_support(u)?;
        Ok(ModifierOp::new(
            u.to_string(),
            SparseVec::indicator(self.basis.clone(), support),
        ))
    }

    pub fn modifier_apply<S: Semiring>(
        &self,
        u: &Word,
        v: &SparseVec<S>,
    ) -> Result<SparseVec<S>, SemanticsError> {
        self.modifier::<S>(u)?.apply(v)
    }

    pub fn modifier_meet<S: Semiring>(
        &self,
        u: &Word,
        u2: &Word,
    ) -> Result<ModifierOp<S>, SemanticsError> {
        self.modifier::<S>(u)?.meet(&self.modifier(u2)?)
    }

    pub fn modifier_join<S: Semiring>(
        &self,
        u: &Word,
        u2: &Word,
    ) -> Result<ModifierOp<S>, SemanticsError> {
        self.modifier::<S>(u)?.join(&self.modifier(u2)?)
    }

    pub fn modifier_complement<S: Semiring>(
        &self,
        u: &Word,
    ) -> Result<ModifierOp<S>, SemanticsError> {
        self.modifier::<S>(u)?.complement()
    }

    /// Evaluates a parsed `m(..) AND/OR/NOT` expression to a projector.
    pub fn modifier_logic<S: Semiring>(
        &self,
        expr: &LogicExpr,
    ) -> Result<ModifierOp<S>, SemanticsError> {
        match expr {
            LogicExpr::Atom(w) => self.modifier(w),
            LogicExpr::And(a, b) => self.modifier_logic::<S>(a)?.meet(&self.modifier_logic(b)?),
            LogicExpr::Or(a, b) => self.modifier_logic::<S>(a)?.join(&self.modifier_logic(b)?),
            LogicExpr::Not(a) => self.modifier_logic::<S>(a)?.complement(),
        }
    }

    /// The binary operator `I_u`.
    pub fn interaction<S: Semiring>(&self, u: &Word) -> Result<InteractionOp<S>, SemanticsError> {
        let support = self.interaction_support(u)?;
        Ok(InteractionOp::new(
            u.to_string(),
            SparseBiVec::indicator(self.basis.clone(), support),
        ))
    }

    pub fn interaction_apply<S: Semiring>(
        &self,
        u: &Word,
        a: &SparseVec<S>,
        b: &SparseVec<S>,
    ) -> Result<SparseVec<S>, SemanticsError> {
        self.interaction::<S>(u)?.apply(a, b)
    }

    /// The joint interaction `I_u ⊙ I_u2`.
    pub fn interaction_meet<S: Semiring>(
        &self,
        u: &Word,
        u2: &Word,
    ) -> Result<InteractionOp<S>, SemanticsError> {
        self.interaction::<S>(u)?.meet(&self.interaction(u2)?)
    }
}
