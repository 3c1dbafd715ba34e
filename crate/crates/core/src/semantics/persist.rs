//! JSON form of a model.
//!
//! The stored supports are redundant with the stored corpus; loading rebuilds
//! the model from the corpus and refuses files whose supports disagree.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::corpus::{parse_corpus, CategoryConfig, Word};
use crate::semimodule::BasisIndex;
use crate::semiring::SemiringKind;

use super::{SemanticModel, SemanticsError};

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct ModelFile {
    semiring: String,
    config: CategoryConfig,
    corpus: String,
    basis: Value,
    word_index: BTreeMap<Word, BTreeSet<usize>>,
    modifier_support: BTreeMap<Word, BTreeSet<usize>>,
    interaction_support: BTreeMap<Word, BTreeSet<(usize, usize)>>,
    object_rank: Vec<usize>,
}

impl SemanticModel {
    pub fn to_json(&self) -> Value {
        let file = ModelFile {
            semiring: self.semiring.name().to_string(),
            config: self.corpus.config.clone(),
            corpus: self.corpus.to_text(),
            basis: self.basis.to_json(),
            word_index: self.word_index.clone(),
            modifier_support: self.modifier_support.clone(),
            interaction_support: self.interaction_support.clone(),
            object_rank: self.object_rank.clone(),
        };
        serde_json::to_value(file).expect("model serializes")
    }

    pub fn from_json(value: &Value) -> Result<Self, SemanticsError> {
        let persist = |e: &dyn std::fmt::Display| SemanticsError::Persist(e.to_string());
        let file: ModelFile = serde_json::from_value(value.clone()).map_err(|e| persist(&e))?;
        let semiring: SemiringKind = file.semiring.parse().map_err(|e| persist(&e))?;
        file.config.check().map_err(|e| persist(&e))?;
        let corpus = parse_corpus(&file.corpus, &file.config).map_err(|e| persist(&e))?;
        let model = SemanticModel::build(&corpus, semiring)?;

        let basis = BasisIndex::from_json(&file.basis)?;
        check_invariants(&file, &basis)?;
        if basis != *model.basis {
            return Err(SemanticsError::ModelMismatch("basis"));
        }
        if file.word_index != model.word_index {
            return Err(SemanticsError::ModelMismatch("wordIndex"));
        }
        if file.modifier_support != model.modifier_support {
            return Err(SemanticsError::ModelMismatch("modifierSupport"));
        }
        if file.interaction_support != model.interaction_support {
            return Err(SemanticsError::ModelMismatch("interactionSupport"));
        }
        if file.object_rank != model.object_rank {
            return Err(SemanticsError::ModelMismatch("objectRank"));
        }
        Ok(model)
    }
}

/// Structural checks on the stored sets, independent of the corpus.
fn check_invariants(file: &ModelFile, basis: &BasisIndex) -> Result<(), SemanticsError> {
    let n = basis.len();
    let bad = |m: String| Err(SemanticsError::Persist(m));
    if file.object_rank.len() != n {
        return bad(format!("objectRank has {} entries for {n} instances", file.object_rank.len()));
    }
    let all = file
        .word_index
        .values()
        .chain(file.modifier_support.values())
        .flatten();
    if let Some(x) = all.into_iter().find(|&&x| x >= n) {
        return bad(format!("instance {x} out of range"));
    }
    let mut seen = BTreeSet::new();
    for set in file.word_index.values() {
        for &x in set {
            if !seen.insert(x) {
                return bad(format!("instance {x} listed under two words"));
            }
        }
    }
    for (u, pairs) in &file.interaction_support {
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return bad(format!("pair ({x},{y}) of {u} out of range"));
            }
            let (a, b) = (&basis.instances()[x], &basis.instances()[y]);
            if a.sentence != b.sentence || a.position >= b.position {
                return bad(format!("pair ({x},{y}) of {u} is not left-to-right in one sentence"));
            }
        }
    }
    Ok(())
}
