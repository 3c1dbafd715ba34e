use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("invalid category config JSON: {0}")]
    Json(String),
    #[error("category set `{0}` is empty")]
    Empty(&'static str),
    #[error("category `{0}` is both lexical and phrasal")]
    Overlap(String),
    #[error("object category `{0}` is not declared in `{1}`")]
    UndeclaredObject(String, &'static str),
    #[error("conjunction category `{0}` is not lexical")]
    BadConjunction(String),
}

/// The configured category inventory.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryConfig {
    pub lexical: BTreeSet<String>,
    pub phrasal: BTreeSet<String>,
    pub object_lexical: BTreeSet<String>,
    pub object_phrasal: BTreeSet<String>,
    pub conjunction: String,
    #[serde(default)]
    pub lowercase: bool,
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

impl Default for CategoryConfig {
    fn default() -> Self {
        CategoryConfig {
            lexical: set(&["Adj", "P", "Adv", "Conj", "Det", "N", "Pron", "Poss", "V"]),
            phrasal: set(&["AdjP", "AdvP", "PP", "NP", "VP", "S"]),
            object_lexical: set(&["N", "Pron"]),
            object_phrasal: set(&["NP", "S"]),
            conjunction: "Conj".to_string(),
            lowercase: false,
        }
    }
}

impl CategoryConfig {
    pub fn from_json_str(text: &str) -> Result<Self, ConfigError> {
        let config: CategoryConfig =
            serde_json::from_str(text).map_err(|e| ConfigError::Json(e.to_string()))?;
        config.check()?;
        Ok(config)
    }

    pub fn check(&self) -> Result<(), ConfigError> {
        if self.lexical.is_empty() {
            return Err(ConfigError::Empty("lexical"));
        }
        if self.phrasal.is_empty() {
            return Err(ConfigError::Empty("phrasal"));
        }
        if let Some(c) = self.lexical.intersection(&self.phrasal).next() {
            return Err(ConfigError::Overlap(c.clone()));
        }
        if let Some(c) = self.object_lexical.difference(&self.lexical).next() {
            return Err(ConfigError::UndeclaredObject(c.clone(), "lexical"));
        }
        if let Some(c) = self.object_phrasal.difference(&self.phrasal).next() {
            return Err(ConfigError::UndeclaredObject(c.clone(), "phrasal"));
        }
        if !self.lexical.contains(&self.conjunction) {
            return Err(ConfigError::BadConjunction(self.conjunction.clone()));
        }
        Ok(())
    }

    pub fn is_lexical(&self, label: &str) -> bool {
        self.lexical.contains(label)
    }

    pub fn is_phrasal(&self, label: &str) -> bool {
        self.phrasal.contains(label)
    }

    pub fn is_known(&self, label: &str) -> bool {
        self.is_lexical(label) || self.is_phrasal(label)
    }

    /// Object category of either kind.
    pub fn is_object(&self, label: &str) -> bool {
        self.object_lexical.contains(label) || self.object_phrasal.contains(label)
    }

    /// Lexical category whose words are object words.
    pub fn is_object_word(&self, cat: &str) -> bool {
        self.object_lexical.contains(cat)
    }

    pub fn is_conjunction(&self, label: &str) -> bool {
        self.conjunction == label
    }
}
