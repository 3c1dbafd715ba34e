//! Constituency-annotated corpora.
//!
//! A corpus is an ordered list of sentences, each carrying a labelled
//! constituent tree. Internal nodes are binary, except for conjunction nodes
//! which are ternary with a conjunction leaf in the middle. Leaves carry a
//! lexical category and a surface token.

mod config;
mod parse;
mod validate;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use config::{CategoryConfig, ConfigError};
pub use parse::{parse_corpus, ParseError};
pub use validate::{validate, validate_sentence, Violation, ViolationKind};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SentenceId(pub String);

impl SentenceId {
    pub fn new(id: impl Into<String>) -> Self {
        SentenceId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for SentenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A bare word tagged with its lexical category. Written `surface/CAT`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    pub surface: String,
    pub cat: String,
}

impl Word {
    pub fn new(surface: impl Into<String>, cat: impl Into<String>) -> Self {
        Word {
            surface: surface.into(),
            cat: cat.into(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.surface, self.cat)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed word `{0}` (expected SURFACE/CAT)")]
pub struct WordParseError(pub String);

impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.rsplit_once('/') {
            Some((surface, cat)) if !surface.is_empty() && !cat.is_empty() => {
                Ok(Word::new(surface, cat))
            }
            _ => Err(WordParseError(s.to_string())),
        }
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A word instance: the `position`-th word (1-based) of a sentence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InstanceRef {
    pub sentence: SentenceId,
    pub position: usize,
}

impl InstanceRef {
    pub fn new(sentence: SentenceId, position: usize) -> Self {
        InstanceRef { sentence, position }
    }
}

impl fmt::Display for InstanceRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.sentence, self.position)
    }
}

/// Child indices from the root down to a node. The root is `/`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodePath(pub Vec<usize>);

impl NodePath {
    pub fn root() -> Self {
        NodePath(Vec::new())
    }

    pub fn child(&self, index: usize) -> Self {
        let mut steps = self.0.clone();
        steps.push(index);
        NodePath(steps)
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for NodePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("/");
        }
        for step in &self.0 {
            write!(f, "/{step}")?;
        }
        Ok(())
    }
}

impl Serialize for NodePath {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstituentTree {
    Leaf {
        label: String,
        surface: String,
        /// 1-based word index in the sentence.
        position: usize,
    },
    Internal {
        label: String,
        children: Vec<ConstituentTree>,
    },
}

impl ConstituentTree {
    pub fn label(&self) -> &str {
        match self {
            ConstituentTree::Leaf { label, .. } | ConstituentTree::Internal { label, .. } => label,
        }
    }

    pub fn children(&self) -> &[ConstituentTree] {
        match self {
            ConstituentTree::Leaf { .. } => &[],
            ConstituentTree::Internal { children, .. } => children,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, ConstituentTree::Leaf { .. })
    }

    /// First and last leaf positions under this node.
    pub fn span(&self) -> (usize, usize) {
        match self {
            ConstituentTree::Leaf { position, .. } => (*position, *position),
            ConstituentTree::Internal { children, .. } => {
                let first = children.first().map(|c| c.span().0).unwrap_or(0);
                let last = children.last().map(|c| c.span().1).unwrap_or(0);
                (first, last)
            }
        }
    }

    pub fn node(&self, path: &NodePath) -> Option<&ConstituentTree> {
        path.0
            .iter()
            .try_fold(self, |node, &i| node.children().get(i))
    }

    pub fn leaves(&self) -> Vec<&ConstituentTree> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a ConstituentTree>) {
        match self {
            ConstituentTree::Leaf { .. } => out.push(self),
            ConstituentTree::Internal { children, .. } => {
                children.iter().for_each(|c| c.collect_leaves(out))
            }
        }
    }

    /// Pre-order walk yielding every node with its path.
    pub fn walk(&self) -> Vec<(NodePath, &ConstituentTree)> {
        let mut out = Vec::new();
        let mut stack = vec![(NodePath::root(), self)];
        while let Some((path, node)) = stack.pop() {
            for (i, child) in node.children().iter().enumerate().rev() {
                stack.push((path.child(i), child));
            }
            out.push((path, node));
        }
        out
    }

    pub fn to_bracketed(&self) -> String {
        let mut out = String::new();
        self.write_bracketed(&mut out);
        out
    }

    fn write_bracketed(&self, out: &mut String) {
        match self {
            ConstituentTree::Leaf { label, surface, .. } => {
                out.push('(');
                out.push_str(label);
                out.push(' ');
                out.push_str(surface);
                out.push(')');
            }
            ConstituentTree::Internal { label, children } => {
                out.push('(');
                out.push_str(label);
                for child in children {
                    out.push(' ');
                    child.write_bracketed(out);
                }
                out.push(')');
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub id: SentenceId,
    pub words: Vec<Word>,
    pub tree: ConstituentTree,
}

impl Sentence {
    /// Builds a sentence whose word list is read off the tree's leaves.
    pub fn from_tree(id: SentenceId, tree: ConstituentTree) -> Self {
        let words = tree
            .leaves()
            .into_iter()
            .map(|leaf| match leaf {
                ConstituentTree::Leaf { label, surface, .. } => Word::new(surface, label),
                ConstituentTree::Internal { .. } => unreachable!(),
            })
            .collect();
        Sentence { id, words, tree }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// The word at a 1-based position.
    pub fn word(&self, position: usize) -> Option<&Word> {
        position.checked_sub(1).and_then(|i| self.words.get(i))
    }

    pub fn text(&self, first: usize, last: usize) -> String {
        (first..=last)
            .filter_map(|p| self.word(p))
            .map(|w| w.surface.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub sentences: Vec<Sentence>,
    pub config: CategoryConfig,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("duplicate sentence id `{0}`")]
pub struct DuplicateId(pub SentenceId);

impl Corpus {
    pub fn new(sentences: Vec<Sentence>, config: CategoryConfig) -> Result<Self, DuplicateId> {
        let mut seen = HashSet::new();
        for s in &sentences {
            if !seen.insert(&s.id) {
                return Err(DuplicateId(s.id.clone()));
            }
        }
        Ok(Corpus { sentences, config })
    }

    pub fn sentence(&self, id: &SentenceId) -> Option<&Sentence> {
        self.sentences.iter().find(|s| &s.id == id)
    }

    /// Bracketed text that parses back to an equal corpus under the same config.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.sentences {
            out.push_str("# id: ");
            out.push_str(s.id.as_str());
            out.push('\n');
            out.push_str(&s.tree.to_bracketed());
            out.push('\n');
        }
        out
    }
}

/// All word instances, in sentence order then position order.
pub fn instances(corpus: &Corpus) -> Vec<(InstanceRef, Word)> {
    corpus
        .sentences
        .iter()
        .flat_map(|s| {
            s.words
                .iter()
                .enumerate()
                .map(move |(i, w)| (InstanceRef::new(s.id.clone(), i + 1), w.clone()))
        })
        .collect()
}
