//! Objects of a sentence and the relations between them.
//!
//! An *object* is a subtree whose root carries an object category. Objects
//! are ordered by the subtree relation and form a tree. For each object `T`
//! this module computes its span, its completion (the largest object above
//! `T` that contains no object disjoint from `T`), its modifier instances and,
//! for pairs of disjoint objects, their interaction instances.

mod classes;
mod report;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::corpus::{
    validate_sentence, CategoryConfig, ConstituentTree, NodePath, Sentence, SentenceId, Violation,
    Word,
};

pub use classes::{ClassKind, CompletionClass};
pub use report::{ClassReport, InteractionReport, ObjectReport, SentenceReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("sentence `{sentence}` fails validation ({} violations)", violations.len())]
    Invalid {
        sentence: SentenceId,
        violations: Vec<Violation>,
    },
    #[error("join at {sentence}{path} has {parts} maximal sub-objects or passes a conjunction node")]
    ConjunctionJoin {
        sentence: SentenceId,
        path: NodePath,
        parts: usize,
    },
}

impl AnalysisError {
    pub fn code(&self) -> &'static str {
        match self {
            AnalysisError::Invalid { .. } => "ValidationFailed",
            AnalysisError::ConjunctionJoin { .. } => "ConjunctionJoin",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectNode {
    pub path: NodePath,
    pub label: String,
    /// First and last word position spanned (inclusive, 1-based).
    pub start: usize,
    pub end: usize,
    pub parent: Option<ObjectId>,
    pub children: Vec<ObjectId>,
    pub depth: usize,
    /// Position of the word when this object is an object-word leaf.
    pub word_position: Option<usize>,
    pub completion: ObjectId,
}

/// The object poset of one sentence with derived spans and completions.
#[derive(Debug, Clone)]
pub struct ObjectAnalysis {
    sentence: SentenceId,
    words: Vec<Word>,
    tree: ConstituentTree,
    objects: Vec<ObjectNode>,
    object_words: BTreeSet<usize>,
}

impl ObjectAnalysis {
    /// Computes the objects of a sentence. The sentence must validate.
    pub fn new(sentence: &Sentence, config: &CategoryConfig) -> Result<Self, AnalysisError> {
        let violations = validate_sentence(sentence, config);
        if !violations.is_empty() {
            return Err(AnalysisError::Invalid {
                sentence: sentence.id.clone(),
                violations,
            });
        }

        let mut objects = Vec::new();
        collect_objects(&sentence.tree, NodePath::root(), None, 0, config, &mut objects);

        // completion: climb while the parent has no other object child
        for i in 0..objects.len() {
            let mut top = i;
            while let Some(ObjectId(p)) = objects[top].parent {
                if objects[p].children.len() != 1 {
                    break;
                }
                top = p;
            }
            objects[i].completion = ObjectId(top);
        }

        let object_words = sentence
            .words
            .iter()
            .enumerate()
            .filter(|(_, w)| config.is_object_word(&w.cat))
            .map(|(i, _)| i + 1)
            .collect();

        Ok(ObjectAnalysis {
            sentence: sentence.id.clone(),
            words: sentence.words.clone(),
            tree: sentence.tree.clone(),
            objects,
            object_words,
        })
    }

    pub fn sentence(&self) -> &SentenceId {
        &self.sentence
    }

    pub fn sentence_words(&self) -> &[Word] {
        &self.words
    }

    pub fn tree(&self) -> &ConstituentTree {
        &self.tree
    }

    pub fn objects(&self) -> &[ObjectNode] {
        &self.objects
    }

    pub fn ids(&self) -> impl Iterator<Item = ObjectId> {
        (0..self.objects.len()).map(ObjectId)
    }

    pub fn object(&self, id: ObjectId) -> &ObjectNode {
        &self.objects[id.0]
    }

    /// The whole-sentence object.
    pub fn root(&self) -> ObjectId {
        ObjectId(0)
    }

    /// Positions of object-word instances in the sentence.
    pub fn object_word_positions(&self) -> &BTreeSet<usize> {
        &self.object_words
    }

    pub fn word(&self, position: usize) -> &Word {
        &self.words[position - 1]
    }

    /// The object-word leaf at a position.
    pub fn leaf(&self, position: usize) -> Option<ObjectId> {
        self.ids()
            .find(|&id| self.object(id).word_position == Some(position))
    }

    /// Ŵ[T]: the instance positions spanned by `id`.
    pub fn span(&self, id: ObjectId) -> BTreeSet<usize> {
        let o = self.object(id);
        (o.start..=o.end).collect()
    }

    /// W[T]: the words spanned by `id`.
    pub fn words(&self, id: ObjectId) -> BTreeSet<Word> {
        self.span(id).into_iter().map(|p| self.word(p).clone()).collect()
    }

    /// Object-word positions inside `id`.
    pub fn object_words_in(&self, id: ObjectId) -> BTreeSet<usize> {
        let o = self.object(id);
        self.object_words.range(o.start..=o.end).copied().collect()
    }

    pub fn text(&self, id: ObjectId) -> String {
        let o = self.object(id);
        (o.start..=o.end)
            .map(|p| self.word(p).surface.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Objects whose text equals `text`, deepest first.
    pub fn find(&self, text: &str) -> Vec<ObjectId> {
        let mut found: Vec<_> = self.ids().filter(|&id| self.text(id) == text).collect();
        found.sort_by_key(|&id| std::cmp::Reverse(self.object(id).depth));
        found
    }

    /// `a ≤ b` in the subtree order.
    pub fn is_below(&self, a: ObjectId, b: ObjectId) -> bool {
        self.object(a).path.0.starts_with(&self.object(b).path.0)
    }

    pub fn disjoint(&self, a: ObjectId, b: ObjectId) -> bool {
        let (x, y) = (self.object(a), self.object(b));
        x.end < y.start || y.end < x.start
    }

    /// `a` lies strictly to the left of `b`.
    pub fn left_of(&self, a: ObjectId, b: ObjectId) -> bool {
        self.object(a).end < self.object(b).start
    }

    pub fn completion(&self, id: ObjectId) -> ObjectId {
        self.object(id).completion
    }

    /// M[T] = Ŵ[completion(T)] − Ŵ[T].
    pub fn modifiers(&self, id: ObjectId) -> BTreeSet<usize> {
        let inner = self.span(id);
        self.span(self.completion(id))
            .difference(&inner)
            .copied()
            .collect()
    }

    /// Most recent common ancestor in the object tree.
    pub fn join(&self, a: ObjectId, b: ObjectId) -> ObjectId {
        let (mut a, mut b) = (a, b);
        while self.object(a).depth > self.object(b).depth {
            a = self.object(a).parent.expect("depth > 0 has a parent");
        }
        while self.object(b).depth > self.object(a).depth {
            b = self.object(b).parent.expect("depth > 0 has a parent");
        }
        while a != b {
            a = self.object(a).parent.expect("objects share the root");
            b = self.object(b).parent.expect("objects share the root");
        }
        a
    }

    /// I[T,T'] = Ŵ[T∨T'] − Ŵ[completion T] − Ŵ[completion T'], or ∅ unless
    /// `a` lies to the left of `b`.
    pub fn interactions(&self, a: ObjectId, b: ObjectId) -> BTreeSet<usize> {
        if !self.left_of(a, b) {
            return BTreeSet::new();
        }
        let left = self.span(self.completion(a));
        let right = self.span(self.completion(b));
        self.span(self.join(a, b))
            .into_iter()
            .filter(|p| !left.contains(p) && !right.contains(p))
            .collect()
    }

    /// All ordered pairs `(a, b)` with `a` left of `b`.
    pub fn left_right_pairs(&self) -> Vec<(ObjectId, ObjectId)> {
        let mut out = Vec::new();
        for a in self.ids() {
            for b in self.ids() {
                if self.left_of(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn words_at(&self, positions: &BTreeSet<usize>) -> BTreeSet<Word> {
        positions.iter().map(|&p| self.word(p).clone()).collect()
    }
}

fn collect_objects(
    node: &ConstituentTree,
    path: NodePath,
    parent: Option<ObjectId>,
    depth: usize,
    config: &CategoryConfig,
    out: &mut Vec<ObjectNode>,
) {
    let (start, end) = node.span();
    let (parent, depth) = if config.is_object(node.label()) {
        let id = ObjectId(out.len());
        let word_position = match node {
            ConstituentTree::Leaf { position, label, .. } if config.is_object_word(label) => {
                Some(*position)
            }
            _ => None,
        };
        out.push(ObjectNode {
            path: path.clone(),
            label: node.label().to_string(),
            start,
            end,
            parent,
            children: Vec::new(),
            depth,
            word_position,
            completion: id,
        });
        if let Some(ObjectId(p)) = parent {
            out[p].children.push(id);
        }
        (Some(id), depth + 1)
    } else {
        (parent, depth)
    };
    for (i, child) in node.children().iter().enumerate() {
        collect_objects(child, path.child(i), parent, depth, config, out);
    }
}
