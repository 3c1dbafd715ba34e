use serde::Serialize;

use super::{CategoryConfig, ConstituentTree, Corpus, NodePath, Sentence, SentenceId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum ViolationKind {
    /// Internal node that is neither binary nor a valid conjunction node.
    NonBinary { arity: usize },
    /// Ternary node whose middle child is not a conjunction leaf.
    BadTernary,
    LexicalInternal { label: String },
    PhrasalLeaf { label: String },
    RootNotObject { label: String },
    ObjectWithoutObjectWord { label: String },
}

impl ViolationKind {
    pub fn code(&self) -> &'static str {
        match self {
            ViolationKind::NonBinary { .. } => "NonBinary",
            ViolationKind::BadTernary => "BadTernary",
            ViolationKind::LexicalInternal { .. } => "LexicalInternal",
            ViolationKind::PhrasalLeaf { .. } => "PhrasalLeaf",
            ViolationKind::RootNotObject { .. } => "RootNotObject",
            ViolationKind::ObjectWithoutObjectWord { .. } => "ObjectWithoutObjectWord",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub sentence: SentenceId,
    pub path: NodePath,
    #[serde(flatten)]
    pub kind: ViolationKind,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} at {}{}: {:?}", self.kind.code(), self.sentence, self.path, self.kind)
    }
}

pub fn validate(corpus: &Corpus) -> Vec<Violation> {
    corpus
        .sentences
        .iter()
        .flat_map(|s| validate_sentence(s, &corpus.config))
        .collect()
}

pub fn validate_sentence(sentence: &Sentence, config: &CategoryConfig) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut push = |path: &NodePath, kind| {
        out.push(Violation {
            sentence: sentence.id.clone(),
            path: path.clone(),
            kind,
        })
    };

    let root_label = sentence.tree.label();
    if !config.is_object(root_label) {
        push(
            &NodePath::root(),
            ViolationKind::RootNotObject {
                label: root_label.to_string(),
            },
        );
    }

    for (path, node) in sentence.tree.walk() {
        let label = node.label();
        match node {
            ConstituentTree::Leaf { .. } => {
                if !config.is_lexical(label) {
                    push(&path, ViolationKind::PhrasalLeaf { label: label.into() });
                }
            }
            ConstituentTree::Internal { children, .. } => {
                if !config.is_phrasal(label) {
                    push(&path, ViolationKind::LexicalInternal { label: label.into() });
                }
                match children.len() {
                    2 => {}
                    3 => {
                        let middle = &children[1];
                        if !(middle.is_leaf() && config.is_conjunction(middle.label())) {
                            push(&path, ViolationKind::BadTernary);
                        }
                    }
                    arity => push(&path, ViolationKind::NonBinary { arity }),
                }
            }
        }
        if config.is_object(label) && !spans_object_word(node, config) {
            push(
                &path,
                ViolationKind::ObjectWithoutObjectWord { label: label.into() },
            );
        }
    }
    out
}

fn spans_object_word(node: &ConstituentTree, config: &CategoryConfig) -> bool {
    node.leaves()
        .iter()
        .any(|leaf| config.is_object_word(leaf.label()))
}
