//! Serializable dump of an [`ObjectAnalysis`].

use serde::Serialize;

use super::{ClassKind, CompletionClass, ObjectAnalysis};
use crate::corpus::{NodePath, SentenceId, Word};

#[derive(Debug, Clone, Serialize)]
pub struct ObjectReport {
    pub id: usize,
    pub path: NodePath,
    pub label: String,
    pub text: String,
    pub span: [usize; 2],
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    pub completion: usize,
    pub modifiers: Vec<usize>,
    pub modifier_words: Vec<Word>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InteractionReport {
    pub left: usize,
    pub right: usize,
    pub join: usize,
    pub positions: Vec<usize>,
    pub words: Vec<Word>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum ClassReport {
    Leaf {
        kind: &'static str,
        min: usize,
        max: usize,
        members: Vec<usize>,
        position: usize,
    },
    Join {
        kind: &'static str,
        min: usize,
        max: usize,
        members: Vec<usize>,
        join_node: usize,
        left: Box<ClassReport>,
        right: Box<ClassReport>,
    },
    Error {
        error: &'static str,
        detail: String,
    },
}

impl From<&CompletionClass> for ClassReport {
    fn from(class: &CompletionClass) -> Self {
        let members = class.members.iter().map(|m| m.0).collect();
        match &class.kind {
            ClassKind::Leaf { position } => ClassReport::Leaf {
                kind: "leaf",
                min: class.min.0,
                max: class.max.0,
                members,
                position: *position,
            },
            ClassKind::Join {
                left,
                right,
                join_node,
            } => ClassReport::Join {
                kind: "join",
                min: class.min.0,
                max: class.max.0,
                members,
                join_node: join_node.0,
                left: Box::new(left.as_ref().into()),
                right: Box::new(right.as_ref().into()),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SentenceReport {
    pub sentence: SentenceId,
    pub text: String,
    pub objects: Vec<ObjectReport>,
    pub interactions: Vec<InteractionReport>,
    pub class_tree: ClassReport,
}

impl ObjectAnalysis {
    pub fn report(&self) -> SentenceReport {
        let objects = self
            .ids()
            .map(|id| {
                let o = self.object(id);
                let modifiers = self.modifiers(id);
                ObjectReport {
                    id: id.0,
                    path: o.path.clone(),
                    label: o.label.clone(),
                    text: self.text(id),
                    span: [o.start, o.end],
                    parent: o.parent.map(|p| p.0),
                    children: o.children.iter().map(|c| c.0).collect(),
                    completion: o.completion.0,
                    modifier_words: self.words_at(&modifiers).into_iter().collect(),
                    modifiers: modifiers.into_iter().collect(),
                }
            })
            .collect();

        let interactions = self
            .left_right_pairs()
            .into_iter()
            .map(|(a, b)| {
                let positions = self.interactions(a, b);
                InteractionReport {
                    left: a.0,
                    right: b.0,
                    join: self.join(a, b).0,
                    words: self.words_at(&positions).into_iter().collect(),
                    positions: positions.into_iter().collect(),
                }
            })
            .collect();

        let class_tree = match self.completion_classes() {
            Ok(root) => (&root).into(),
            Err(e) => ClassReport::Error {
                error: e.code(),
                detail: e.to_string(),
            },
        };

        SentenceReport {
            sentence: self.sentence.clone(),
            text: self.text(self.root()),
            objects,
            interactions,
            class_tree,
        }
    }
}
