//! Completion classes: objects grouped by their completion.
//!
//! Each class is a chain running from its least member up to the shared
//! completion. A class whose least member is an object word is a leaf class;
//! otherwise the least member joins exactly two disjoint sub-objects, each of
//! which is the top of a child class.

use super::{AnalysisError, ObjectAnalysis, ObjectId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionClass {
    pub min: ObjectId,
    pub max: ObjectId,
    /// Members from `min` up to `max`.
    pub members: Vec<ObjectId>,
    pub kind: ClassKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassKind {
    Leaf {
        position: usize,
    },
    Join {
        left: Box<CompletionClass>,
        right: Box<CompletionClass>,
        join_node: ObjectId,
    },
}

impl CompletionClass {
    /// Every class in the tree, pre-order.
    pub fn flatten(&self) -> Vec<&CompletionClass> {
        let mut out = vec![self];
        if let ClassKind::Join { left, right, .. } = &self.kind {
            out.extend(left.flatten());
            out.extend(right.flatten());
        }
        out
    }
}

impl ObjectAnalysis {
    /// The class tree rooted at the class of the whole sentence.
    pub fn completion_classes(&self) -> Result<CompletionClass, AnalysisError> {
        self.class_of(self.root())
    }

    fn class_of(&self, max: ObjectId) -> Result<CompletionClass, AnalysisError> {
        let mut members: Vec<ObjectId> = self
            .ids()
            .filter(|&id| self.completion(id) == max)
            .collect();
        members.sort_by_key(|&id| std::cmp::Reverse(self.object(id).depth));
        let min = members[0];
        let node = self.object(min);

        let kind = match node.word_position {
            Some(position) => ClassKind::Leaf { position },
            None => {
                let parts = &node.children;
                if parts.len() != 2 || self.crosses_conjunction(min) {
                    return Err(AnalysisError::ConjunctionJoin {
                        sentence: self.sentence.clone(),
                        path: node.path.clone(),
                        parts: parts.len(),
                    });
                }
                let (mut l, mut r) = (parts[0], parts[1]);
                if self.left_of(r, l) {
                    std::mem::swap(&mut l, &mut r);
                }
                ClassKind::Join {
                    left: Box::new(self.class_of(l)?),
                    right: Box::new(self.class_of(r)?),
                    join_node: min,
                }
            }
        };
        Ok(CompletionClass {
            min,
            max,
            members,
            kind,
        })
    }

    /// Whether a ternary node sits between `join` and one of its object
    /// children (including `join` itself).
    fn crosses_conjunction(&self, join: ObjectId) -> bool {
        let top = &self.object(join).path;
        self.object(join).children.iter().any(|&child| {
            let path = &self.object(child).path;
            (top.0.len()..path.0.len()).any(|depth| {
                let prefix = crate::corpus::NodePath(path.0[..depth].to_vec());
                self.tree
                    .node(&prefix)
                    .is_some_and(|n| n.children().len() == 3)
            })
        })
    }
}
