//! Objects, completions, modifiers and interactions computed straight from
//! their defining quantifiers on the raw tree. Slow by design.

use std::collections::BTreeSet;

use crate::corpus::{CategoryConfig, Sentence};

#[derive(Debug, Clone)]
pub struct BruteObject {
    pub path: Vec<usize>,
    pub first: usize,
    pub last: usize,
}

impl BruteObject {
    fn le(&self, other: &BruteObject) -> bool {
        self.path.starts_with(&other.path)
    }

    fn intersects(&self, other: &BruteObject) -> bool {
        self.first <= other.last && other.first <= self.last
    }

    pub fn span(&self) -> BTreeSet<usize> {
        (self.first..=self.last).collect()
    }
}

pub struct BruteSentence<'a> {
    pub sentence: &'a Sentence,
    pub objects: Vec<BruteObject>,
    pub object_words: BTreeSet<usize>,
}

impl<'a> BruteSentence<'a> {
    pub fn new(sentence: &'a Sentence, config: &CategoryConfig) -> Self {
        let objects = sentence
            .tree
            .walk()
            .into_iter()
            .filter(|(_, node)| config.is_object(node.label()))
            .map(|(path, node)| {
                let (first, last) = node.span();
                BruteObject {
                    path: path.0,
                    first,
                    last,
                }
            })
            .collect();
        let object_words = sentence
            .words
            .iter()
            .enumerate()
            .filter(|(_, w)| config.is_object_word(&w.cat))
            .map(|(i, _)| i + 1)
            .collect();
        BruteSentence {
            sentence,
            objects,
            object_words,
        }
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// The object whose node is the leaf at `position`, if any.
    pub fn leaf(&self, position: usize) -> Option<usize> {
        (0..self.len()).find(|&t| {
            let o = &self.objects[t];
            o.first == position && o.last == position && self.is_leaf(t)
        })
    }

    fn is_leaf(&self, t: usize) -> bool {
        let path = crate::corpus::NodePath(self.objects[t].path.clone());
        self.sentence.tree.node(&path).is_some_and(|n| n.is_leaf())
    }

    /// The largest `T' ≥ T` such that every object `T'' ≤ T'` intersects `T`.
    pub fn completion(&self, t: usize) -> usize {
        let me = &self.objects[t];
        (0..self.len())
            .filter(|&c| me.le(&self.objects[c]))
            .filter(|&c| {
                self.objects
                    .iter()
                    .filter(|o| o.le(&self.objects[c]))
                    .all(|o| o.intersects(me))
            })
            .min_by_key(|&c| self.objects[c].path.len())
            .expect("T itself qualifies")
    }

    pub fn modifiers(&self, t: usize) -> BTreeSet<usize> {
        let inner = self.objects[t].span();
        self.objects[self.completion(t)]
            .span()
            .difference(&inner)
            .copied()
            .collect()
    }

    /// The smallest object above both.
    pub fn join(&self, a: usize, b: usize) -> usize {
        (0..self.len())
            .filter(|&c| {
                self.objects[a].le(&self.objects[c]) && self.objects[b].le(&self.objects[c])
            })
            .max_by_key(|&c| self.objects[c].path.len())
            .expect("the root is above everything")
    }

    pub fn left_of(&self, a: usize, b: usize) -> bool {
        self.objects[a].last < self.objects[b].first
    }

    pub fn interactions(&self, a: usize, b: usize) -> BTreeSet<usize> {
        if !self.left_of(a, b) {
            return BTreeSet::new();
        }
        let ca = self.objects[self.completion(a)].span();
        let cb = self.objects[self.completion(b)].span();
        self.objects[self.join(a, b)]
            .span()
            .into_iter()
            .filter(|p| !ca.contains(p) && !cb.contains(p))
            .collect()
    }

    /// Object-word positions inside object `t`.
    pub fn object_words_in(&self, t: usize) -> BTreeSet<usize> {
        let o = &self.objects[t];
        self.object_words
            .iter()
            .filter(|&&p| o.first <= p && p <= o.last)
            .copied()
            .collect()
    }

    /// Objects strictly below `t` with nothing strictly in between.
    pub fn maximal_below(&self, t: usize) -> Vec<usize> {
        let top = &self.objects[t];
        let below: Vec<usize> = (0..self.len())
            .filter(|&c| c != t && self.objects[c].le(top))
            .collect();
        let mut out: Vec<usize> = below
            .iter()
            .copied()
            .filter(|&c| {
                !below
                    .iter()
                    .any(|&d| d != c && self.objects[c].le(&self.objects[d]))
            })
            .collect();
        out.sort_by_key(|&c| self.objects[c].first);
        out
    }
}
