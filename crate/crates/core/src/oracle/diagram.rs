//! Dense evaluation of the sentence diagram.
//!
//! Word states, modifier and interaction states are dense vectors over the
//! instance basis. Each modifier instance contributes a spider
//! `μ ∘ (m ⊗ id)`, each interaction instance a pair spider
//! `(μ ⊗ μ) ∘ (id ⊗ σ ⊗ id) ∘ (i ⊗ id ⊗ id)`, and every join is closed by
//! the `id ⊗ ε + ε ⊗ id` box.

use std::collections::{BTreeMap, BTreeSet};

use crate::corpus::{Corpus, SentenceId, Word};
use crate::semiring::Semiring;

use super::dense::DenseAlgebra;
use super::syntax::BruteSentence;
use super::OracleError;

/// Largest basis the dense evaluator accepts.
pub const DENSE_LIMIT: usize = 8;

/// Instance basis and the `m`/`i` sets, built from the literal definitions.
#[derive(Debug, Clone)]
pub struct OracleModel {
    /// `(sentence index, position)` in corpus order.
    pub basis: Vec<(usize, usize)>,
    pub words: BTreeMap<Word, BTreeSet<usize>>,
    pub m: BTreeMap<Word, BTreeSet<usize>>,
    pub i: BTreeMap<Word, BTreeSet<(usize, usize)>>,
}

impl OracleModel {
    pub fn new(corpus: &Corpus) -> Self {
        let config = &corpus.config;
        let mut basis = Vec::new();
        let mut words: BTreeMap<Word, BTreeSet<usize>> = BTreeMap::new();
        let mut m: BTreeMap<Word, BTreeSet<usize>> = BTreeMap::new();
        let mut i: BTreeMap<Word, BTreeSet<(usize, usize)>> = BTreeMap::new();

        for (k, sentence) in corpus.sentences.iter().enumerate() {
            let brute = BruteSentence::new(sentence, config);
            let offset = basis.len();
            let local: BTreeMap<usize, usize> = brute
                .object_words
                .iter()
                .enumerate()
                .map(|(r, &p)| (p, offset + r))
                .collect();
            for (&p, &x) in &local {
                basis.push((k, p));
                words.entry(sentence.words[p - 1].clone()).or_default().insert(x);
            }
            let inside = |t: usize| -> Vec<usize> {
                brute.object_words_in(t).iter().map(|p| local[p]).collect()
            };
            let word_at = |p: usize| sentence.words[p - 1].clone();

            for t in 0..brute.len() {
                for p in brute.modifiers(t) {
                    let u = word_at(p);
                    if !config.is_object_word(&u.cat) {
                        m.entry(u).or_default().extend(inside(t));
                    }
                }
            }
            for a in 0..brute.len() {
                for b in 0..brute.len() {
                    for p in brute.interactions(a, b) {
                        let u = word_at(p);
                        if config.is_object_word(&u.cat) {
                            continue;
                        }
                        let entry = i.entry(u).or_default();
                        for x in inside(a) {
                            for y in inside(b) {
                                entry.insert((x, y));
                            }
                        }
                    }
                }
            }
        }
        OracleModel {
            basis,
            words,
            m,
            i,
        }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    fn indicator<S: Semiring>(&self, set: Option<&BTreeSet<usize>>) -> Vec<S> {
        (0..self.len())
            .map(|x| match set {
                Some(s) if s.contains(&x) => S::one(),
                _ => S::zero(),
            })
            .collect()
    }

    pub fn word_state<S: Semiring>(&self, w: &Word) -> Vec<S> {
        self.indicator(self.words.get(w))
    }

    pub fn modifier_state<S: Semiring>(&self, u: &Word) -> Vec<S> {
        self.indicator(self.m.get(u))
    }

    /// The `n²` state of `i_u`, indexed `x * n + y`.
    pub fn interaction_state<S: Semiring>(&self, u: &Word) -> Vec<S> {
        let n = self.len();
        let set = self.i.get(u);
        (0..n * n)
            .map(|c| match set {
                Some(s) if s.contains(&(c / n, c % n)) => S::one(),
                _ => S::zero(),
            })
            .collect()
    }
}

/// Evaluates sentence diagrams, caching the dense structure maps per size.
pub struct DiagramEvaluator<S> {
    algebras: BTreeMap<usize, DenseAlgebra<S>>,
}

impl<S: Semiring> Default for DiagramEvaluator<S> {
    fn default() -> Self {
        DiagramEvaluator {
            algebras: BTreeMap::new(),
        }
    }
}

impl<S: Semiring> DiagramEvaluator<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn algebra(&mut self, n: usize) -> &DenseAlgebra<S> {
        self.algebras.entry(n).or_insert_with(|| DenseAlgebra::new(n))
    }

    pub fn evaluate(&mut self, corpus: &Corpus, id: &SentenceId) -> Result<Vec<S>, OracleError> {
        let k = corpus
            .sentences
            .iter()
            .position(|s| &s.id == id)
            .ok_or_else(|| OracleError::UnknownSentence(id.to_string()))?;
        let model = OracleModel::new(corpus);
        if model.len() > DENSE_LIMIT {
            return Err(OracleError::TooLarge {
                size: model.len(),
                limit: DENSE_LIMIT,
            });
        }
        let brute = BruteSentence::new(&corpus.sentences[k], &corpus.config);
        let root = (0..brute.len())
            .find(|&t| brute.objects[t].path.is_empty())
            .ok_or_else(|| OracleError::Unsupported(format!("root of {id} is not an object")))?;
        let alg = self.algebra(model.len()).clone();
        eval(&alg, &model, &brute, brute.completion(root))
    }
}

fn eval<S: Semiring>(
    alg: &DenseAlgebra<S>,
    model: &OracleModel,
    brute: &BruteSentence,
    c: usize,
) -> Result<Vec<S>, OracleError> {
    let word_at = |p: usize| &brute.sentence.words[p - 1];
    let span_c = brute.objects[c].span();
    let inner = brute.object_words_in(c);

    let modify = |mut v: Vec<S>, positions: Vec<usize>| {
        for p in positions {
            v = alg.apply_pointwise(&model.modifier_state(word_at(p)), &v);
        }
        v
    };

    match inner.len() {
        0 => Err(OracleError::Unsupported(format!(
            "object without object word in {}",
            brute.sentence.id
        ))),
        1 => {
            let p = *inner.iter().next().unwrap();
            let v = model.word_state(word_at(p));
            Ok(modify(v, span_c.into_iter().filter(|&q| q != p).collect()))
        }
        _ => {
            let leaves: Vec<usize> = inner
                .iter()
                .map(|&p| brute.leaf(p).expect("object-word leaves are objects"))
                .collect();
            let j = leaves[1..]
                .iter()
                .fold(leaves[0], |acc, &t| brute.join(acc, t));
            let parts = brute.maximal_below(j);
            if parts.len() != 2 {
                return Err(OracleError::Unsupported(format!(
                    "join with {} parts in {}",
                    parts.len(),
                    brute.sentence.id
                )));
            }
            let (l, r) = (parts[0], parts[1]);
            let left = eval(alg, model, brute, l)?;
            let right = eval(alg, model, brute, r)?;
            let mut t = alg.tensor(&left, &right);
            let (span_l, span_r) = (brute.objects[l].span(), brute.objects[r].span());
            let span_j = brute.objects[j].span();
            for p in span_j
                .iter()
                .filter(|p| !span_l.contains(p) && !span_r.contains(p))
            {
                t = alg.bi_mult(&model.interaction_state(word_at(*p)), &t);
            }
            let v = alg.plus_map(&t);
            Ok(modify(
                v,
                span_c.difference(&span_j).copied().collect(),
            ))
        }
    }
}

/// One-shot evaluation with a fresh cache.
pub fn evaluate_sentence_diagram<S: Semiring>(
    corpus: &Corpus,
    id: &SentenceId,
) -> Result<Vec<S>, OracleError> {
    DiagramEvaluator::new().evaluate(corpus, id)
}
