#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;

use dsc_core::oracle::DenseAlgebra;
use dsc_core::{
    parse_corpus, BasisIndex, CategoryConfig, Corpus, Semiring, SparseBiVec, SparseVec, Word,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("fixtures")
        .join(name)
}

pub fn fixture_config() -> CategoryConfig {
    let text = std::fs::read_to_string(fixture_path("categories.json")).unwrap();
    CategoryConfig::from_json_str(&text).unwrap()
}

pub fn load_fixture(name: &str) -> Corpus {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    parse_corpus(&text, &fixture_config()).unwrap()
}

pub fn sentences() -> Corpus {
    load_fixture("sentences.txt")
}

pub fn hand_counts() -> BTreeMap<Word, u64> {
    let text = std::fs::read_to_string(fixture_path("counts.json")).unwrap();
    let raw: BTreeMap<String, u64> = serde_json::from_str(&text).unwrap();
    raw.into_iter().map(|(k, v)| (k.parse().unwrap(), v)).collect()
}

pub fn w(s: &str) -> Word {
    s.parse().unwrap()
}

pub const EX1: &str = "(S (NP (Det The) (NP (Adj quick) (NP (Adj brown) (N fox)))) \
    (VP (V jumps) (PP (P over) (NP (NP (Det the) (NP (Adj lazy) (N dog))) \
    (PP (P of) (NP (Det a) (NP (Adj passing) (N lady))))))))";

pub fn ex1() -> Corpus {
    parse_corpus(EX1, &CategoryConfig::default()).unwrap()
}

pub fn dense<S: Semiring>(v: &SparseVec<S>) -> Vec<S> {
    (0..v.basis().len()).map(|i| v.get(i)).collect()
}

pub fn dense_bi<S: Semiring>(t: &SparseBiVec<S>) -> Vec<S> {
    let n = t.basis().len();
    (0..n * n).map(|c| t.get(c / n, c % n)).collect()
}

/// Every sparse vector operation against its dense composite.
pub fn check_semimodule_ops<S: Semiring>(alg: &DenseAlgebra<S>, a: &SparseVec<S>, b: &SparseVec<S>, r: &S) {
    let (da, db) = (dense(a), dense(b));
    assert_eq!(dense(&a.vec_add(b).unwrap()), alg.add(&da, &db));
    assert_eq!(dense(&a.scale(r)), alg.scale(r, &da));
    assert_eq!(dense(&a.conjugate()), alg.conjugate(&da));
    assert_eq!(dense(&a.frobenius_mult(b).unwrap()), alg.frobenius_mult(&da, &db));
    assert_eq!(dense(&a.apply_pointwise(b).unwrap()), alg.apply_pointwise(&da, &db));
    assert_eq!(a.counit(), alg.counit(&da));
    assert_eq!(a.inner_product(b).unwrap(), alg.inner_product(&da, &db));
    let t = a.tensor(b).unwrap();
    assert_eq!(dense_bi(&t), alg.tensor(&da, &db));
    assert_eq!(dense(&t.plus_map()), alg.plus_map(&dense_bi(&t)));
    let s = b.tensor(a).unwrap();
    assert_eq!(dense_bi(&s.bi_mult(&t).unwrap()), alg.bi_mult(&dense_bi(&s), &dense_bi(&t)));
    assert_eq!(a.is_projector(), alg.is_projector(&da));
}

/// A basis of `n` anonymous instances.
pub fn plain_basis(n: usize) -> Arc<BasisIndex> {
    let instances = (1..=n)
        .map(|p| dsc_core::InstanceRef::new(dsc_core::SentenceId::new("x"), p))
        .collect();
    Arc::new(BasisIndex::new(instances))
}

pub fn random_nat_vec(
    rng: &mut ChaCha8Rng,
    basis: &Arc<BasisIndex>,
    max: u64,
) -> SparseVec<dsc_core::Natural> {
    let mut entries = Vec::new();
    for i in 0..basis.len() {
        if rng.gen_bool(0.6) {
            entries.push((i, dsc_core::Natural::new(rng.gen_range(0..=max))));
        }
    }
    SparseVec::from_coeffs(basis.clone(), entries).unwrap()
}

pub fn random_bool_vec(
    rng: &mut ChaCha8Rng,
    basis: &Arc<BasisIndex>,
) -> SparseVec<dsc_core::Boolean> {
    let entries: Vec<_> = (0..basis.len())
        .map(|i| (i, dsc_core::Boolean(rng.gen_bool(0.5))))
        .collect();
    SparseVec::from_coeffs(basis.clone(), entries).unwrap()
}

const NOUNS: &[&str] = &["dog", "cat", "fox"];
const DETS: &[&str] = &["the", "a"];
const ADJS: &[&str] = &["red", "big"];
const VERBS: &[&str] = &["sees", "runs"];
const PREPS: &[&str] = &["of", "near"];

fn pick(rng: &mut ChaCha8Rng, words: &[&'static str]) -> &'static str {
    words.choose(rng).unwrap()
}

/// A bracketed object subtree containing exactly `n` object words.
fn object(rng: &mut ChaCha8Rng, n: usize, allow_triple: bool) -> String {
    if n == 1 {
        return match rng.gen_range(0..5) {
            0 | 1 => {
                if rng.gen_bool(0.15) {
                    "(Pron it)".to_string()
                } else {
                    format!("(N {})", pick(rng, NOUNS))
                }
            }
            2 => format!("(NP (Det {}) {})", pick(rng, DETS), object(rng, 1, allow_triple)),
            3 => format!("(NP (Adj {}) {})", pick(rng, ADJS), object(rng, 1, allow_triple)),
            _ => format!(
                "(S {} (VP (V {}) (Adv fast)))",
                object(rng, 1, allow_triple),
                pick(rng, VERBS)
            ),
        };
    }
    if allow_triple && n >= 3 && rng.gen_bool(0.05) {
        let a = rng.gen_range(1..=n - 2);
        let b = rng.gen_range(1..=n - a - 1);
        return format!(
            "(S {} (VP (VP (V {}) {}) {}))",
            object(rng, a, false),
            pick(rng, VERBS),
            object(rng, b, false),
            object(rng, n - a - b, false)
        );
    }
    let a = rng.gen_range(1..n);
    let (l, r) = (object(rng, a, allow_triple), object(rng, n - a, allow_triple));
    match rng.gen_range(0..6) {
        0 => format!("(NP {l} (PP (P {}) {r}))", pick(rng, PREPS)),
        1 => format!("(S {l} (VP (V {}) {r}))", pick(rng, VERBS)),
        2 => format!(
            "(S {l} (VP (V {}) (PP (P {}) {r})))",
            pick(rng, VERBS),
            pick(rng, PREPS)
        ),
        3 => format!("(NP {l} {r})"),
        4 => format!(
            "(NP (Det {}) (NP {l} (PP (P {}) {r})))",
            pick(rng, DETS),
            pick(rng, PREPS)
        ),
        _ => format!(
            "(NP (Adj {}) (S {l} (VP (V {}) {r})))",
            pick(rng, ADJS),
            pick(rng, VERBS)
        ),
    }
}

/// Corpus text with 1..=3 sentences and at most `max_objects` object words,
/// by rejection on the per-sentence counts.
pub fn random_corpus_text(rng: &mut ChaCha8Rng, max_objects: usize, allow_triple: bool) -> String {
    let counts = loop {
        let k = rng.gen_range(1..=3);
        let counts: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=4)).collect();
        if counts.iter().sum::<usize>() <= max_objects {
            break counts;
        }
    };
    counts
        .iter()
        .enumerate()
        .map(|(k, &n)| format!("# id: r{}\n{}\n", k + 1, object(rng, n, allow_triple)))
        .collect()
}

pub fn random_corpus(rng: &mut ChaCha8Rng, max_objects: usize, allow_triple: bool) -> Corpus {
    let text = random_corpus_text(rng, max_objects, allow_triple);
    parse_corpus(&text, &CategoryConfig::default()).unwrap()
}
