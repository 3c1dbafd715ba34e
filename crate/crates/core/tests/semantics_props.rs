mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{dense, w};
use dsc_core::oracle::{DiagramEvaluator, OracleModel};
use dsc_core::{
    Boolean, Corpus, InstanceRef, Natural, Semiring, SemanticModel, SemiringKind, SparseVec, Word,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn model(corpus: &Corpus) -> SemanticModel {
    SemanticModel::build(corpus, SemiringKind::Naturals).unwrap()
}

fn object_words(m: &SemanticModel) -> Vec<Word> {
    m.words().cloned().collect()
}

#[test]
fn interaction_on_words_matches_pair_sum() {
    let m = model(&common::sentences());
    let words = object_words(&m);
    for u in m.non_object_words() {
        for a in &words {
            for b in &words {
                let pairs = m.interaction_pairs(&u, a, b).unwrap();
                assert!(pairs.iter().all(|(x, y)| x != y));
                let mut expected = SparseVec::<Natural>::zero(m.basis().clone());
                for &(x, y) in &pairs {
                    let e = |i| SparseVec::basis_vector(m.basis().clone(), i);
                    expected = expected.vec_add(&e(x).vec_add(&e(y)).unwrap()).unwrap();
                }
                let got = m
                    .interaction_apply(&u, &m.word_vector(a).unwrap(), &m.word_vector(b).unwrap())
                    .unwrap();
                assert_eq!(got, expected, "{u} on {a}, {b}");
            }
        }
    }
}

#[test]
fn joins_on_indicators_never_need_absent_subtraction() {
    let m = model(&common::sentences());
    let words: Vec<_> = m.non_object_words().into_iter().collect();
    for u in &words {
        for v in &words {
            let op = m.modifier_join::<Natural>(u, v).unwrap();
            let expected: BTreeSet<usize> = m
                .modifier_support(u)
                .unwrap()
                .union(m.modifier_support(v).unwrap())
                .copied()
                .collect();
            assert_eq!(op.support(), expected);
            assert!(op.is_projector());
        }
    }
}

#[test]
fn logic_expressions() {
    let m = model(&common::ex1());
    let eval = |text: &str| {
        let expr = dsc_core::semantics::parse_logic(text).unwrap();
        m.modifier_logic::<Natural>(&expr).map(|op| op.support())
    };
    assert_eq!(eval("m(lazy/Adj) OR m(passing/Adj)").unwrap(), [1, 2].into());
    assert_eq!(eval("NOT m(lazy/Adj)").unwrap(), [0, 2].into());
    assert_eq!(eval("m(The/Det) AND m(quick/Adj)").unwrap(), [0].into());
    assert_eq!(eval("NOT (m(lazy/Adj) OR m(The/Det))").unwrap(), [2].into());
    let expr = dsc_core::semantics::parse_logic("NOT m(lazy/Adj)").unwrap();
    assert_eq!(
        m.modifier_logic::<Boolean>(&expr).unwrap_err().code(),
        "UnsupportedInstance"
    );
}

/// Supports expressed as instance sets, independent of basis order.
fn instance_view(m: &SemanticModel) -> BTreeMap<Word, (BTreeSet<InstanceRef>, BTreeSet<(InstanceRef, InstanceRef)>)> {
    let at = |i: usize| m.basis().get(i).unwrap().clone();
    m.non_object_words()
        .into_iter()
        .map(|u| {
            let ms = m.modifier_support(&u).unwrap().iter().map(|&i| at(i)).collect();
            let is = m
                .interaction_support(&u)
                .unwrap()
                .iter()
                .map(|&(x, y)| (at(x), at(y)))
                .collect();
            (u, (ms, is))
        })
        .collect()
}

#[test]
fn build_is_order_insensitive() {
    let corpus = common::sentences();
    let mut reversed = corpus.clone();
    reversed.sentences.reverse();
    let (a, b) = (model(&corpus), model(&reversed));
    assert_ne!(a.basis(), b.basis());
    assert_eq!(instance_view(&a), instance_view(&b));
    let words = object_words(&a);
    for x in &words {
        assert_eq!(a.squared_norm::<Natural>(x), b.squared_norm::<Natural>(x));
        for y in &words {
            for k in 0..3 {
                assert_eq!(a.ip_k::<Natural>(k, x, y), b.ip_k::<Natural>(k, x, y));
            }
        }
    }
}

#[test]
fn persistence_round_trip() {
    for corpus in [common::sentences(), common::load_fixture("conjunctions.txt")] {
        let m = model(&corpus);
        let json = m.to_json();
        let text = serde_json::to_string(&json).unwrap();
        let back = SemanticModel::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back.to_json(), json);
    }
}

#[test]
fn supports_match_literal_definitions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut corpora = vec![common::sentences(), common::load_fixture("conjunctions.txt")];
    corpora.extend((0..200).map(|_| common::random_corpus(&mut rng, 8, true)));
    for corpus in corpora {
        let m = model(&corpus);
        let oracle = OracleModel::new(&corpus);
        for u in m.non_object_words() {
            let expected_m = oracle.m.get(&u).cloned().unwrap_or_default();
            let expected_i = oracle.i.get(&u).cloned().unwrap_or_default();
            assert_eq!(m.modifier_support(&u).unwrap(), &expected_m, "m of {u}");
            assert_eq!(m.interaction_support(&u).unwrap(), &expected_i, "i of {u}");
        }
    }
}

fn check_sentence_vectors<S: Semiring>(corpus: &Corpus, eval: &mut DiagramEvaluator<S>) {
    let m = model(corpus);
    for s in &corpus.sentences {
        match (m.sentence_vector::<S>(&s.id), eval.evaluate(corpus, &s.id)) {
            (Ok(v), Ok(d)) => assert_eq!(dense(&v), d, "{}", s.id),
            (Err(e), Err(_)) => assert_eq!(e.code(), "ConjunctionJoin"),
            (a, b) => panic!("{}: sparse {a:?} but oracle {b:?}", s.id),
        }
    }
}

#[test]
fn fixture_sentence_vectors_match_oracle() {
    let corpus = common::sentences();
    let mut nat = DiagramEvaluator::<Natural>::new();
    let mut boolean = DiagramEvaluator::<Boolean>::new();
    // one sentence at a time, then neighbouring pairs, to stay within the dense limit
    let single = corpus.sentences.iter().map(|s| vec![s.clone()]);
    let pairs = corpus.sentences.windows(2).map(|p| p.to_vec());
    for sentences in single.chain(pairs) {
        let part = Corpus::new(sentences, corpus.config.clone()).unwrap();
        check_sentence_vectors(&part, &mut nat);
        check_sentence_vectors(&part, &mut boolean);
    }
}

#[test]
fn boolean_supports_equal_natural_supports() {
    let corpus = common::sentences();
    let m = model(&corpus);
    for u in m.non_object_words() {
        let bm = m.modifier::<Boolean>(&u).unwrap().support();
        let nm = m.modifier::<Natural>(&u).unwrap().support();
        assert_eq!(bm, nm);
        assert_eq!(
            m.interaction::<Boolean>(&u).unwrap().support(),
            m.interaction::<Natural>(&u).unwrap().support()
        );
    }
    for s in &corpus.sentences {
        let b = m.sentence_vector::<Boolean>(&s.id).unwrap().support();
        let n = m.sentence_vector::<Natural>(&s.id).unwrap().support();
        assert_eq!(b, n, "{}", s.id);
    }
    assert_eq!(m.squared_norm::<Boolean>(&w("dog/N")).unwrap(), Boolean(true));
}
