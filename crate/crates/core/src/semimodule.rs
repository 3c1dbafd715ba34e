//! Sparse vectors in the free semimodule `R^X` and in `R^(X×X)`.
//!
//! The basis `X` is an ordered list of word instances. The Frobenius algebra
//! induced by that basis acts coordinatewise: its multiplication `⊙` is the
//! pointwise product, its counit sums coordinates, and the diagonal operators
//! `P_ψ` are represented by the vector `ψ` itself. The comultiplication and
//! unit are never materialized; every operation runs in time proportional to
//! the supports involved.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::corpus::{InstanceRef, SentenceId};
use crate::semiring::{Semiring, SemiringError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemimoduleError {
    #[error("vectors live over different bases")]
    BasisMismatch,
    #[error("basis index {index} out of range for a basis of size {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("malformed vector JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Semiring(#[from] SemiringError),
}

impl SemimoduleError {
    pub fn code(&self) -> &'static str {
        match self {
            SemimoduleError::BasisMismatch => "BasisMismatch",
            SemimoduleError::IndexOutOfRange { .. } => "IndexOutOfRange",
            SemimoduleError::Json(_) => "MalformedVector",
            SemimoduleError::Semiring(_) => "SemiringError",
        }
    }
}

/// The ordered instance basis `X`.
#[derive(Debug, Clone, Default)]
pub struct BasisIndex {
    instances: Vec<InstanceRef>,
    lookup: HashMap<InstanceRef, usize>,
}

impl PartialEq for BasisIndex {
    fn eq(&self, other: &Self) -> bool {
        self.instances == other.instances
    }
}

impl Eq for BasisIndex {}

impl BasisIndex {
    pub fn new(instances: Vec<InstanceRef>) -> Self {
        let lookup = instances
            .iter()
            .enumerate()
            .map(|(i, inst)| (inst.clone(), i))
            .collect();
        BasisIndex { instances, lookup }
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&InstanceRef> {
        self.instances.get(index)
    }

    pub fn position(&self, instance: &InstanceRef) -> Option<usize> {
        self.lookup.get(instance).copied()
    }

    pub fn instances(&self) -> &[InstanceRef] {
        &self.instances
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.instances
                .iter()
                .map(|i| json!([i.sentence.as_str(), i.position]))
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self, SemimoduleError> {
        let bad = || SemimoduleError::Json(format!("bad basis entry in {value}"));
        let entries = value.as_array().ok_or_else(bad)?;
        let instances = entries
            .iter()
            .map(|e| {
                let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(bad)?;
                let sentence = pair[0].as_str().ok_or_else(bad)?;
                let position = pair[1].as_u64().ok_or_else(bad)? as usize;
                Ok(InstanceRef::new(SentenceId::new(sentence), position))
            })
            .collect::<Result<Vec<_>, SemimoduleError>>()?;
        Ok(BasisIndex::new(instances))
    }
}

fn same_basis(a: &Arc<BasisIndex>, b: &Arc<BasisIndex>) -> Result<(), SemimoduleError> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(SemimoduleError::BasisMismatch)
    }
}

fn accumulate<K: Ord, S: Semiring>(map: &mut BTreeMap<K, S>, key: K, value: &S) {
    if value.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(existing) => {
            let sum = existing.add(value);
            if sum.is_zero() {
                map.remove(&key);
            } else {
                *existing = sum;
            }
        }
        None => {
            map.insert(key, value.clone());
        }
    }
}

/// A vector in `H = R^X`. Zero coefficients are never stored.
#[derive(Debug, Clone)]
pub struct SparseVec<S> {
    basis: Arc<BasisIndex>,
    coeffs: BTreeMap<usize, S>,
}

impl<S: Semiring> PartialEq for SparseVec<S> {
    fn eq(&self, other: &Self) -> bool {
        same_basis(&self.basis, &other.basis).is_ok() && self.coeffs == other.coeffs
    }
}

impl<S: Semiring> Eq for SparseVec<S> {}

impl<S: Semiring> SparseVec<S> {
    pub fn zero(basis: Arc<BasisIndex>) -> Self {
        SparseVec {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds a vector from `(index, coefficient)` pairs; repeated indices add.
    pub fn from_coeffs<I>(basis: Arc<BasisIndex>, entries: I) -> Result<Self, SemimoduleError>
    where
        I: IntoIterator<Item = (usize, S)>,
    {
        let len = basis.len();
        let mut coeffs = BTreeMap::new();
        for (index, value) in entries {
            if index >= len {
                return Err(SemimoduleError::IndexOutOfRange { index, len });
            }
            accumulate(&mut coeffs, index, &value);
        }
        Ok(SparseVec { basis, coeffs })
    }

    /// The indicator function of a set of basis positions.
    pub fn indicator<'a, I>(basis: Arc<BasisIndex>, positions: I) -> Self
    where
        I: IntoIterator<Item = &'a usize>,
    {
        let len = basis.len();
        let coeffs = positions
            .into_iter()
            .inspect(|&&p| assert!(p < len, "basis position {p} out of range"))
            .map(|&p| (p, S::one()))
            .collect();
        SparseVec { basis, coeffs }
    }

    pub fn basis_vector(basis: Arc<BasisIndex>, index: usize) -> Self {
        Self::indicator(basis, [index].iter())
    }

    /// The all-ones vector, the unit of `⊙`. Dense in `|X|`.
    pub fn ones(basis: Arc<BasisIndex>) -> Self {
        let all: Vec<usize> = (0..basis.len()).collect();
        Self::indicator(basis, all.iter())
    }

    pub fn basis(&self) -> &Arc<BasisIndex> {
        &self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, S> {
        &self.coeffs
    }

    pub fn get(&self, index: usize) -> S {
        self.coeffs.get(&index).cloned().unwrap_or_else(S::zero)
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.coeffs.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn vec_add(&self, other: &Self) -> Result<Self, SemimoduleError> {
        same_basis(&self.basis, &other.basis)?;
        let mut coeffs = self.coeffs.clone();
        for (&i, v) in &other.coeffs {
            accumulate(&mut coeffs, i, v);
        }
        Ok(SparseVec {
            basis: self.basis.clone(),
            coeffs,
        })
    }

    pub fn scale(&self, factor: &S) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&i, v)| (i, factor.mul(v)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        SparseVec {
            basis: self.basis.clone(),
            coeffs,
        }
    }

    /// Coordinatewise involution.
    pub fn conjugate(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&i, v)| (i, v.star()))
            .collect();
        SparseVec {
            basis: self.basis.clone(),
            coeffs,
        }
    }

    /// The Frobenius multiplication `a ⊙ b`.
    pub fn frobenius_mult(&self, other: &Self) -> Result<Self, SemimoduleError> {
        same_basis(&self.basis, &other.basis)?;
        let coeffs = self
            .coeffs
            .iter()
            .filter_map(|(i, a)| {
                let v = a.mul(other.coeffs.get(i)?);
                (!v.is_zero()).then_some((*i, v))
            })
            .collect();
        Ok(SparseVec {
            basis: self.basis.clone(),
            coeffs,
        })
    }

    /// The operator `P_ψ` with `ψ = self`, applied to `v`.
    pub fn apply_pointwise(&self, v: &Self) -> Result<Self, SemimoduleError> {
        self.frobenius_mult(v)
    }

    pub fn counit(&self) -> S {
        S::sum(self.coeffs.values())
    }

    /// `⟨a|b⟩ = Σ star(a_x)·b_x`.
    pub fn inner_product(&self, other: &Self) -> Result<S, SemimoduleError> {
        same_basis(&self.basis, &other.basis)?;
        Ok(self
            .coeffs
            .iter()
            .filter_map(|(i, a)| other.coeffs.get(i).map(|b| a.star().mul(b)))
            .fold(S::zero(), |acc, x| acc.add(&x)))
    }

    pub fn tensor(&self, other: &Self) -> Result<SparseBiVec<S>, SemimoduleError> {
        same_basis(&self.basis, &other.basis)?;
        let mut coeffs = BTreeMap::new();
        for (&x, a) in &self.coeffs {
            for (&y, b) in &other.coeffs {
                let v = a.mul(b);
                if !v.is_zero() {
                    coeffs.insert((x, y), v);
                }
            }
        }
        Ok(SparseBiVec {
            basis: self.basis.clone(),
            coeffs,
        })
    }

    /// Whether `P_ψ` is a projector: every coordinate is a self-conjugate
    /// idempotent.
    pub fn is_projector(&self) -> bool {
        self.coeffs.values().all(|v| v.is_self_conjugate_idempotent())
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Map<String, Value> = self
            .coeffs
            .iter()
            .map(|(i, v)| (i.to_string(), v.to_json()))
            .collect();
        json!({ "basis": self.basis.to_json(), "coeffs": coeffs })
    }

    pub fn from_json(value: &Value) -> Result<Self, SemimoduleError> {
        let basis = value
            .get("basis")
            .ok_or_else(|| SemimoduleError::Json("missing `basis`".into()))?;
        let basis = Arc::new(BasisIndex::from_json(basis)?);
        let coeffs = value
            .get("coeffs")
            .and_then(Value::as_object)
            .ok_or_else(|| SemimoduleError::Json("missing `coeffs` object".into()))?;
        let entries = coeffs
            .iter()
            .map(|(k, v)| {
                let index = k
                    .parse::<usize>()
                    .map_err(|_| SemimoduleError::Json(format!("bad index `{k}`")))?;
                Ok((index, S::from_json(v)?))
            })
            .collect::<Result<Vec<_>, SemimoduleError>>()?;
        Self::from_coeffs(basis, entries)
    }
}

/// A vector in `H ⊗ H = R^(X×X)`.
#[derive(Debug, Clone)]
pub struct SparseBiVec<S> {
    basis: Arc<BasisIndex>,
    coeffs: BTreeMap<(usize, usize), S>,
}

impl<S: Semiring> PartialEq for SparseBiVec<S> {
    fn eq(&self, other: &Self) -> bool {
        same_basis(&self.basis, &other.basis).is_ok() && self.coeffs == other.coeffs
    }
}

impl<S: Semiring> Eq for SparseBiVec<S> {}

impl<S: Semiring> SparseBiVec<S> {
    pub fn zero(basis: Arc<BasisIndex>) -> Self {
        SparseBiVec {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_coeffs<I>(basis: Arc<BasisIndex>, entries: I) -> Result<Self, SemimoduleError>
    where
        I: IntoIterator<Item = ((usize, usize), S)>,
    {
        let len = basis.len();
        let mut coeffs = BTreeMap::new();
        for ((x, y), value) in entries {
            if let Some(index) = [x, y].into_iter().find(|&i| i >= len) {
                return Err(SemimoduleError::IndexOutOfRange { index, len });
            }
            accumulate(&mut coeffs, (x, y), &value);
        }
        Ok(SparseBiVec { basis, coeffs })
    }

    pub fn indicator<'a, I>(basis: Arc<BasisIndex>, pairs: I) -> Self
    where
        I: IntoIterator<Item = &'a (usize, usize)>,
    {
        let len = basis.len();
        let coeffs = pairs
            .into_iter()
            .inspect(|&&(x, y)| assert!(x < len && y < len, "pair ({x},{y}) out of range"))
            .map(|&pair| (pair, S::one()))
            .collect();
        SparseBiVec { basis, coeffs }
    }

    /// The unit of `bi_mult`. Dense in `|X|²`.
    pub fn ones(basis: Arc<BasisIndex>) -> Self {
        let n = basis.len();
        let pairs: Vec<_> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
        Self::indicator(basis, pairs.iter())
    }

    pub fn basis(&self) -> &Arc<BasisIndex> {
        &self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<(usize, usize), S> {
        &self.coeffs
    }

    pub fn get(&self, x: usize, y: usize) -> S {
        self.coeffs.get(&(x, y)).cloned().unwrap_or_else(S::zero)
    }

    pub fn support(&self) -> BTreeSet<(usize, usize)> {
        self.coeffs.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn vec_add(&self, other: &Self) -> Result<Self, SemimoduleError> {
        same_basis(&self.basis, &other.basis)?;
        let mut coeffs = self.coeffs.clone();
        for (&k, v) in &other.coeffs {
            accumulate(&mut coeffs, k, v);
        }
        Ok(SparseBiVec {
            basis: self.basis.clone(),
            coeffs,
        })
    }

    /// Frobenius multiplication on `H ⊗ H`, coordinatewise over `X × X`.
    pub fn bi_mult(&self, other: &Self) -> Result<Self, SemimoduleError> {
        same_basis(&self.basis, &other.basis)?;
        let coeffs = self
            .coeffs
            .iter()
            .filter_map(|(k, a)| {
                let v = a.mul(other.coeffs.get(k)?);
                (!v.is_zero()).then_some((*k, v))
            })
            .collect();
        Ok(SparseBiVec {
            basis: self.basis.clone(),
            coeffs,
        })
    }

    /// The map `|x⟩⊗|y⟩ ↦ |x⟩ + |y⟩`.
    pub fn plus_map(&self) -> SparseVec<S> {
        let mut coeffs = BTreeMap::new();
        for (&(x, y), v) in &self.coeffs {
            accumulate(&mut coeffs, x, v);
            accumulate(&mut coeffs, y, v);
        }
        SparseVec {
            basis: self.basis.clone(),
            coeffs,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{Boolean, Natural};

    /// The three object-word instances of the fox/dog/lady sentence.
    fn ex1_basis() -> Arc<BasisIndex> {
        let s = SentenceId::new("s1");
        Arc::new(BasisIndex::new(
            [4, 9, 13]
                .into_iter()
                .map(|p| InstanceRef::new(s.clone(), p))
                .collect(),
        ))
    }

    const E4: usize = 0;
    const E9: usize = 1;
    const E13: usize = 2;

    fn v(basis: &Arc<BasisIndex>, entries: &[(usize, u64)]) -> SparseVec<Natural> {
        SparseVec::from_coeffs(
            basis.clone(),
            entries.iter().map(|&(i, n)| (i, Natural::new(n))),
        )
        .unwrap()
    }

    fn bv(basis: &Arc<BasisIndex>, entries: &[((usize, usize), u64)]) -> SparseBiVec<Natural> {
        SparseBiVec::from_coeffs(
            basis.clone(),
            entries.iter().map(|&(k, n)| (k, Natural::new(n))),
        )
        .unwrap()
    }

    #[test]
    fn addition() {
        let b = ex1_basis();
        let e4 = v(&b, &[(E4, 1)]);
        let e9 = v(&b, &[(E9, 1)]);
        assert_eq!(e4.vec_add(&e9).unwrap(), v(&b, &[(E4, 1), (E9, 1)]));
        assert_eq!(e4.vec_add(&SparseVec::zero(b.clone())).unwrap(), e4);
        assert_eq!(
            v(&b, &[(E4, 1)]).vec_add(&v(&b, &[(E4, 2)])).unwrap(),
            v(&b, &[(E4, 3)])
        );
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let b = ex1_basis();
        let x = v(&b, &[(E4, 0), (E9, 2)]);
        assert_eq!(x.support(), BTreeSet::from([E9]));
    }

    #[test]
    fn out_of_range_index() {
        let b = ex1_basis();
        let err = SparseVec::from_coeffs(b, [(7, Natural::new(1))]).unwrap_err();
        assert_eq!(err, SemimoduleError::IndexOutOfRange { index: 7, len: 3 });
    }

    #[test]
    fn frobenius_multiplication() {
        let b = ex1_basis();
        let x = v(&b, &[(E4, 1), (E9, 1)]);
        let y = v(&b, &[(E9, 1), (E13, 1)]);
        assert_eq!(x.frobenius_mult(&y).unwrap(), v(&b, &[(E9, 1)]));
        assert_eq!(x.frobenius_mult(&SparseVec::ones(b.clone())).unwrap(), x);
        assert_eq!(
            v(&b, &[(E4, 2)]).frobenius_mult(&v(&b, &[(E4, 3)])).unwrap(),
            v(&b, &[(E4, 6)])
        );
    }

    #[test]
    fn counit_and_inner_product() {
        let b = ex1_basis();
        let e4 = v(&b, &[(E4, 1)]);
        let e9 = v(&b, &[(E9, 1)]);
        assert_eq!(e4.counit(), Natural::new(1));
        assert_eq!(SparseVec::<Natural>::zero(b.clone()).counit(), Natural::new(0));
        assert_eq!(v(&b, &[(E4, 2), (E9, 1)]).counit(), Natural::new(3));
        assert_eq!(e4.inner_product(&e4).unwrap(), Natural::new(1));
        assert_eq!(e4.inner_product(&e9).unwrap(), Natural::new(0));
        assert_eq!(
            v(&b, &[(E4, 2)]).inner_product(&v(&b, &[(E4, 3)])).unwrap(),
            Natural::new(6)
        );
    }

    #[test]
    fn tensors() {
        let b = ex1_basis();
        let e4 = v(&b, &[(E4, 1)]);
        let rest = v(&b, &[(E9, 1), (E13, 1)]);
        assert_eq!(
            e4.tensor(&rest).unwrap(),
            bv(&b, &[((E4, E9), 1), ((E4, E13), 1)])
        );
        assert!(SparseVec::zero(b.clone()).tensor(&rest).unwrap().is_zero());
        assert_eq!(
            v(&b, &[(E4, 2)]).tensor(&v(&b, &[(E9, 3)])).unwrap(),
            bv(&b, &[((E4, E9), 6)])
        );
    }

    #[test]
    fn bi_multiplication() {
        let b = ex1_basis();
        let x = bv(&b, &[((E4, E9), 1), ((E4, E13), 1)]);
        let y = bv(&b, &[((E4, E9), 1), ((E9, E13), 1)]);
        assert_eq!(x.bi_mult(&y).unwrap(), bv(&b, &[((E4, E9), 1)]));
        assert_eq!(x.bi_mult(&SparseBiVec::ones(b.clone())).unwrap(), x);
        assert_eq!(
            bv(&b, &[((E4, E9), 2)]).bi_mult(&bv(&b, &[((E4, E9), 3)])).unwrap(),
            bv(&b, &[((E4, E9), 6)])
        );
    }

    #[test]
    fn plus_map_examples() {
        let b = ex1_basis();
        assert_eq!(
            bv(&b, &[((E9, E13), 1)]).plus_map(),
            v(&b, &[(E9, 1), (E13, 1)])
        );
        assert_eq!(
            bv(&b, &[((E4, E9), 1), ((E4, E13), 1)]).plus_map(),
            v(&b, &[(E4, 2), (E9, 1), (E13, 1)])
        );
        assert!(SparseBiVec::<Natural>::zero(b).plus_map().is_zero());
    }

    #[test]
    fn pointwise_operators() {
        let b = ex1_basis();
        let x = v(&b, &[(E4, 3), (E13, 1)]);
        assert_eq!(SparseVec::ones(b.clone()).apply_pointwise(&x).unwrap(), x);
        assert!(v(&b, &[(E4, 1)])
            .apply_pointwise(&v(&b, &[(E9, 1)]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn projectors() {
        let b = ex1_basis();
        assert!(v(&b, &[(E4, 1), (E9, 1)]).is_projector());
        assert!(!v(&b, &[(E4, 2)]).is_projector());
        let any_bool =
            SparseVec::from_coeffs(b.clone(), [(E4, Boolean(true)), (E13, Boolean(true))])
                .unwrap();
        assert!(any_bool.is_projector());
    }

    #[test]
    fn basis_mismatch() {
        let b = ex1_basis();
        let other = Arc::new(BasisIndex::new(vec![InstanceRef::new(SentenceId::new("s2"), 1)]));
        let x = SparseVec::<Natural>::zero(b);
        let y = SparseVec::<Natural>::zero(other);
        assert_eq!(x.vec_add(&y), Err(SemimoduleError::BasisMismatch));
        assert_eq!(x.frobenius_mult(&y), Err(SemimoduleError::BasisMismatch));
        assert_eq!(x.inner_product(&y), Err(SemimoduleError::BasisMismatch));
        assert!(x.tensor(&y).is_err());
    }

    #[test]
    fn equal_bases_need_not_share_allocation() {
        let x = v(&ex1_basis(), &[(E4, 1)]);
        let y = v(&ex1_basis(), &[(E9, 1)]);
        assert!(x.vec_add(&y).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let b = ex1_basis();
        let x = v(&b, &[(E4, 2), (E13, 1)]);
        let value = x.to_json();
        assert_eq!(
            value,
            json!({"basis": [["s1",4],["s1",9],["s1",13]], "coeffs": {"0": "2", "2": "1"}})
        );
        assert_eq!(SparseVec::<Natural>::from_json(&value).unwrap(), x);
        assert!(SparseVec::<Boolean>::from_json(&value).is_err());
    }
}
