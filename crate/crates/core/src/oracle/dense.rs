use crate::semiring::Semiring;

use super::OracleError;

/// A rows × cols matrix over `S`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Semiring> DenseMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        DenseMatrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    /// The symmetry `H ⊗ H → H ⊗ H`, `|i⟩⊗|j⟩ ↦ |j⟩⊗|i⟩`.
    pub fn swap(n: usize) -> Self {
        Self::from_fn(n * n, n * n, |r, c| {
            let (i, j) = (c / n, c % n);
            if r == j * n + i {
                S::one()
            } else {
                S::zero()
            }
        })
    }

    /// A column vector.
    pub fn column(v: &[S]) -> Self {
        DenseMatrix {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: S) {
        self.data[r * self.cols + c] = value;
    }

    /// Entries of a single-column matrix.
    pub fn to_column(&self) -> Vec<S> {
        assert_eq!(self.cols, 1, "not a column vector");
        self.data.clone()
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self, OracleError> {
        if self.cols != other.rows {
            return Err(OracleError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = out.data[idx].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product, skipping zero entries of `v`.
    pub fn apply(&self, v: &[S]) -> Result<Vec<S>, OracleError> {
        if self.cols != v.len() {
            return Err(OracleError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        let mut out = vec![S::zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, slot) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *slot = slot.add(&a.mul(x));
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product.
    pub fn tensor(&self, other: &Self) -> Self {
        let (rows, cols) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).star())
    }

    pub fn add(&self, other: &Self) -> Result<Self, OracleError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(OracleError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    /// Reorders columns: column `c` of the result is column `f(c)` of `self`.
    pub(crate) fn permute_columns(&self, f: impl Fn(usize) -> usize) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, f(c)).clone())
    }
}

/// The four structure maps of the Frobenius algebra of the standard basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusMaps<S> {
    pub n: usize,
    /// `n × n²`, `|i⟩⊗|j⟩ ↦ δ_ij |i⟩`.
    pub mult: DenseMatrix<S>,
    /// `n × 1`, the all-ones vector.
    pub unit: DenseMatrix<S>,
    /// `n² × n`, `|i⟩ ↦ |i⟩⊗|i⟩`.
    pub comult: DenseMatrix<S>,
    /// `1 × n`, the all-ones covector.
    pub counit: DenseMatrix<S>,
}

pub fn dense_frobenius<S: Semiring>(n: usize) -> FrobeniusMaps<S> {
    let one_if = |b: bool| if b { S::one() } else { S::zero() };
    FrobeniusMaps {
        n,
        mult: DenseMatrix::from_fn(n, n * n, |i, c| one_if(c / n == i && c % n == i)),
        unit: DenseMatrix::from_fn(n, 1, |_, _| S::one()),
        comult: DenseMatrix::from_fn(n * n, n, |r, j| one_if(r / n == j && r % n == j)),
        counit: DenseMatrix::from_fn(1, n, |_, _| S::one()),
    }
}

/// Dense counterparts of the sparse vector operations, all expressed as
/// composites of the Frobenius structure maps.
#[derive(Debug, Clone)]
pub struct DenseAlgebra<S> {
    pub maps: FrobeniusMaps<S>,
    /// `(μ ⊗ μ) ∘ (id ⊗ σ ⊗ id)`: multiplication on `H ⊗ H`.
    pair_mult: DenseMatrix<S>,
    /// `id ⊗ ε + ε ⊗ id`.
    plus: DenseMatrix<S>,
}

impl<S: Semiring> DenseAlgebra<S> {
    pub fn new(n: usize) -> Self {
        let maps = dense_frobenius::<S>(n);
        let id = DenseMatrix::identity(n);
        // (id ⊗ σ ⊗ id) only relabels basis vectors, so composing with it
        // permutes the columns of μ ⊗ μ.
        let mm = maps.mult.tensor(&maps.mult);
        let pair_mult = mm.permute_columns(|c| {
            let (a, b, cc, d) = (c / (n * n * n), (c / (n * n)) % n, (c / n) % n, c % n);
            ((a * n + cc) * n + b) * n + d
        });
        let plus = id
            .tensor(&maps.counit)
            .add(&maps.counit.tensor(&id))
            .expect("same shape");
        DenseAlgebra {
            maps,
            pair_mult,
            plus,
        }
    }

    pub fn n(&self) -> usize {
        self.maps.n
    }

    pub fn pair_mult(&self) -> &DenseMatrix<S> {
        &self.pair_mult
    }

    pub fn plus(&self) -> &DenseMatrix<S> {
        &self.plus
    }

    pub fn add(&self, a: &[S], b: &[S]) -> Vec<S> {
        a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
    }

    pub fn scale(&self, r: &S, a: &[S]) -> Vec<S> {
        let m = DenseMatrix::identity(self.n()).tensor(&DenseMatrix::column(&[r.clone()]));
        m.apply(a).expect("n × n")
    }

    pub fn conjugate(&self, a: &[S]) -> Vec<S> {
        // the row ⟨a| holds the conjugated coefficients
        DenseMatrix::column(a).dagger().data
    }

    pub fn tensor(&self, a: &[S], b: &[S]) -> Vec<S> {
        DenseMatrix::column(a).tensor(&DenseMatrix::column(b)).data
    }

    pub fn frobenius_mult(&self, a: &[S], b: &[S]) -> Vec<S> {
        self.maps.mult.apply(&self.tensor(a, b)).expect("n × n²")
    }

    pub fn counit(&self, a: &[S]) -> S {
        self.maps.counit.apply(a).expect("1 × n")[0].clone()
    }

    /// `⟨a|b⟩ = a† ∘ b`.
    pub fn inner_product(&self, a: &[S], b: &[S]) -> S {
        let m = DenseMatrix::column(a).dagger().compose(&DenseMatrix::column(b));
        m.expect("1 × n by n × 1").get(0, 0).clone()
    }

    pub fn bi_mult(&self, s: &[S], t: &[S]) -> Vec<S> {
        self.pair_mult.apply(&self.tensor(s, t)).expect("n² × n⁴")
    }

    pub fn plus_map(&self, t: &[S]) -> Vec<S> {
        self.plus.apply(t).expect("n × n²")
    }

    /// The operator `P_ψ = μ ∘ (ψ ⊗ id)`.
    pub fn pointwise_operator(&self, psi: &[S]) -> DenseMatrix<S> {
        let state = DenseMatrix::column(psi).tensor(&DenseMatrix::identity(self.n()));
        self.maps.mult.compose(&state).expect("n × n² by n² × n")
    }

    pub fn apply_pointwise(&self, psi: &[S], v: &[S]) -> Vec<S> {
        self.pointwise_operator(psi).apply(v).expect("n × n")
    }

    /// Self-adjoint and idempotent, checked on the operator matrix.
    pub fn is_projector(&self, psi: &[S]) -> bool {
        let p = self.pointwise_operator(psi);
        p.dagger() == p && p.compose(&p).expect("square") == p
    }
}
