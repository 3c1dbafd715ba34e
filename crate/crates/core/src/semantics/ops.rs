use std::collections::BTreeSet;

use crate::semimodule::{SparseBiVec, SparseVec};
use crate::semiring::{Semiring, SemiringError};

use super::SemanticsError;

/// A modifier: the operator `|v⟩ ↦ ψ ⊙ |v⟩` for a coefficient vector `ψ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModifierOp<S: Semiring> {
    label: String,
    psi: SparseVec<S>,
}

fn require_cancellation<S: Semiring>() -> Result<(), SemanticsError> {
    if S::CANCELLATIVE {
        Ok(())
    } else {
        Err(SemanticsError::UnsupportedInstance(S::NAME))
    }
}

fn subtract<S: Semiring>(b: &S, a: &S) -> Result<S, SemanticsError> {
    match S::try_subtract(b, a) {
        Ok(Some(c)) => Ok(c),
        Ok(None) => Err(SemanticsError::SubtractionUndefined),
        Err(SemiringError::UnsupportedInstance(name)) => {
            Err(SemanticsError::UnsupportedInstance(name))
        }
        Err(_) => Err(SemanticsError::SubtractionUndefined),
    }
}

impl<S: Semiring> ModifierOp<S> {
    pub fn new(label: impl Into<String>, psi: SparseVec<S>) -> Self {
        ModifierOp {
            label: label.into(),
            psi,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn coefficients(&self) -> &SparseVec<S> {
        &self.psi
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.psi.support()
    }

    pub fn is_projector(&self) -> bool {
        self.psi.is_projector()
    }

    pub fn apply(&self, v: &SparseVec<S>) -> Result<SparseVec<S>, SemanticsError> {
        Ok(self.psi.apply_pointwise(v)?)
    }

    /// `M ∧ M'`, composition of the two projectors.
    pub fn meet(&self, other: &Self) -> Result<Self, SemanticsError> {
        Ok(ModifierOp {
            label: format!("({} AND {})", self.label, other.label),
            psi: self.psi.frobenius_mult(&other.psi)?,
        })
    }

    /// `M ∨ M' = M + M' − M ∧ M'`. Needs additive cancellation.
    pub fn join(&self, other: &Self) -> Result<Self, SemanticsError> {
        require_cancellation::<S>()?;
        let sum = self.psi.vec_add(&other.psi)?;
        let both = self.psi.frobenius_mult(&other.psi)?;
        let entries = sum
            .coeffs()
            .iter()
            .map(|(&x, s)| Ok((x, subtract(s, &both.get(x))?)))
            .collect::<Result<Vec<_>, SemanticsError>>()?;
        Ok(ModifierOp {
            label: format!("({} OR {})", self.label, other.label),
            psi: SparseVec::from_coeffs(self.psi.basis().clone(), entries)?,
        })
    }

    /// `¬M = 1 − M`. Needs additive cancellation.
    pub fn complement(&self) -> Result<Self, SemanticsError> {
        require_cancellation::<S>()?;
        let one = S::one();
        let entries = (0..self.psi.basis().len())
            .map(|x| Ok((x, subtract(&one, &self.psi.get(x))?)))
            .collect::<Result<Vec<_>, SemanticsError>>()?;
        Ok(ModifierOp {
            label: format!("(NOT {})", self.label),
            psi: SparseVec::from_coeffs(self.psi.basis().clone(), entries)?,
        })
    }
}

/// An interaction: `|a⟩⊗|b⟩ ↦ (+)(ι ⊙ (|a⟩⊗|b⟩))` for a coefficient
/// bivector `ι`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InteractionOp<S: Semiring> {
    label: String,
    iota: SparseBiVec<S>,
}

impl<S: Semiring> InteractionOp<S> {
    pub fn new(label: impl Into<String>, iota: SparseBiVec<S>) -> Self {
        InteractionOp {
            label: label.into(),
            iota,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn coefficients(&self) -> &SparseBiVec<S> {
        &self.iota
    }

    pub fn support(&self) -> BTreeSet<(usize, usize)> {
        self.iota.support()
    }

    pub fn apply(&self, a: &SparseVec<S>, b: &SparseVec<S>) -> Result<SparseVec<S>, SemanticsError> {
        self.apply_tensor(&a.tensor(b)?)
    }

    pub fn apply_tensor(&self, t: &SparseBiVec<S>) -> Result<SparseVec<S>, SemanticsError> {
        Ok(self.iota.bi_mult(t)?.plus_map())
    }

    pub fn meet(&self, other: &Self) -> Result<Self, SemanticsError> {
        Ok(InteractionOp {
            label: format!("{} ⊙ {}", self.label, other.label),
            iota: self.iota.bi_mult(&other.iota)?,
        })
    }
}
