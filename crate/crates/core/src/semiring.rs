//! Involutive commutative semirings.
//!
//! A [`Semiring`] carries `(+, ·, 0, 1)` together with an involution `star`
//! acting like complex conjugation. Instances that satisfy the additive
//! cancellation law advertise it through [`Semiring::CANCELLATIVE`] and then
//! provide a partial subtraction.

use std::fmt::{self, Debug, Display};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemiringError {
    #[error("semiring `{0}` does not satisfy additive cancellation")]
    UnsupportedInstance(&'static str),
    #[error("cannot decode {semiring} value from {found}")]
    Decode { semiring: &'static str, found: String },
    #[error("unknown semiring `{0}` (expected `naturals` or `boolean`)")]
    UnknownKind(String),
}

pub trait Semiring: Clone + Eq + Debug + Send + Sync + 'static {
    /// Name used in configuration and persisted models.
    const NAME: &'static str;
    /// Whether `a + c = b + c` implies `a = b`.
    const CANCELLATIVE: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn star(&self) -> Self;

    /// The unique `c` with `a + c = b`, if any.
    ///
    /// Only cancellative instances override this; everyone else reports
    /// [`SemiringError::UnsupportedInstance`].
    fn try_subtract(_b: &Self, _a: &Self) -> Result<Option<Self>, SemiringError> {
        Err(SemiringError::UnsupportedInstance(Self::NAME))
    }

    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self, SemiringError>;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    fn is_self_conjugate_idempotent(&self) -> bool {
        self.star() == *self && self.is_idempotent()
    }

    /// `1 + 1 + ... + 1` (`n` times).
    fn from_count(n: usize) -> Self {
        let one = Self::one();
        (0..n).fold(Self::zero(), |acc, _| acc.add(&one))
    }

    fn sum<'a, I>(items: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
    {
        items.into_iter().fold(Self::zero(), |acc, x| acc.add(x))
    }
}

/// The natural numbers with arbitrary precision and trivial involution.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Natural(pub BigUint);

impl Natural {
    pub fn new(n: u64) -> Self {
        Natural(BigUint::from(n))
    }
}

impl From<u64> for Natural {
    fn from(n: u64) -> Self {
        Natural::new(n)
    }
}

impl Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Semiring for Natural {
    const NAME: &'static str = "naturals";
    const CANCELLATIVE: bool = true;

    fn zero() -> Self {
        Natural(BigUint::zero())
    }

    fn one() -> Self {
        Natural(BigUint::one())
    }

    fn add(&self, other: &Self) -> Self {
        Natural(&self.0 + &other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Natural(&self.0 * &other.0)
    }

    fn star(&self) -> Self {
        self.clone()
    }

    fn try_subtract(b: &Self, a: &Self) -> Result<Option<Self>, SemiringError> {
        if a.0 <= b.0 {
            Ok(Some(Natural(&b.0 - &a.0)))
        } else {
            Ok(None)
        }
    }

    fn to_json(&self) -> Value {
        Value::String(self.0.to_string())
    }

    fn from_json(value: &Value) -> Result<Self, SemiringError> {
        let err = || SemiringError::Decode {
            semiring: Self::NAME,
            found: value.to_string(),
        };
        match value {
            Value::String(s) => BigUint::from_str(s).map(Natural).map_err(|_| err()),
            Value::Number(n) => n.as_u64().map(Natural::new).ok_or_else(err),
            _ => Err(err()),
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// `({false, true}, or, and)` with identity involution. Not cancellative.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Boolean(pub bool);

impl Debug for Boolean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Display for Boolean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Semiring for Boolean {
    const NAME: &'static str = "boolean";
    const CANCELLATIVE: bool = false;

    fn zero() -> Self {
        Boolean(false)
    }

    fn one() -> Self {
        Boolean(true)
    }

    fn add(&self, other: &Self) -> Self {
        Boolean(self.0 || other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Boolean(self.0 && other.0)
    }

    fn star(&self) -> Self {
        *self
    }

    fn to_json(&self) -> Value {
        Value::Bool(self.0)
    }

    fn from_json(value: &Value) -> Result<Self, SemiringError> {
        value.as_bool().map(Boolean).ok_or_else(|| SemiringError::Decode {
            semiring: Self::NAME,
            found: value.to_string(),
        })
    }

    fn is_zero(&self) -> bool {
        !self.0
    }
}

/// Runtime choice of semiring instance, as named in configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SemiringKind {
    #[default]
    Naturals,
    Boolean,
}

impl SemiringKind {
    pub fn name(self) -> &'static str {
        match self {
            SemiringKind::Naturals => Natural::NAME,
            SemiringKind::Boolean => Boolean::NAME,
        }
    }

    pub fn cancellative(self) -> bool {
        match self {
            SemiringKind::Naturals => Natural::CANCELLATIVE,
            SemiringKind::Boolean => Boolean::CANCELLATIVE,
        }
    }
}

impl FromStr for SemiringKind {
    type Err = SemiringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "naturals" => Ok(SemiringKind::Naturals),
            "boolean" => Ok(SemiringKind::Boolean),
            other => Err(SemiringError::UnknownKind(other.to_string())),
        }
    }
}

impl Display for SemiringKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
