use std::fmt;

use smallvec::SmallVec;

use crate::{Error, Result};

/// Exponents of a monomial, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(SmallVec<[u32; 6]>);

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        ExponentVector(SmallVec::from_elem(0, n))
    }

    pub fn from_slice(e: &[u32]) -> Self {
        ExponentVector(SmallVec::from_slice(e))
    }

    pub fn unit(n: usize, i: usize, e: u32) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = e;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, e: u32) {
        self.0[i] = e;
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &ExponentVector) -> Result<ExponentVector> {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<SmallVec<_>>>()
            .map(ExponentVector)
    }

    /// Product of monomials; exponent overflow is a hard error.
    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        self.checked_mul(other).expect("exponent overflow")
    }

    pub fn checked_pow(&self, k: u32) -> Result<ExponentVector> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<SmallVec<_>>>()
            .map(ExponentVector)
    }

    /// Quotient `self / other`; requires `other | self`.
    pub fn div(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert!(other.divides(self));
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    /// `self / gcd(self, other)`: the colon of a monomial by another.
    pub fn saturating_div(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If this is `x_i^e` with `e > 0`, returns `(i, e)`.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    pub(crate) fn prepend_zeros(&self, k: usize) -> ExponentVector {
        let mut v: SmallVec<[u32; 6]> = SmallVec::from_elem(0, k);
        v.extend_from_slice(&self.0);
        ExponentVector(v)
    }

    pub(crate) fn drop_leading(&self, k: usize) -> ExponentVector {
        ExponentVector(SmallVec::from_slice(&self.0[k..]))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(SmallVec::from_vec(v))
    }
}
