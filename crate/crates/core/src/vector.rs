//! Dense real vectors for model parameters and updates.

use alloc::vec;
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::error::{invalid_arg, shape_err, Result};

/// A length-`d` vector of finite reals (model parameters, local updates,
/// and their estimates).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelVector(Vec<f64>);

impl ModelVector {
    /// Wrap a vector, rejecting non-finite entries.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(invalid_arg!("non-finite entry at index {i}"));
        }
        Ok(ModelVector(values))
    }

    /// Wrap without the finiteness scan. For internal arithmetic whose
    /// inputs are already validated.
    pub(crate) fn from_vec(values: Vec<f64>) -> Self {
        ModelVector(values)
    }

    pub fn zeros(d: usize) -> Self {
        ModelVector(vec![0.0; d])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }

    /// Entrywise sum, erroring on length mismatch.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(shape_err!("vector lengths {} vs {}", self.len(), other.len()));
        }
        Ok(ModelVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Entrywise difference, erroring on length mismatch.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(shape_err!("vector lengths {} vs {}", self.len(), other.len()));
        }
        Ok(ModelVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn scale(&self, c: f64) -> Self {
        ModelVector(self.0.iter().map(|a| a * c).collect())
    }

    /// `self += c * other`. Lengths must already agree.
    pub(crate) fn axpy(&mut self, c: f64, other: &[f64]) {
        debug_assert_eq!(self.0.len(), other.len());
        for (a, b) in self.0.iter_mut().zip(other) {
            *a += c * b;
        }
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|a| a * a).sum()
    }

    /// Squared distance to `other`.
    pub fn dist_sqr(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b) * (a - b))
            .sum()
    }

    /// Entrywise mean of a non-empty set of equal-length vectors.
    pub fn mean_of(vectors: &[Self]) -> Result<Self> {
        let first = vectors
            .first()
            .ok_or_else(|| invalid_arg!("mean of empty vector set"))?;
        let mut acc = vec![0.0; first.len()];
        for v in vectors {
            if v.len() != first.len() {
                return Err(shape_err!("vector lengths {} vs {}", v.len(), first.len()));
            }
            for (a, b) in acc.iter_mut().zip(&v.0) {
                *a += b;
            }
        }
        let inv = 1.0 / vectors.len() as f64;
        for a in &mut acc {
            *a *= inv;
        }
        Ok(ModelVector(acc))
    }
}

impl core::ops::Deref for ModelVector {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl core::ops::Index<usize> for ModelVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}
