use itertools::Itertools;

use crate::{Error, Result};

/// An element of the hyperoctahedral group: the isometries of the cube
/// `[-1, 1]^m`, i.e. a coordinate permutation combined with sign flips.
///
/// Acting on `x`, coordinate `i` is multiplied by `signs[i]` and moved to
/// slot `perm[i]`: `(g·x)[perm[i]] = signs[i] * x[i]`. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(m: usize) -> Self {
        Self { perm: (0..m).collect(), signs: vec![1; m] }
    }

    pub fn from_parts(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let m = perm.len();
        if signs.len() != m {
            return Err(Error::InvalidPermutation(format!(
                "{} signs for a permutation of {} elements",
                signs.len(),
                m
            )));
        }
        let mut seen = vec![false; m];
        for &p in &perm {
            if p >= m || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPermutation(format!("{perm:?} is not a bijection on 0..{m}")));
            }
        }
        if let Some(s) = signs.iter().find(|s| s.abs() != 1) {
            return Err(Error::InvalidPermutation(format!("sign {s} is not ±1")));
        }
        Ok(Self { perm, signs })
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }

    /// `g·x`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.dim(), "dimension mismatch");
        let mut out = vec![0.0; x.len()];
        for ((&p, &s), &xi) in self.perm.iter().zip(&self.signs).zip(x) {
            out[p] = f64::from(s) * xi;
        }
        out
    }

    /// `g⁻¹·y`, without materializing the inverse.
    pub fn apply_inverse(&self, y: &[f64]) -> Vec<f64> {
        assert_eq!(y.len(), self.dim(), "dimension mismatch");
        self.perm.iter().zip(&self.signs).map(|(&p, &s)| f64::from(s) * y[p]).collect()
    }

    /// `self ∘ other`, the element acting as `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        let (perm, signs) =
            other.perm.iter().zip(&other.signs).map(|(&p, &s)| (self.perm[p], self.signs[p] * s)).unzip();
        Self { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let m = self.dim();
        let mut perm = vec![0; m];
        let mut signs = vec![1; m];
        for (i, (&p, &s)) in self.perm.iter().zip(&self.signs).enumerate() {
            perm[p] = i;
            signs[p] = s;
        }
        Self { perm, signs }
    }

    /// `2^m · m!`.
    pub fn group_order(m: usize) -> u128 {
        (1..=m as u128).product::<u128>() << m
    }

    /// Every group element: permutations in lexicographic order, sign
    /// patterns in binary counting order within each permutation.
    pub fn all(m: usize) -> impl Iterator<Item = Self> {
        (0..m).permutations(m).flat_map(move |perm| {
            (0u64..1 << m).map(move |mask| Self {
                perm: perm.clone(),
                signs: (0..m).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect(),
            })
        })
    }
}
