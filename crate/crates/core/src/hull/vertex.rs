use crate::{Error, Result};

/// Largest dimension for which the `3^m - 1` vertices are materialized.
pub const MAX_VERTEX_DIM: usize = 12;

/// A nonzero point of `{-1, 0, 1}^m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(coords: Vec<i8>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyVector);
        }
        if let Some(bad) = coords.iter().find(|c| !(-1..=1).contains(*c)) {
            return Err(Error::InvalidSignVector(format!("coordinate {bad} is not in {{-1, 0, 1}}")));
        }
        if coords.iter().all(|&c| c == 0) {
            return Err(Error::InvalidSignVector("all coordinates are zero".into()));
        }
        Ok(Self(coords))
    }

    /// `e_1 + ... + e_k` in dimension `m`.
    pub fn leading_ones(m: usize, k: usize) -> Result<Self> {
        if k == 0 || k > m {
            return Err(Error::IndexOutOfRange { index: k, dim: m });
        }
        let mut coords = vec![0; m];
        coords[..k].fill(1);
        Ok(Self(coords))
    }

    pub fn coords(&self) -> &[i8] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Number of nonzero coordinates, i.e. the squared Euclidean norm.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&c| c != 0).count()
    }

    pub fn normalize(&self) -> UnitVertex {
        let scale = (self.weight() as f64).sqrt().recip();
        self.normalize_with(scale)
    }

    fn normalize_with(&self, scale: f64) -> UnitVertex {
        UnitVertex { coords: self.0.iter().map(|&c| f64::from(c) * scale).collect(), source: self.clone() }
    }
}

/// A point of `B_m`: a [`SignVector`] scaled to unit length.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitVertex {
    coords: Vec<f64>,
    source: SignVector,
}

impl UnitVertex {
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn source(&self) -> &SignVector {
        &self.source
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }
}

/// All of `{-1, 0, 1}^m \ {0}` in base-3 counting order.
pub fn enumerate_sign_vectors(m: usize) -> Result<Vec<SignVector>> {
    check_enumerable(m)?;
    let total = 3usize.pow(m as u32);
    let mut out = Vec::with_capacity(total - 1);
    let mut digits = vec![-1i8; m];
    for _ in 0..total {
        if digits.iter().any(|&d| d != 0) {
            out.push(SignVector(digits.clone()));
        }
        // odometer increment over {-1, 0, 1}
        for d in digits.iter_mut() {
            if *d < 1 {
                *d += 1;
                break;
            }
            *d = -1;
        }
    }
    Ok(out)
}

/// The vertex set `B_m`, exactly `3^m - 1` unit vectors.
pub fn enumerate_vertices(m: usize) -> Result<Vec<UnitVertex>> {
    let scales: Vec<f64> = (0..=m).map(|k| if k == 0 { 0.0 } else { (k as f64).sqrt().recip() }).collect();
    Ok(enumerate_sign_vectors(m)?
        .into_iter()
        .map(|v| {
            let scale = scales[v.weight()];
            v.normalize_with(scale)
        })
        .collect())
}

/// `v_k = (e_1 + ... + e_k) / sqrt(k)`, the `k`-th vertex of the canonical facet.
pub fn canonical_vertex(m: usize, k: usize) -> Result<UnitVertex> {
    Ok(SignVector::leading_ones(m, k)?.normalize())
}

fn check_enumerable(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::DimensionTooSmall { min: 1, got: 0 });
    }
    if m > MAX_VERTEX_DIM {
        return Err(Error::TooLargeToEnumerate { what: "vertices", m, cap: MAX_VERTEX_DIM });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn dimension_one() {
        let vs = enumerate_vertices(1).unwrap();
        let mut coords: Vec<f64> = vs.iter().map(|v| v.coords()[0]).collect();
        coords.sort_by(f64::total_cmp);
        assert_eq!(coords, vec![-1.0, 1.0]);
    }

    #[test]
    fn dimension_two() {
        let vs = enumerate_vertices(2).unwrap();
        assert_eq!(vs.len(), 8);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        for expected in [[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0], [h, h], [h, -h], [-h, h], [-h, -h]] {
            let found = vs.iter().any(|v| v.coords().iter().zip(expected).all(|(a, b)| (a - b).abs() < 1e-15));
            assert!(found, "missing {expected:?}");
        }
    }

    #[test]
    fn counts_are_three_to_the_m_minus_one_without_duplicates() {
        for m in 1..=6 {
            let vs = enumerate_sign_vectors(m).unwrap();
            assert_eq!(vs.len(), 3usize.pow(m as u32) - 1);
            let distinct: HashSet<_> = vs.iter().collect();
            assert_eq!(distinct.len(), vs.len());
        }
    }

    #[test]
    fn dimension_four_unit_norms() {
        let vs = enumerate_vertices(4).unwrap();
        assert_eq!(vs.len(), 80);
        for v in &vs {
            assert!((v.norm() - 1.0).abs() < 1e-12);
            let scale = (v.source().weight() as f64).sqrt();
            for (x, &s) in v.coords().iter().zip(v.source().coords()) {
                assert!((x * scale - f64::from(s)).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn enumeration_cap() {
        assert!(enumerate_vertices(12).is_ok());
        assert_eq!(
            enumerate_vertices(13).unwrap_err(),
            Error::TooLargeToEnumerate { what: "vertices", m: 13, cap: 12 }
        );
        assert!(matches!(enumerate_vertices(0), Err(Error::DimensionTooSmall { .. })));
    }

    #[test]
    fn canonical_vertices() {
        assert_eq!(canonical_vertex(3, 1).unwrap().coords(), &[1.0, 0.0, 0.0]);
        let r3 = 3f64.sqrt().recip();
        assert_eq!(canonical_vertex(3, 3).unwrap().coords(), &[r3, r3, r3]);
        let v = canonical_vertex(2, 2).unwrap();
        assert!((v.coords()[0] - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((v.norm() - 1.0).abs() < 1e-15);
        assert_eq!(canonical_vertex(3, 0).unwrap_err(), Error::IndexOutOfRange { index: 0, dim: 3 });
        assert_eq!(canonical_vertex(3, 4).unwrap_err(), Error::IndexOutOfRange { index: 4, dim: 3 });
    }

    #[test]
    fn sign_vector_validation() {
        assert!(SignVector::new(vec![]).is_err());
        assert!(SignVector::new(vec![0, 0]).is_err());
        assert!(SignVector::new(vec![2, 0]).is_err());
        assert_eq!(SignVector::new(vec![1, 0, -1]).unwrap().weight(), 2);
    }
}
