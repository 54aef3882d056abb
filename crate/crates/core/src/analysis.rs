//! Closed-form inradius and its logarithmic bounds.
//!
//! `s_m^{-2} = Σ_{k=1}^m (sqrt(k) - sqrt(k-1))^2`, and for `m ≥ 2`
//!
//! ```text
//! ¼ ln m < ¼ R_m < s_m^{-2} < 1 + ¼ R_{m-1} < ¼ ln m + 5/4
//! ```
//!
//! with `R_m` the `m`-th harmonic number. Natural logarithms throughout.

use serde::{Deserialize, Serialize};

use crate::summation::NeumaierSum;
use crate::{Error, Result};

/// Largest `m` accepted by [`inradius`].
pub const MAX_INRADIUS_DIM: usize = 100_000_000;

/// `sqrt(x)` split as `hi + lo` with `lo` the first-order correction from
/// the exact residual `x - hi²`.
#[inline]
fn split_sqrt(x: f64) -> (f64, f64) {
    let hi = x.sqrt();
    if hi == 0.0 {
        return (0.0, 0.0);
    }
    let residual = (-hi).mul_add(hi, x);
    (hi, residual / (2.0 * hi))
}

#[inline]
fn term_unchecked(k: u64) -> f64 {
    let (a, a_lo) = split_sqrt(k as f64);
    let (b, b_lo) = split_sqrt((k - 1) as f64);
    // a - b is exact for k ≥ 2 (Sterbenz), so the difference keeps full
    // relative precision even though sqrt(k) and sqrt(k-1) nearly cancel.
    let diff = (a - b) + (a_lo - b_lo);
    diff * diff
}

/// `(sqrt(k) - sqrt(k-1))^2 = 1 / (sqrt(k) + sqrt(k-1))^2`, the `k`-th summand.
pub fn term(k: u64) -> Result<f64> {
    if k == 0 {
        return Err(Error::IndexOutOfRange { index: 0, dim: 0 });
    }
    Ok(term_unchecked(k))
}

/// Partial sums of the inradius series and of the harmonic series at one `m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesPoint {
    pub m: usize,
    /// `s_m^{-2}`.
    pub inv_sq: f64,
    /// `R_m`.
    pub harmonic: f64,
    /// `R_{m-1}`, zero at `m = 1`.
    pub harmonic_prev: f64,
}

/// Incremental iterator over [`SeriesPoint`] for `m = 1, 2, 3, ...`.
///
/// Both sums are compensated and accumulated in increasing `k`, so the value
/// at `m` is identical to a fresh summation up to `m`.
#[derive(Debug, Clone, Default)]
pub struct Series {
    k: u64,
    inv_sq: NeumaierSum,
    harmonic: NeumaierSum,
}

impl Series {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Iterator for Series {
    type Item = SeriesPoint;

    fn next(&mut self) -> Option<SeriesPoint> {
        let harmonic_prev = self.harmonic.value();
        self.k += 1;
        self.inv_sq += term_unchecked(self.k);
        self.harmonic += (self.k as f64).recip();
        Some(SeriesPoint {
            m: self.k as usize,
            inv_sq: self.inv_sq.value(),
            harmonic: self.harmonic.value(),
            harmonic_prev,
        })
    }
}

fn series_at(m: usize) -> SeriesPoint {
    Series::new().nth(m - 1).expect("series is infinite")
}

/// `R_m = Σ_{k=1}^m 1/k`.
pub fn harmonic(m: usize) -> Result<f64> {
    if m == 0 {
        return Err(Error::DimensionTooSmall { min: 1, got: 0 });
    }
    Ok(series_at(m).harmonic)
}

/// Inradius of `C_m` with the derived bound quantities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InradiusReport {
    pub m: usize,
    pub s: f64,
    pub s_inv_sq: f64,
    /// `¼ ln m`; absent for `m = 1`.
    pub lower: Option<f64>,
    /// `¼ ln m + 5/4`; absent for `m = 1`.
    pub upper: Option<f64>,
    /// `2 / sqrt(ln m)`; absent for `m = 1`.
    pub asymptote: Option<f64>,
}

impl InradiusReport {
    pub fn from_inv_sq(m: usize, s_inv_sq: f64) -> Self {
        let (lower, upper, asymptote) = if m >= 2 {
            let log = (m as f64).ln();
            (Some(0.25 * log), Some(0.25 * log + 1.25), Some(2.0 / log.sqrt()))
        } else {
            (None, None, None)
        };
        Self { m, s: s_inv_sq.sqrt().recip(), s_inv_sq, lower, upper, asymptote }
    }

    /// `s_m · sqrt(ln m) / 2`, the ratio of the inradius to its asymptote.
    pub fn ratio(&self) -> Option<f64> {
        self.asymptote.map(|a| self.s / a)
    }
}

impl From<SeriesPoint> for InradiusReport {
    fn from(p: SeriesPoint) -> Self {
        Self::from_inv_sq(p.m, p.inv_sq)
    }
}

pub fn inradius(m: usize) -> Result<InradiusReport> {
    if m == 0 {
        return Err(Error::DimensionTooSmall { min: 1, got: 0 });
    }
    if m > MAX_INRADIUS_DIM {
        return Err(Error::DimensionTooLarge { max: MAX_INRADIUS_DIM, got: m });
    }
    Ok(series_at(m).into())
}

/// One failed strict inequality `lhs < rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundViolation {
    pub relation: &'static str,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum BoundCheck {
    Holds,
    Violated(Vec<BoundViolation>),
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        matches!(self, BoundCheck::Holds)
    }
}

impl SeriesPoint {
    /// Evaluates the whole bound chain at this `m`. Requires `m ≥ 2`.
    pub fn bound_check(&self) -> Result<BoundCheck> {
        if self.m < 2 {
            return Err(Error::DimensionTooSmall { min: 2, got: self.m });
        }
        let log = (self.m as f64).ln();
        let lower = 0.25 * log;
        let upper = 0.25 * log + 1.25;
        let relations = [
            ("¼ ln m < s⁻²", lower, self.inv_sq),
            ("s⁻² < ¼ ln m + 5/4", self.inv_sq, upper),
            ("ln m < R_m", log, self.harmonic),
            ("R_m < ln m + 1", self.harmonic, log + 1.0),
            ("¼ ln m < ¼ R_m", lower, 0.25 * self.harmonic),
            ("¼ R_m < s⁻²", 0.25 * self.harmonic, self.inv_sq),
            ("s⁻² < 1 + ¼ R_(m-1)", self.inv_sq, 1.0 + 0.25 * self.harmonic_prev),
            ("1 + ¼ R_(m-1) < 1 + ¼ (ln m + 1)", 1.0 + 0.25 * self.harmonic_prev, 1.0 + 0.25 * (log + 1.0)),
        ];
        let violations: Vec<_> = relations
            .into_iter()
            .filter(|&(_, lhs, rhs)| lhs.partial_cmp(&rhs) != Some(std::cmp::Ordering::Less))
            .map(|(relation, lhs, rhs)| BoundViolation { relation, lhs, rhs })
            .collect();
        Ok(if violations.is_empty() { BoundCheck::Holds } else { BoundCheck::Violated(violations) })
    }
}

pub fn bound_check(m: usize) -> Result<BoundCheck> {
    if m < 2 {
        return Err(Error::DimensionTooSmall { min: 2, got: m });
    }
    if m > MAX_INRADIUS_DIM {
        return Err(Error::DimensionTooLarge { max: MAX_INRADIUS_DIM, got: m });
    }
    series_at(m).bound_check()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[allow(clippy::excessive_precision)]
    // Reference values from a 40-digit summation of 1/(√k+√(k−1))².
    const REFERENCE_INV_SQ: [(usize, f64); 7] = [
        (2, 1.171572875253809902396623),
        (3, 1.272593389687453706002054),
        (4, 1.344390159411944531892269),
        (10, 1.573327445910560895235623),
        (100, 2.14894797353685560617687),
        (10_000, 3.300240259646833999558544),
        (1_000_000, 4.451532806117817779103347),
    ];

    #[test]
    fn terms() {
        assert_eq!(term(1).unwrap(), 1.0);
        assert_abs_diff_eq!(term(2).unwrap(), 3.0 - 2.0 * 2f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(term(2).unwrap(), 0.1715728752538099, epsilon = 1e-16);
        assert!(term(0).is_err());
    }

    #[test]
    fn term_matches_reciprocal_form() {
        let mut worst = 0f64;
        for k in 1..=1_000_000u64 {
            let t = term(k).unwrap();
            let (a, b) = ((k as f64).sqrt(), ((k - 1) as f64).sqrt());
            let reciprocal = ((a + b) * (a + b)).recip();
            let ulps = (t - reciprocal).abs() / (reciprocal * f64::EPSILON);
            worst = worst.max(ulps);
            assert!((t - reciprocal).abs() <= 1e-15 * reciprocal, "k = {k}: {t} vs {reciprocal}");
        }
        assert!(worst <= 4.0, "worst disagreement {worst} ulps");
    }

    #[test]
    fn small_dimensions() {
        let r1 = inradius(1).unwrap();
        assert_eq!((r1.s, r1.s_inv_sq), (1.0, 1.0));
        assert_eq!((r1.lower, r1.upper, r1.asymptote), (None, None, None));
        assert_eq!(r1.ratio(), None);

        let r2 = inradius(2).unwrap();
        assert_relative_eq!(r2.s, (std::f64::consts::PI / 8.0).cos(), max_relative = 1e-15);
        assert_abs_diff_eq!(r2.s, 0.9238795325112867, epsilon = 1e-15);

        let r3 = inradius(3).unwrap();
        assert_abs_diff_eq!(r3.s, 0.8864518862828913, epsilon = 1e-15);

        let r10 = inradius(10).unwrap();
        assert_abs_diff_eq!(r10.lower.unwrap(), 0.575646273248511, epsilon = 1e-12);
        assert_abs_diff_eq!(r10.upper.unwrap(), 1.825646273248511, epsilon = 1e-12);
        assert!(r10.lower.unwrap() < r10.s_inv_sq && r10.s_inv_sq < r10.upper.unwrap());

        assert!(inradius(0).is_err());
        assert!(inradius(MAX_INRADIUS_DIM + 1).is_err());
    }

    #[test]
    fn matches_high_precision_reference() {
        let mut series = Series::new();
        let mut at = 0;
        for (m, expected) in REFERENCE_INV_SQ {
            let p = series.nth(m - at - 1).unwrap();
            at = m;
            assert_eq!(p.m, m);
            assert_relative_eq!(p.inv_sq, expected, max_relative = 1e-13);
            let report = InradiusReport::from(p);
            assert!((report.s - expected.powf(-0.5)).abs() <= 1e-14 * report.s);
        }
    }

    #[test]
    fn report_invariants() {
        for m in [1, 2, 5, 77, 1000] {
            let r = inradius(m).unwrap();
            assert_relative_eq!(r.s, r.s_inv_sq.powf(-0.5), max_relative = 1e-14);
        }
    }

    #[test]
    fn strictly_decreasing() {
        let s: Vec<f64> = Series::new().take(10_000).map(|p| InradiusReport::from(p).s).collect();
        assert!(s.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn harmonic_numbers() {
        assert_eq!(harmonic(1).unwrap(), 1.0);
        assert_eq!(harmonic(2).unwrap(), 1.5);
        let h = harmonic(1_000_000).unwrap();
        assert_relative_eq!(h, 14.392726722865724, max_relative = 1e-15);
        assert!(h > 13.8155 && h < 14.8156);
        assert!(harmonic(0).is_err());
    }

    #[test]
    fn bound_chain() {
        assert!(bound_check(2).unwrap().holds());
        assert!(bound_check(100).unwrap().holds());
        assert_eq!(bound_check(1).unwrap_err(), Error::DimensionTooSmall { min: 2, got: 1 });
        let p = SeriesPoint { m: 10, inv_sq: 2.0, harmonic: 2.9289682539682538, harmonic_prev: 2.8289682539682537 };
        match p.bound_check().unwrap() {
            BoundCheck::Violated(v) => {
                assert!(v.iter().any(|b| b.relation == "s⁻² < ¼ ln m + 5/4"));
            }
            BoundCheck::Holds => panic!("s⁻² = 2 exceeds the upper bound at m = 10"),
        }
    }
}
