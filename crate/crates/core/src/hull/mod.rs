//! The polytope `C_m = conv(B_m)` and its oracles.
//!
//! Every facet of `C_m` is the image, under some signed permutation, of the
//! simplex spanned by `v_1, ..., v_m` whose outer normal is
//! `u_i = sqrt(i) - sqrt(i-1)`. Since `u` is positive and strictly
//! decreasing, the facet maximizing `<g·u, x>` over the group pairs the
//! largest `|x_i|` with the largest `u_i`, so the gauge is a sorted dot
//! product. The support function follows the same way from the vertex side.

mod group;
mod vertex;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use group::SignedPermutation;
pub use vertex::{
    canonical_vertex, enumerate_sign_vectors, enumerate_vertices, SignVector, UnitVertex, MAX_VERTEX_DIM,
};

use crate::{Error, Result};

/// Largest dimension for which the facet orbit (size `2^m · m!`) is listed.
pub const MAX_ORBIT_DIM: usize = 5;

/// Three-way point classification against the unit level set of a gauge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    Inside,
    Boundary,
    Outside,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::Inside => "inside",
            Membership::Boundary => "boundary",
            Membership::Outside => "outside",
        })
    }
}

/// Outer normal of a facet of `C_m`, scaled so the facet is `{<n, x> = 1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct FacetNormal {
    coords: Vec<f64>,
    canonical: bool,
}

impl FacetNormal {
    pub fn new(coords: Vec<f64>) -> Self {
        let canonical = coords.iter().all(|&c| c > 0.0) && coords.windows(2).all(|w| w[0] > w[1]);
        Self { coords, canonical }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    pub fn norm_squared(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum()
    }

    /// The orbit representative: absolute values sorted descending.
    pub fn canonical_form(&self) -> FacetNormal {
        FacetNormal::new(sorted_abs_desc(&self.coords))
    }
}

/// Where a nonzero vector sits in the fan of cones `g(K)`, `K = cone(v_1..v_m)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeLocation {
    group_element: SignedPermutation,
    coefficients: Vec<f64>,
}

impl ConeLocation {
    /// The `g` with `g⁻¹·w` nonincreasing and nonnegative.
    pub fn group_element(&self) -> &SignedPermutation {
        &self.group_element
    }

    /// `c_k = sqrt(k) (y_k - y_{k+1})` where `y = g⁻¹·w` and `y_{m+1} = 0`.
    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// `Σ c_k v_k`, which equals `g⁻¹·w`.
    pub fn reconstruct_sorted(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.coefficients.len()];
        let mut acc = 0.0;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            acc += c / ((k + 1) as f64).sqrt();
            out[k] = acc;
        }
        out
    }

    /// `g·Σ c_k v_k`, which equals `w`.
    pub fn reconstruct(&self) -> Vec<f64> {
        self.group_element.apply(&self.reconstruct_sorted())
    }

    /// True when `w` is interior to its cone (all coefficients positive).
    pub fn is_generic(&self) -> bool {
        self.coefficients.iter().all(|&c| c > 0.0)
    }
}

/// `C_m` for a fixed dimension, with the square roots it needs cached.
#[derive(Debug, Clone, PartialEq)]
pub struct Polytope {
    /// `sqrt(k)` for `k = 0..=m`.
    roots: Vec<f64>,
    /// Canonical facet normal `u`.
    normal: Vec<f64>,
}

impl Polytope {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::DimensionTooSmall { min: 1, got: 0 });
        }
        let roots: Vec<f64> = (0..=m).map(|k| (k as f64).sqrt()).collect();
        // 1/(sqrt(i) + sqrt(i-1)) avoids the cancellation in the difference form.
        let normal = roots.windows(2).map(|w| (w[1] + w[0]).recip()).collect();
        Ok(Self { roots, normal })
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn facet_normal(&self) -> FacetNormal {
        FacetNormal::new(self.normal.clone())
    }

    pub fn canonical_vertex(&self, k: usize) -> Result<UnitVertex> {
        canonical_vertex(self.dim(), k)
    }

    pub fn vertices(&self) -> Result<Vec<UnitVertex>> {
        enumerate_vertices(self.dim())
    }

    /// Minkowski gauge `inf{λ > 0 : x ∈ λ C_m}`.
    pub fn gauge(&self, x: &[f64]) -> Result<f64> {
        self.check(x)?;
        Ok(sorted_abs_desc(x).iter().zip(&self.normal).map(|(y, u)| y * u).sum())
    }

    pub fn membership(&self, x: &[f64], tol: f64) -> Result<Membership> {
        if tol.is_nan() || tol < 0.0 {
            return Err(Error::NegativeTolerance(tol));
        }
        let g = self.gauge(x)?;
        Ok(if (g - 1.0).abs() <= tol {
            Membership::Boundary
        } else if g < 1.0 {
            Membership::Inside
        } else {
            Membership::Outside
        })
    }

    /// Support function `max_{p ∈ C_m} <p, w>`, attained at some `g·v_k`.
    pub fn support(&self, w: &[f64]) -> Result<f64> {
        self.check(w)?;
        let mut prefix = 0.0;
        let mut best = f64::NEG_INFINITY;
        for (k, y) in sorted_abs_desc(w).into_iter().enumerate() {
            prefix += y;
            best = best.max(prefix / self.roots[k + 1]);
        }
        Ok(best)
    }

    /// Locates `w` in the cone `g(K)` containing it.
    ///
    /// Coordinates are ordered by descending absolute value with ties kept in
    /// index order; zero coordinates get sign `+1`.
    pub fn cone_locate(&self, w: &[f64]) -> Result<ConeLocation> {
        self.check(w)?;
        if w.iter().all(|&x| x == 0.0) {
            return Err(Error::Degenerate("cannot locate the zero vector"));
        }
        let mut order: Vec<usize> = (0..w.len()).collect();
        order.sort_by(|&a, &b| w[b].abs().total_cmp(&w[a].abs()));
        let sorted: Vec<f64> = order.iter().map(|&i| w[i].abs()).collect();
        let signs = order.iter().map(|&i| if w[i] < 0.0 { -1 } else { 1 }).collect();
        let group_element = SignedPermutation::from_parts(order, signs)?;
        let coefficients = sorted
            .iter()
            .enumerate()
            .map(|(k, &y)| {
                let next = sorted.get(k + 1).copied().unwrap_or(0.0);
                self.roots[k + 1] * (y - next)
            })
            .collect();
        Ok(ConeLocation { group_element, coefficients })
    }

    /// All facet normals `g·u`; the orbit is free because the entries of `u`
    /// are distinct and nonzero, so there are exactly `2^m · m!` of them.
    pub fn facet_orbit(&self) -> Result<Vec<FacetNormal>> {
        let m = self.dim();
        if m > MAX_ORBIT_DIM {
            return Err(Error::TooLargeToEnumerate { what: "the facet orbit", m, cap: MAX_ORBIT_DIM });
        }
        Ok(SignedPermutation::all(m).map(|g| FacetNormal::new(g.apply(&self.normal))).collect())
    }

    fn check(&self, x: &[f64]) -> Result<()> {
        if x.is_empty() {
            return Err(Error::EmptyVector);
        }
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        if let Some(i) = x.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(())
    }
}

fn sorted_abs_desc(x: &[f64]) -> Vec<f64> {
    let mut y: Vec<f64> = x.iter().map(|v| v.abs()).collect();
    y.sort_unstable_by(|a, b| b.total_cmp(a));
    y
}

fn polytope_for(x: &[f64]) -> Result<Polytope> {
    if x.is_empty() {
        return Err(Error::EmptyVector);
    }
    Polytope::new(x.len())
}

pub fn facet_normal(m: usize) -> Result<FacetNormal> {
    Ok(Polytope::new(m)?.facet_normal())
}

pub fn gauge(x: &[f64]) -> Result<f64> {
    polytope_for(x)?.gauge(x)
}

pub fn membership(x: &[f64], tol: f64) -> Result<Membership> {
    polytope_for(x)?.membership(x, tol)
}

pub fn support(w: &[f64]) -> Result<f64> {
    polytope_for(w)?.support(w)
}

pub fn cone_locate(w: &[f64]) -> Result<ConeLocation> {
    polytope_for(w)?.cone_locate(w)
}

pub fn facet_orbit(m: usize) -> Result<Vec<FacetNormal>> {
    Polytope::new(m)?.facet_orbit()
}
