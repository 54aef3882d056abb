//! Ground truth at small dimension, computed without using the facet
//! structure in [`crate::hull`].
//!
//! Facets are found by trying every `m`-subset of the raw vertex cloud as a
//! hyperplane and keeping the ones with all vertices on one side. The
//! inscribed ball is then recovered twice: as the minimum facet distance from
//! the origin, and as a Chebyshev-center linear program that does not assume
//! the center.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;

use crate::hull::{enumerate_vertices, Membership};
use crate::simplex::{self, LinearProgram};
use crate::{Error, Result};

pub const ORACLE_MIN_DIM: usize = 2;
pub const ORACLE_MAX_DIM: usize = 4;

/// One-side test tolerance for candidate hyperplanes.
pub const SIDE_TOL: f64 = 1e-9;

/// Dedup grid: normals are rounded to multiples of `1 / KEY_SCALE`.
pub const KEY_SCALE: f64 = 1e7;

/// Half-width of the boundary band in [`containment_oracle`].
pub const BOUNDARY_BAND: f64 = 1e-9;

/// Smallest pivot accepted when solving for a hyperplane through `m` points.
const SINGULAR_PIVOT: f64 = 1e-10;

/// The hyperplane `<normal, x> = offset` with a unit normal, bounding the
/// half-space `<normal, x> ≤ offset`.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    pub normal: Vec<f64>,
    pub offset: f64,
}

impl Hyperplane {
    /// Normalizes `normal` to unit length, scaling `offset` along with it.
    pub fn new(normal: Vec<f64>, offset: f64) -> Self {
        let len = normal.iter().map(|v| v * v).sum::<f64>().sqrt();
        Self { normal: normal.iter().map(|v| v / len).collect(), offset: offset / len }
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `<normal, x> - offset`; positive outside.
    pub fn slack(&self, x: &[f64]) -> f64 {
        dot(&self.normal, x) - self.offset
    }

    pub fn distance_to_origin(&self) -> f64 {
        self.offset.abs()
    }

    /// Normal rounded onto the dedup grid.
    pub fn key(&self) -> Vec<i64> {
        self.normal.iter().map(|v| (v * KEY_SCALE).round() as i64).collect()
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Solves `P n = 1` for the rows of `P`; `None` when the points are affinely
/// dependent or span a hyperplane through the origin.
fn plane_through(points: &[&[f64]]) -> Option<Vec<f64>> {
    let m = points.len();
    let mut a: Vec<Vec<f64>> = points
        .iter()
        .map(|p| {
            let mut row = p.to_vec();
            row.push(1.0);
            row
        })
        .collect();
    for col in 0..m {
        let pivot = (col..m).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[pivot][col].abs() < SINGULAR_PIVOT {
            return None;
        }
        a.swap(col, pivot);
        for i in col + 1..m {
            let f = a[i][col] / a[col][col];
            if f != 0.0 {
                let (upper, lower) = a.split_at_mut(i);
                for (x, p) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                    *x -= f * p;
                }
            }
        }
    }
    let mut n = vec![0.0; m];
    for i in (0..m).rev() {
        let tail: f64 = (i + 1..m).map(|j| a[i][j] * n[j]).sum();
        n[i] = (a[i][m] - tail) / a[i][i];
    }
    Some(n)
}

type FacetMap = BTreeMap<Vec<i64>, Hyperplane>;

fn insert_facet(map: &mut FacetMap, plane: Hyperplane) {
    // Within one key the representative is the lexicographically smallest
    // normal, so the merge result does not depend on evaluation order.
    map.entry(plane.key())
        .and_modify(|kept| {
            let smaller = plane
                .normal
                .iter()
                .zip(&kept.normal)
                .map(|(a, b)| a.total_cmp(b))
                .find(|o| o.is_ne())
                .is_some_and(|o| o.is_lt());
            if smaller {
                *kept = plane.clone();
            }
        })
        .or_insert(plane);
}

fn facets_with_first(vertices: &[Vec<f64>], first: usize, m: usize) -> FacetMap {
    let mut found = FacetMap::new();
    for rest in (first + 1..vertices.len()).combinations(m - 1) {
        let points: Vec<&[f64]> = std::iter::once(first).chain(rest).map(|i| vertices[i].as_slice()).collect();
        let Some(normal) = plane_through(&points) else { continue };
        // The origin is interior, so the outward side is <normal, x> ≤ 1.
        if vertices.iter().all(|v| dot(&normal, v) <= 1.0 + SIDE_TOL) {
            insert_facet(&mut found, Hyperplane::new(normal, 1.0));
        }
    }
    found
}

fn merge(mut a: FacetMap, b: FacetMap) -> FacetMap {
    for plane in b.into_values() {
        insert_facet(&mut a, plane);
    }
    a
}

/// Facets of the convex hull of `vertices` by exhaustive subset search,
/// ordered by dedup key. Assumes the origin is interior to the hull.
pub fn facets_of_cloud(vertices: &[Vec<f64>], parallel: bool) -> Vec<Hyperplane> {
    let Some(m) = vertices.first().map(Vec::len) else { return Vec::new() };
    let map = if parallel {
        (0..vertices.len())
            .into_par_iter()
            .map(|first| facets_with_first(vertices, first, m))
            .reduce(FacetMap::new, merge)
    } else {
        (0..vertices.len()).map(|first| facets_with_first(vertices, first, m)).fold(FacetMap::new(), merge)
    };
    map.into_values().collect()
}

fn check_scale(m: usize) -> Result<()> {
    if (ORACLE_MIN_DIM..=ORACLE_MAX_DIM).contains(&m) {
        Ok(())
    } else {
        Err(Error::OracleScale(m))
    }
}

/// Facets of `conv(B_m)` from the raw vertex cloud, for `2 ≤ m ≤ 4`.
pub fn brute_facets(m: usize) -> Result<Vec<Hyperplane>> {
    check_scale(m)?;
    let vertices: Vec<Vec<f64>> = enumerate_vertices(m)?.into_iter().map(|v| v.into_coords()).collect();
    Ok(facets_of_cloud(&vertices, true))
}

/// Smallest distance from the origin to any facet plane.
pub fn min_facet_distance(planes: &[Hyperplane]) -> f64 {
    planes.iter().map(Hyperplane::distance_to_origin).fold(f64::INFINITY, f64::min)
}

pub fn oracle_inradius(m: usize) -> Result<f64> {
    Ok(min_facet_distance(&brute_facets(m)?))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevResult {
    pub center: Vec<f64>,
    pub radius: f64,
    /// Indices of the planes touching the ball.
    pub active_constraints: Vec<usize>,
}

/// Largest ball inside `∩ {<n_j, x> ≤ offset_j}`.
///
/// Solved as `max r` s.t. `<n_j, c> + r |n_j| ≤ offset_j` with the free center
/// split as `c = c⁺ - c⁻`.
pub fn chebyshev_center(planes: &[Hyperplane]) -> Result<ChebyshevResult> {
    let Some(m) = planes.first().map(Hyperplane::dim) else {
        return Err(Error::Unbounded);
    };
    if let Some(bad) = planes.iter().find(|p| p.dim() != m) {
        return Err(Error::DimensionMismatch { expected: m, got: bad.dim() });
    }
    let mut objective = vec![0.0; 2 * m + 1];
    objective[2 * m] = 1.0;
    let constraints = planes
        .iter()
        .map(|p| {
            let len = p.normal.iter().map(|v| v * v).sum::<f64>().sqrt();
            p.normal.iter().copied().chain(p.normal.iter().map(|v| -v)).chain([len]).collect()
        })
        .collect();
    let rhs = planes.iter().map(|p| p.offset).collect();
    let sol = simplex::maximize(&LinearProgram { objective, constraints, rhs })?;

    let center: Vec<f64> = (0..m).map(|i| sol.x[i] - sol.x[m + i]).collect();
    let radius = sol.x[2 * m];
    let active_constraints = planes
        .iter()
        .enumerate()
        .filter(|(_, p)| {
            let len = p.normal.iter().map(|v| v * v).sum::<f64>().sqrt();
            (p.offset - dot(&p.normal, &center) - radius * len).abs() <= 1e-9 * radius.max(1.0)
        })
        .map(|(j, _)| j)
        .collect();
    Ok(ChebyshevResult { center, radius, active_constraints })
}

/// Classifies `x` by its worst facet slack, with a ±[`BOUNDARY_BAND`] band.
pub fn containment_oracle(x: &[f64], planes: &[Hyperplane]) -> Membership {
    let worst = planes.iter().map(|p| p.slack(x)).fold(f64::NEG_INFINITY, f64::max);
    if worst.abs() <= BOUNDARY_BAND {
        Membership::Boundary
    } else if worst < 0.0 {
        Membership::Inside
    } else {
        Membership::Outside
    }
}
