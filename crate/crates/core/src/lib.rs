//! Inscribed ball of the polytope `C_m`, the convex hull of the unit vectors
//! pointing at the nonzero points of `{-1, 0, 1}^m`.
//!
//! The crate is organized in three layers:
//!
//! - [`hull`] models `C_m` through its vertex cloud, its signed-permutation
//!   symmetry group and its canonical facet, and answers gauge, support,
//!   membership and cone-location queries in `O(m log m)`.
//! - [`analysis`] evaluates the closed-form inradius with compensated
//!   summation together with the logarithmic bounds and asymptote.
//! - [`oracle`] recomputes everything from scratch at small dimension: a
//!   brute-force facet enumeration of the raw vertex cloud and a Chebyshev
//!   center linear program solved with an in-crate dense simplex method.

pub mod analysis;
mod error;
pub mod hull;
pub mod oracle;
pub mod simplex;
pub mod summation;

pub use analysis::{bound_check, harmonic, inradius, term, BoundCheck, InradiusReport, SeriesPoint};
pub use error::{Error, Result};
pub use hull::{
    canonical_vertex, cone_locate, enumerate_vertices, facet_normal, facet_orbit, gauge, membership, support,
    ConeLocation, FacetNormal, Membership, Polytope, SignVector, SignedPermutation, UnitVertex,
};
pub use oracle::{brute_facets, chebyshev_center, containment_oracle, oracle_inradius, ChebyshevResult, Hyperplane};
