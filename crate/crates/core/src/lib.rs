//! Exact-arithmetic computations for product domains `T² × A` in the
//! cotangent bundle of the two-torus, where the fiber `A ⊂ ℝ²` is a
//! star-shaped rational polygon.
//!
//! The crate is organized by subject:
//!
//! - [`geometry`]: exact rational planar geometry (star-shaped and convex
//!   polygons, support and gauge functions, polar duals, hulls, boundary
//!   normal features).
//! - [`reeb`]: Reeb dynamics on `T² × ∂A` (orbit classes, action spectrum,
//!   systole, contact volume, systolic ratio, classification flags, zeta
//!   bookkeeping, cotangent-shear reports).
//! - [`ech`]: ECH capacities of balls, disjoint unions of balls,
//!   flat-Finsler codisc bundles (lattice-polygon perimeter minimization),
//!   weight decompositions of convex toric regions, and ball-embedding
//!   certificates.
//! - [`capacities`]: normalized-capacity determinations for flat reversible
//!   Finsler codisc bundles, rectangles, tilted cylinders, toric transfer,
//!   and the Viterbo probe.
//! - [`distances`]: the inclusion distance between star-shaped fibers and
//!   its identification with the homological Banach–Mazur distance.
//! - [`export`]: serialization of results to JSON / CSV / SVG.
//!
//! All scalar quantities are arbitrary-precision rationals ([`Rational`]).
//! Quantities that are square roots of rationals (cylinder capacities,
//! Wulff bounds) are carried as exact squared values. Only [`distances`]
//! touches floating point, and there only to evaluate `exp`, `sin`, `cos`
//! and `ln` at 128-bit precision on the way in and out of the exact kernel.

pub mod capacities;
pub mod distances;
pub mod ech;
pub mod export;
pub mod geometry;
pub mod rational;
pub mod reeb;

pub use rational::Rational;
