//! The cotangent-shear deformation of a product domain.
//!
//! The shear twists the fiber over the base circle, producing a fiberwise
//! star-shaped domain that is not a product for ε ≠ 0 while preserving
//! every contact invariant of the base. The deformed domain is described
//! symbolically; no re-meshing happens.

use super::{classify, sys, sys_ratio, volume};
use crate::geometry::StarPolygon;
use crate::rational::Rational;
use num_traits::Zero;

/// Contact quantities unchanged by the shear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreservedInvariants {
    pub sys: Rational,
    pub volume: Rational,
    pub sys_ratio: Rational,
    pub dynamically_convex: bool,
}

/// A sheared product domain, reported relative to its base polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShearReport {
    pub epsilon: Rational,
    pub base: StarPolygon,
    /// How the fiber varies over the base circle.
    pub fiber_family: String,
    pub preserved: PreservedInvariants,
    pub is_product: bool,
    /// Fiber convexity is unchanged: each fiber is a linear image of A.
    pub fiber_convex: bool,
}

/// Describes the shear of T² × A with rate ε.
pub fn shear_report(p: &StarPolygon, epsilon: &Rational) -> ShearReport {
    let flags = classify(p);
    ShearReport {
        epsilon: epsilon.clone(),
        base: p.clone(),
        fiber_family: String::from(
            "fiber over q2 is M(q2)·A with M(q2) = [[1, 0], [-eps·cos(2π q2), 1]]",
        ),
        preserved: PreservedInvariants {
            sys: sys(p),
            volume: volume(p),
            sys_ratio: sys_ratio(p),
            dynamically_convex: flags.dynamically_convex,
        },
        is_product: epsilon.is_zero(),
        fiber_convex: flags.fiber_convex,
    }
}
