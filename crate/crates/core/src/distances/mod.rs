//! Coarse symplectic distances between fiber shapes.
//!
//! For star-shaped fibers the inclusion distance is
//! `ln inf { C : A ⊂ C·B and B ⊂ C·A }`, dilating from the origin. It is
//! a pseudo-metric, exact on rational vertex data, and it upper-bounds
//! the Banach-Mazur-type distance between the corresponding products
//! T² x A. The toric mode applies the same functional to moment regions
//! in the positive quadrant. Witness families with prescribed pairwise
//! distances are built in [`pv_polygon`] and [`qv_region`].

mod pv;

pub use pv::{pv_polygon, qv_region, PvPolygon, DEFAULT_PRECISION_BITS, MIN_PRECISION_BITS};

use crate::geometry::{gauge, ConvexRegion, PointQ, StarPolygon};
use crate::rational::{to_f64, Rational};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum DistanceError {
    #[error("family input does not give a star-shaped polygon")]
    NotStarShaped,
    #[error("toric mode needs moment regions inside the closed positive quadrant")]
    NotInPositiveQuadrant,
    #[error("toric mode needs the origin corner inside both regions")]
    OriginNotInRegion,
    #[error("no dilation of one region contains the other")]
    Incomparable,
    #[error("profile vertices are not in convex position")]
    NotConvexPosition,
}

/// An inclusion-distance value: the optimal dilation constant `C ≥ 1`
/// and its logarithm, the distance itself. `exact` records whether the
/// vertex data entering the computation was exact; the constant is always
/// the exact optimum for the given vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceValue {
    pub scale: Rational,
    pub log_value: f64,
    pub exact: bool,
}

impl DistanceValue {
    fn from_scale(scale: Rational, exact: bool) -> DistanceValue {
        debug_assert!(scale >= Rational::one(), "mutual inclusion forces C >= 1");
        let log_value = to_f64(&scale).ln();
        DistanceValue { scale, log_value, exact }
    }
}

/// Least `C` such that `content ⊂ C·container`, both star-shaped about
/// the origin: the maximum of the container's gauge over the content's
/// boundary.
///
/// Between two consecutive rays through container vertices the gauge is
/// affine, so along one content edge the maximum sits at an edge endpoint
/// or where the edge crosses such a ray; those finitely many candidate
/// points carry the exact maximum.
pub fn scale_to_contain(content: &StarPolygon, container: &StarPolygon) -> Rational {
    let mut candidates: Vec<PointQ> = content.vertices().to_vec();
    for i in 0..content.len() {
        let (u, w) = content.edge(i);
        let dir = w.sub(u);
        for q in container.vertices() {
            let denom = dir.cross(q);
            if denom.is_zero() {
                continue;
            }
            let t = -u.cross(q) / denom;
            if !t.is_positive() || t >= Rational::one() {
                continue;
            }
            let p = u.add(&dir.scale(&t));
            if p.dot(q).is_positive() {
                candidates.push(p);
            }
        }
    }
    candidates
        .iter()
        .map(|p| gauge(container, p))
        .max()
        .expect("star polygons have vertices")
}

/// The inclusion distance between two star-shaped fibers, exact on their
/// rational vertex data.
pub fn inclusion_distance(a: &StarPolygon, b: &StarPolygon) -> DistanceValue {
    let c = scale_to_contain(a, b).max(scale_to_contain(b, a));
    DistanceValue::from_scale(c, true)
}

/// Distance between the products T² x A and T² x B of two fibers: the
/// torus directions give no extra room, so the value is the inclusion
/// distance of the fibers.
pub fn hbm_product_distance(a: &StarPolygon, b: &StarPolygon) -> DistanceValue {
    inclusion_distance(a, b)
}

/// Distance between two members of the star-shaped witness family; the
/// constant is exact for the rounded vertices, hence `exact` is false.
pub fn pv_distance(a: &PvPolygon, b: &PvPolygon) -> DistanceValue {
    let c = scale_to_contain(a.as_star(), b.as_star())
        .max(scale_to_contain(b.as_star(), a.as_star()));
    DistanceValue::from_scale(c, false)
}

/// Distance between two toric domains through their moment regions. Both
/// regions must lie in the closed positive quadrant and contain the
/// origin corner; regions whose recession behavior at the origin differs
/// (an edge through the origin of one cuts off part of the other) admit
/// no containing dilation at all and are reported as incomparable.
pub fn hbm_toric_distance(
    a: &ConvexRegion,
    b: &ConvexRegion,
) -> Result<DistanceValue, DistanceError> {
    for region in [a, b] {
        if !region.in_positive_quadrant() {
            return Err(DistanceError::NotInPositiveQuadrant);
        }
        if !region.contains(&PointQ::origin()) {
            return Err(DistanceError::OriginNotInRegion);
        }
    }
    let cab = region_scale_to_contain(a, b)?;
    let cba = region_scale_to_contain(b, a)?;
    Ok(DistanceValue::from_scale(cab.max(cba), true))
}

/// Least `C` with `content ⊂ C·container` for convex regions containing
/// the origin. The container's gauge is a maximum of affine functions,
/// hence convex, so its maximum over the content sits at a vertex.
fn region_scale_to_contain(
    content: &ConvexRegion,
    container: &ConvexRegion,
) -> Result<Rational, DistanceError> {
    let mut best = Rational::zero();
    for p in content.vertices() {
        let g = region_gauge(container, p).ok_or(DistanceError::Incomparable)?;
        best = best.max(g);
    }
    Ok(best)
}

/// `min { t ≥ 0 : p ∈ t·Ω }` for a convex region containing the origin:
/// the maximum of `(p·n)/(a·n)` over edges with positive support. An edge
/// through the origin is a hard constraint instead; `None` when `p`
/// violates one, since no dilation of the region reaches `p`.
fn region_gauge(region: &ConvexRegion, p: &PointQ) -> Option<Rational> {
    let verts = region.vertices();
    let mut best = Rational::zero();
    for i in 0..verts.len() {
        let a = &verts[i];
        let b = &verts[(i + 1) % verts.len()];
        let n = b.sub(a).outward_normal();
        let h = a.dot(&n);
        let pn = p.dot(&n);
        if h.is_zero() {
            if pn.is_positive() {
                return None;
            }
        } else {
            debug_assert!(h.is_positive(), "region must contain the origin");
            best = best.max(pn / h);
        }
    }
    Some(best)
}
