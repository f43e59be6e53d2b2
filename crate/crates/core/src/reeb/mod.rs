//! Reeb dynamics of the product domain T² × A over a polygonal fiber A.
//!
//! All closed orbits live over boundary points whose outward normal has
//! rational slope; the action of the simple orbit over p with primitive
//! integer direction w is w·p. The systole, contact volume, systolic
//! ratio, and the classification flags of the domain are exact rational
//! quantities computed from the fiber polygon alone.

mod arcs;
mod shear;
mod spectrum;
mod zeta;

pub use shear::{shear_report, PreservedInvariants, ShearReport};
pub use spectrum::{
    orbit_classes, reeb_direction, spectrum, FeatureKind, OrbitClass, ReebDirection, Spectrum,
};
pub use zeta::{zeta, zeta_from_orbits, ActionLabel, OrbitKind, ZetaExpression, ZetaFactor};

use crate::geometry::{
    area, convex_hull, is_centrally_symmetric, is_convex, is_generalized_monotone,
    normal_features, NormalFeature, StarPolygon,
};
use crate::rational::{ratio, Rational};
use arcs::{min_action_in_cone, Cone};
use thiserror::Error;

/// Failures of boundary-point queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ReebError {
    /// The query point does not lie on the polygon boundary.
    #[error("point does not lie on the polygon boundary")]
    PointNotOnBoundary,
    /// The query point is a vertex, where the normal direction is not
    /// unique; use the normal-arc features instead.
    #[error("Reeb direction is ambiguous at a vertex")]
    QueryAtVertex,
}

/// Subclass membership of the product domain over the fiber polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationFlags {
    pub is_product: bool,
    pub fiber_convex: bool,
    pub fiber_centrally_symmetric: bool,
    pub generalized_monotone: bool,
    pub dynamically_convex: bool,
    pub systolically_convex: bool,
    pub sys_ratio: Rational,
}

/// The systole: the minimal action among closed Reeb orbits.
///
/// Iterated covers never beat their base, so only simple classes matter:
/// the minimum of the edge actions and of the per-vertex cone minima. The
/// cone search prunes against the best value found so far.
pub fn sys(p: &StarPolygon) -> Rational {
    let features = normal_features(p);
    let mut best: Option<Rational> = None;
    for feature in &features {
        if let NormalFeature::Edge { start, direction, .. } = feature {
            let action = direction.dot_point(start);
            if best.as_ref().is_none_or(|b| action < *b) {
                best = Some(action);
            }
        }
    }
    let mut best = best.expect("a polygon with rational vertices has rational edge normals");
    for feature in &features {
        if let NormalFeature::Vertex { point, .. } = feature {
            let Some(cone) = Cone::of_vertex_feature(feature) else {
                continue;
            };
            if let Some((_, action)) = min_action_in_cone(&cone, point, &best) {
                best = action;
            }
        }
    }
    best
}

/// The contact volume of T² × ∂A, which is twice the fiber area.
pub fn volume(p: &StarPolygon) -> Rational {
    area(p) * ratio(2, 1)
}

/// The systolic ratio sys² / volume.
pub fn sys_ratio(p: &StarPolygon) -> Rational {
    let s = sys(p);
    &s * &s / volume(p)
}

/// Computes all subclass flags of the product domain.
///
/// Product domains are always dynamically convex: every closed orbit winds
/// nontrivially around the torus factor, so no contractible orbits exist.
pub fn classify(p: &StarPolygon) -> ClassificationFlags {
    let rho = sys_ratio(p);
    ClassificationFlags {
        is_product: true,
        fiber_convex: is_convex(p),
        fiber_centrally_symmetric: is_centrally_symmetric(p),
        generalized_monotone: is_generalized_monotone(p),
        dynamically_convex: true,
        systolically_convex: rho <= ratio(1, 4),
        sys_ratio: rho,
    }
}

/// The Ruelle invariant of T² × ∂A: the linearized flow is a shear along
/// every orbit, so the rotation rate vanishes identically.
pub fn ruelle_invariant(_p: &StarPolygon) -> Rational {
    Rational::from_integer(0.into())
}

/// The systole of the convex hull and the hull-area ratio bound.
///
/// Both bound the dynamics of P itself: sys(P) ≤ sys(hull) because every
/// hull orbit direction is realized over P with no larger action, and
/// sys_ratio(P) ≤ area(hull)/(3·area(P)) follows from the triangle case
/// of the hull bound.
pub fn hull_sys_bound(p: &StarPolygon) -> (Rational, Rational) {
    let hull = convex_hull(p);
    let sys_hull = sys(hull.as_star());
    let bound = area(hull.as_star()) / (area(p) * ratio(3, 1));
    (sys_hull, bound)
}
