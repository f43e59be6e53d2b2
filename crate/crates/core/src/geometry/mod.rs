//! Exact rational planar geometry for star-shaped and convex polygon fibers.

mod dual;
mod features;
mod hull;
mod point;
mod polygon;

pub use dual::polar_dual;
pub use features::{is_generalized_monotone, normal_features, NormalFeature};
pub use hull::{convex_hull, hull_points};
pub use point::{point, vec2, Direction, PointQ, VecQ};
pub use polygon::{
    area, gauge, is_axis_symmetric, is_centrally_symmetric, is_convex, make_star_polygon, support,
    ConvexPolygon, ConvexRegion, StarPolygon,
};

use thiserror::Error;

/// Validation failures for polygon constructors and duals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GeometryError {
    /// Two non-adjacent edges intersect, or adjacent edges fold back.
    #[error("polygon boundary is self-intersecting")]
    NotSimple,
    /// Some edge's supporting line does not keep the origin strictly on
    /// its inner side.
    #[error("polygon is not star-shaped about the origin")]
    NotStarShaped,
    /// Fewer than three distinct vertices, a repeated vertex, or zero area.
    #[error("polygon is degenerate")]
    Degenerate,
    /// The origin is not an interior point, so the polar dual is unbounded.
    #[error("origin is not an interior point")]
    OriginNotInterior,
    /// A convex polygon was requested but the vertices are not in strictly
    /// convex position.
    #[error("polygon is not convex")]
    NotConvex,
}
