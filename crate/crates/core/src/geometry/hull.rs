//! Exact convex hulls (monotone chain).

use super::point::{orient, PointQ};
use super::polygon::{ConvexPolygon, StarPolygon};
use num_traits::Signed;

/// Convex hull of a point set, counterclockwise, starting at the
/// lexicographically smallest vertex. Collinear boundary points are
/// dropped, so the result lists exactly the extreme points. Degenerate
/// inputs yield fewer than three points (a segment or a single point).
pub fn hull_points(points: &[PointQ]) -> Vec<PointQ> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<PointQ> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<PointQ> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Convex hull of a star polygon's vertices.
///
/// The hull contains the polygon, hence contains the origin in its
/// interior, so the result is always a valid [`ConvexPolygon`].
pub fn convex_hull(p: &StarPolygon) -> ConvexPolygon {
    let hull = hull_points(p.vertices());
    ConvexPolygon::from_vertices(&hull)
        .expect("hull of a star polygon is convex with the origin interior")
}
