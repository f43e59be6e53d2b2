//! Polar duality for convex polygons containing the origin.

use super::point::PointQ;
use super::polygon::ConvexPolygon;
use super::GeometryError;
use num_traits::Signed;

/// Polar body C° = {y : y·x ≤ 1 for all x ∈ C}.
///
/// Each edge {x : x·n = c} of C (with outward normal n and offset c > 0)
/// polarizes to the vertex n/c, so the dual has one vertex per edge of C,
/// again in counterclockwise order.
pub fn polar_dual(c: &ConvexPolygon) -> Result<ConvexPolygon, GeometryError> {
    let n = c.len();
    let mut dual_vertices: Vec<PointQ> = Vec::with_capacity(n);
    for i in 0..n {
        let (a, _) = c.edge(i);
        let normal = c.edge_normal(i);
        let offset = a.dot(&normal);
        if !offset.is_positive() {
            return Err(GeometryError::OriginNotInterior);
        }
        dual_vertices.push(normal.scale(&offset.recip()));
    }
    ConvexPolygon::from_vertices(&dual_vertices)
}
