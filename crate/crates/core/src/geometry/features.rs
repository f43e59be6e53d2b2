//! Boundary normal structure: one feature per edge and per vertex.

use super::point::{Direction, PointQ, VecQ};
use super::polygon::StarPolygon;
use num_traits::{Signed, Zero};

/// A maximal piece of the boundary with its outward normal data.
///
/// Edges carry a single normal ray; vertices carry the closed arc of
/// normals swept between the two adjacent edge normals (the short way, of
/// width < π). At a reflex vertex the same unordered arc is reported with
/// the `reflex` flag set: smoothing a concave corner still realizes every
/// direction between the adjacent normals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalFeature {
    Edge {
        index: usize,
        start: PointQ,
        end: PointQ,
        /// Outward normal vector (rational, not normalized).
        normal: VecQ,
        /// Primitive integer rescaling of the normal.
        direction: Direction,
    },
    Vertex {
        index: usize,
        point: PointQ,
        /// Normal of the incoming edge.
        arc_from: VecQ,
        /// Normal of the outgoing edge.
        arc_to: VecQ,
        reflex: bool,
    },
}

impl NormalFeature {
    /// A boundary point realizing the feature (edge start, or the vertex).
    pub fn anchor(&self) -> &PointQ {
        match self {
            NormalFeature::Edge { start, .. } => start,
            NormalFeature::Vertex { point, .. } => point,
        }
    }

    /// The vertex arc as a counterclockwise-oriented cone (lo, hi) with
    /// cross(lo, hi) ≥ 0. `None` for edge features.
    pub fn oriented_cone(&self) -> Option<(VecQ, VecQ)> {
        match self {
            NormalFeature::Edge { .. } => None,
            NormalFeature::Vertex { arc_from, arc_to, .. } => {
                if arc_from.cross(arc_to).is_negative() {
                    Some((arc_to.clone(), arc_from.clone()))
                } else {
                    Some((arc_from.clone(), arc_to.clone()))
                }
            }
        }
    }

    /// Membership of a direction in this feature's direction set.
    ///
    /// Edge features own exactly their primitive normal. Vertex features
    /// own the OPEN arc strictly between the adjacent edge normals, so the
    /// feature sets partition the realized directions.
    pub fn owns_direction(&self, w: &Direction) -> bool {
        match self {
            NormalFeature::Edge { direction, .. } => direction == w,
            NormalFeature::Vertex { .. } => {
                let (lo, hi) = self.oriented_cone().expect("vertex feature");
                let wv = w.as_vec();
                lo.cross(&wv).is_positive() && wv.cross(&hi).is_positive()
            }
        }
    }

    /// Membership in the closed arc (vertex features), or positive
    /// parallelism with the normal (edge features).
    pub fn contains_direction_closed(&self, w: &VecQ) -> bool {
        match self {
            NormalFeature::Edge { normal, .. } => {
                normal.cross(w).is_zero() && normal.dot(w).is_positive()
            }
            NormalFeature::Vertex { .. } => {
                let (lo, hi) = self.oriented_cone().expect("vertex feature");
                if lo.cross(&hi).is_zero() {
                    // Degenerate arc: collinear consecutive edges.
                    return lo.cross(w).is_zero() && lo.dot(w).is_positive();
                }
                !lo.cross(w).is_negative() && !w.cross(&hi).is_negative()
            }
        }
    }
}

/// One feature per edge (indices 0..n) followed by one per vertex
/// (indices 0..n). Vertex i sits between edge i−1 and edge i.
pub fn normal_features(p: &StarPolygon) -> Vec<NormalFeature> {
    let n = p.len();
    let mut features = Vec::with_capacity(2 * n);
    for i in 0..n {
        let (a, b) = p.edge(i);
        let normal = p.edge_normal(i);
        let direction =
            Direction::from_vec(&normal).expect("edge normal of a nondegenerate edge is nonzero");
        features.push(NormalFeature::Edge {
            index: i,
            start: a.clone(),
            end: b.clone(),
            normal,
            direction,
        });
    }
    for i in 0..n {
        let incoming = p.edge_normal((i + n - 1) % n);
        let outgoing = p.edge_normal(i);
        let reflex = incoming.cross(&outgoing).is_negative();
        features.push(NormalFeature::Vertex {
            index: i,
            point: p.vertices()[i].clone(),
            arc_from: incoming,
            arc_to: outgoing,
            reflex,
        });
    }
    features
}

fn product_vector_nonnegative(p: &PointQ, n: &VecQ) -> bool {
    !(&p.x * &n.x).is_negative() && !(&p.y * &n.y).is_negative()
}

/// True iff (p₁n₁, p₂n₂) ∈ ℝ²≥0 everywhere on the boundary.
///
/// Along an edge the product vector is affine in p, so the endpoint checks
/// suffice. Over a vertex arc its component signs change only where the
/// normal crosses a coordinate axis, so the arc endpoints plus any axis
/// directions inside the closed arc suffice.
pub fn is_generalized_monotone(p: &StarPolygon) -> bool {
    for feature in normal_features(p) {
        match &feature {
            NormalFeature::Edge { start, end, normal, .. } => {
                if !product_vector_nonnegative(start, normal)
                    || !product_vector_nonnegative(end, normal)
                {
                    return false;
                }
            }
            NormalFeature::Vertex { point, arc_from, arc_to, .. } => {
                if !product_vector_nonnegative(point, arc_from)
                    || !product_vector_nonnegative(point, arc_to)
                {
                    return false;
                }
                for axis in [
                    super::point::point(1, 0),
                    super::point::point(-1, 0),
                    super::point::point(0, 1),
                    super::point::point(0, -1),
                ] {
                    if feature.contains_direction_closed(&axis)
                        && !product_vector_nonnegative(point, &axis)
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}
