//! Polygon types and their exact constructors and functionals.

use super::point::{orient, PointQ, VecQ};
use super::GeometryError;
use crate::rational::Rational;
use num_traits::{Signed, Zero};
use std::ops::Deref;

/// A simple polygon star-shaped about the origin, stored counterclockwise
/// and rotated so the lexicographically smallest vertex comes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarPolygon {
    vertices: Vec<PointQ>,
}

/// A strictly convex polygon with the origin in its interior.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexPolygon {
    inner: StarPolygon,
}

/// A strictly convex polygon anywhere in the plane (no origin condition),
/// e.g. the moment image of a toric domain inside the positive quadrant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexRegion {
    vertices: Vec<PointQ>,
}

/// Twice the signed area (positive for counterclockwise order).
pub(crate) fn shoelace2(vertices: &[PointQ]) -> Rational {
    let n = vertices.len();
    let mut acc = Rational::zero();
    for i in 0..n {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % n];
        acc += a.cross(b);
    }
    acc
}

fn rotate_to_min(vertices: &mut Vec<PointQ>) {
    if let Some(pos) = (0..vertices.len()).min_by_key(|&i| vertices[i].clone()) {
        vertices.rotate_left(pos);
    }
}

fn within_box(a: &PointQ, b: &PointQ, c: &PointQ) -> bool {
    let (xlo, xhi) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (ylo, yhi) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    xlo <= &c.x && &c.x <= xhi && ylo <= &c.y && &c.y <= yhi
}

/// Whether closed segments [p, q] and [r, s] share any point.
fn segments_intersect(p: &PointQ, q: &PointQ, r: &PointQ, s: &PointQ) -> bool {
    let d1 = orient(r, s, p);
    let d2 = orient(r, s, q);
    let d3 = orient(p, q, r);
    let d4 = orient(p, q, s);
    if ((d1.is_positive() && d2.is_negative()) || (d1.is_negative() && d2.is_positive()))
        && ((d3.is_positive() && d4.is_negative()) || (d3.is_negative() && d4.is_positive()))
    {
        return true;
    }
    (d1.is_zero() && within_box(r, s, p))
        || (d2.is_zero() && within_box(r, s, q))
        || (d3.is_zero() && within_box(p, q, r))
        || (d4.is_zero() && within_box(p, q, s))
}

/// Validates vertices into a [`StarPolygon`].
///
/// Clockwise input is silently reversed. Repeated vertices and zero area
/// are `Degenerate`; crossing or fold-back edges are `NotSimple`; an edge
/// whose supporting line does not keep the origin strictly inside is
/// `NotStarShaped`.
pub fn make_star_polygon(vertices: &[PointQ]) -> Result<StarPolygon, GeometryError> {
    let n = vertices.len();
    if n < 3 {
        return Err(GeometryError::Degenerate);
    }
    let mut sorted = vertices.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(GeometryError::Degenerate);
    }

    let mut verts = vertices.to_vec();
    let two_area = shoelace2(&verts);
    if two_area.is_zero() {
        return Err(GeometryError::Degenerate);
    }
    if two_area.is_negative() {
        verts.reverse();
    }

    // Adjacent edges must not fold back onto each other.
    for i in 0..n {
        let a = &verts[i];
        let b = &verts[(i + 1) % n];
        let c = &verts[(i + 2) % n];
        let d1 = b.sub(a);
        let d2 = c.sub(b);
        if d1.cross(&d2).is_zero() && d1.dot(&d2).is_negative() {
            return Err(GeometryError::NotSimple);
        }
    }
    // Non-adjacent edges must be disjoint.
    for i in 0..n {
        for j in (i + 1)..n {
            if j == i + 1 || (i == 0 && j == n - 1) {
                continue;
            }
            let (p, q) = (&verts[i], &verts[(i + 1) % n]);
            let (r, s) = (&verts[j], &verts[(j + 1) % n]);
            if segments_intersect(p, q, r, s) {
                return Err(GeometryError::NotSimple);
            }
        }
    }

    // Star-shapedness: p·n > 0 along every edge; p·n is affine on the
    // edge, so the two endpoint checks suffice.
    for i in 0..n {
        let a = &verts[i];
        let b = &verts[(i + 1) % n];
        let normal = b.sub(a).outward_normal();
        if !a.dot(&normal).is_positive() || !b.dot(&normal).is_positive() {
            return Err(GeometryError::NotStarShaped);
        }
    }

    rotate_to_min(&mut verts);
    Ok(StarPolygon { vertices: verts })
}

impl StarPolygon {
    pub fn vertices(&self) -> &[PointQ] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Edge endpoints (vᵢ, vᵢ₊₁) in counterclockwise order.
    pub fn edge(&self, i: usize) -> (&PointQ, &PointQ) {
        let n = self.vertices.len();
        (&self.vertices[i % n], &self.vertices[(i + 1) % n])
    }

    /// Outward normal vector of edge i (not normalized).
    pub fn edge_normal(&self, i: usize) -> VecQ {
        let (a, b) = self.edge(i);
        b.sub(a).outward_normal()
    }

    /// h_P(w) = max over vertices of w·p.
    pub fn support_vec(&self, w: &VecQ) -> Rational {
        self.vertices
            .iter()
            .map(|v| v.dot(w))
            .max()
            .expect("polygon has vertices")
    }

    /// Dilation by a positive rational factor.
    pub fn scaled(&self, c: &Rational) -> StarPolygon {
        assert!(c.is_positive(), "polygon scale factor must be positive");
        let mut verts: Vec<PointQ> = self.vertices.iter().map(|v| v.scale(c)).collect();
        rotate_to_min(&mut verts);
        StarPolygon { vertices: verts }
    }

    /// True when gauge(self, x) ≤ 1.
    pub fn contains(&self, x: &PointQ) -> bool {
        x.is_origin() || gauge(self, x) <= crate::rational::int(1)
    }
}

impl ConvexPolygon {
    /// Checks strict convexity of an already-validated star polygon.
    pub fn from_star(star: StarPolygon) -> Result<ConvexPolygon, GeometryError> {
        let n = star.len();
        for i in 0..n {
            let (a, b) = star.edge(i);
            let (_, c) = star.edge(i + 1);
            if !orient(a, b, c).is_positive() {
                return Err(GeometryError::NotConvex);
            }
        }
        Ok(ConvexPolygon { inner: star })
    }

    pub fn from_vertices(vertices: &[PointQ]) -> Result<ConvexPolygon, GeometryError> {
        ConvexPolygon::from_star(make_star_polygon(vertices)?)
    }

    pub fn as_star(&self) -> &StarPolygon {
        &self.inner
    }

    pub fn into_star(self) -> StarPolygon {
        self.inner
    }

    pub fn scaled(&self, c: &Rational) -> ConvexPolygon {
        ConvexPolygon { inner: self.inner.scaled(c) }
    }
}

impl Deref for ConvexPolygon {
    type Target = StarPolygon;

    fn deref(&self) -> &StarPolygon {
        &self.inner
    }
}

impl ConvexRegion {
    /// Convex hull of the given points; fails if the hull is not
    /// two-dimensional.
    pub fn from_points(points: &[PointQ]) -> Result<ConvexRegion, GeometryError> {
        let hull = super::hull::hull_points(points);
        if hull.len() < 3 {
            return Err(GeometryError::Degenerate);
        }
        Ok(ConvexRegion { vertices: hull })
    }

    pub fn vertices(&self) -> &[PointQ] {
        &self.vertices
    }

    pub fn area(&self) -> Rational {
        shoelace2(&self.vertices) / crate::rational::int(2)
    }

    pub fn support_vec(&self, w: &VecQ) -> Rational {
        self.vertices
            .iter()
            .map(|v| v.dot(w))
            .max()
            .expect("region has vertices")
    }

    pub fn translated(&self, shift: &VecQ) -> ConvexRegion {
        let mut verts: Vec<PointQ> = self.vertices.iter().map(|v| v.add(shift)).collect();
        rotate_to_min(&mut verts);
        ConvexRegion { vertices: verts }
    }

    pub fn scaled(&self, c: &Rational) -> ConvexRegion {
        assert!(c.is_positive(), "region scale factor must be positive");
        let mut verts: Vec<PointQ> = self.vertices.iter().map(|v| v.scale(c)).collect();
        rotate_to_min(&mut verts);
        ConvexRegion { vertices: verts }
    }

    pub fn min_x(&self) -> Rational {
        self.vertices.iter().map(|v| v.x.clone()).min().unwrap()
    }

    pub fn min_y(&self) -> Rational {
        self.vertices.iter().map(|v| v.y.clone()).min().unwrap()
    }

    /// True when every vertex satisfies x ≥ 0 and y ≥ 0.
    pub fn in_positive_quadrant(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| !v.x.is_negative() && !v.y.is_negative())
    }

    /// Closed containment test via the edge supporting lines.
    pub fn contains(&self, p: &PointQ) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            !orient(a, b, p).is_negative()
        })
    }
}

/// Exact shoelace area; positive because vertices are counterclockwise.
pub fn area(p: &StarPolygon) -> Rational {
    shoelace2(p.vertices()) / crate::rational::int(2)
}

/// Support function h_P(w) = max over p in P of p·w.
pub fn support(p: &StarPolygon, w: &VecQ) -> Rational {
    p.support_vec(w)
}

/// Minkowski gauge: the unique t ≥ 0 with x ∈ t·∂P; exact via ray–edge
/// intersection. gauge(origin) = 0.
pub fn gauge(p: &StarPolygon, x: &PointQ) -> Rational {
    if x.is_origin() {
        return Rational::zero();
    }
    let n = p.len();
    for i in 0..n {
        let (a, b) = p.edge(i);
        let normal = b.sub(a).outward_normal();
        let denom = x.dot(&normal);
        if !denom.is_positive() {
            continue;
        }
        // The ray t·x meets the edge's line at t = (a·normal)/(x·normal) > 0.
        let t = a.dot(&normal) / &denom;
        let hit = x.scale(&t);
        let dir = b.sub(a);
        let along = hit.sub(a).dot(&dir);
        if !along.is_negative() && along <= b.sub(a).dot(&dir) {
            return t.recip();
        }
    }
    unreachable!("star polygon boundary must meet every ray from the origin")
}

/// True iff the polygon bounds a convex set (straight-angle vertices
/// allowed, unlike the strict check in `ConvexPolygon::from_star`).
pub fn is_convex(p: &StarPolygon) -> bool {
    let n = p.len();
    (0..n).all(|i| {
        let a = &p.vertices()[i];
        let b = &p.vertices()[(i + 1) % n];
        let c = &p.vertices()[(i + 2) % n];
        !orient(a, b, c).is_negative()
    })
}

/// True iff the vertex set is invariant under p ↦ −p.
pub fn is_centrally_symmetric(p: &StarPolygon) -> bool {
    let mut verts = p.vertices().to_vec();
    let mut negated: Vec<PointQ> = p.vertices().iter().map(|v| v.neg()).collect();
    verts.sort();
    negated.sort();
    verts == negated
}

/// True iff the vertex set is invariant under both coordinate reflections
/// (x, y) ↦ (x, −y) and (x, y) ↦ (−x, y).
pub fn is_axis_symmetric(p: &StarPolygon) -> bool {
    let mut verts = p.vertices().to_vec();
    verts.sort();
    for reflect in [
        |v: &PointQ| PointQ::new(v.x.clone(), -&v.y),
        |v: &PointQ| PointQ::new(-&v.x, v.y.clone()),
    ] {
        let mut image: Vec<PointQ> = p.vertices().iter().map(reflect).collect();
        image.sort();
        if image != verts {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point::point;
    use crate::rational::{int, ratio};

    fn cross_polytope() -> StarPolygon {
        make_star_polygon(&[point(1, 0), point(0, 1), point(-1, 0), point(0, -1)]).unwrap()
    }

    #[test]
    fn accepts_cross_polytope_and_canonicalizes() {
        let p = cross_polytope();
        assert_eq!(p.vertices()[0], point(-1, 0), "starts at lexicographic minimum");
        assert_eq!(area(&p), int(2));
    }

    #[test]
    fn reverses_clockwise_input() {
        let cw = make_star_polygon(&[point(0, 1), point(1, -1), point(-1, -1)]).unwrap();
        assert_eq!(area(&cw), int(2), "triangle area after orientation fix");
        assert!(shoelace2(cw.vertices()).is_positive());
    }

    #[test]
    fn rejects_non_star_shaped() {
        let r = make_star_polygon(&[point(1, 0), point(2, 1), point(1, 2), point(0, 1)]);
        assert_eq!(r.unwrap_err(), GeometryError::NotStarShaped);
    }

    #[test]
    fn rejects_self_intersection() {
        // Edge (-1,-1)→(1,1) crosses edge (1,0)→(-1,1) at (1/3,1/3).
        let r = make_star_polygon(&[point(1, 0), point(-1, 1), point(-1, -1), point(1, 1)]);
        assert_eq!(r.unwrap_err(), GeometryError::NotSimple);
        // A symmetric bowtie cancels to zero area and is degenerate.
        let bowtie = make_star_polygon(&[point(1, 1), point(-1, -1), point(1, -1), point(-1, 1)]);
        assert_eq!(bowtie.unwrap_err(), GeometryError::Degenerate);
    }

    #[test]
    fn rejects_degenerate() {
        assert_eq!(
            make_star_polygon(&[point(1, 0), point(0, 1)]).unwrap_err(),
            GeometryError::Degenerate
        );
        assert_eq!(
            make_star_polygon(&[point(1, 0), point(0, 1), point(1, 0)]).unwrap_err(),
            GeometryError::Degenerate
        );
        assert_eq!(
            make_star_polygon(&[point(1, 1), point(2, 2), point(3, 3)]).unwrap_err(),
            GeometryError::Degenerate
        );
    }

    #[test]
    fn area_of_paper_triangles() {
        let t1 = make_star_polygon(&[point(-1, -1), point(1, 0), point(0, 1)]).unwrap();
        assert_eq!(area(&t1), ratio(3, 2));
        let t2 = make_star_polygon(&[point(0, 1), point(1, -1), point(-1, -1)]).unwrap();
        assert_eq!(area(&t2), int(2));
    }

    #[test]
    fn support_examples() {
        let b1 = cross_polytope();
        assert_eq!(support(&b1, &point(1, 1)), int(1));
        assert_eq!(support(&b1, &point(1, 0)), int(1));
        let sq = make_star_polygon(&[point(1, 1), point(-1, 1), point(-1, -1), point(1, -1)])
            .unwrap();
        assert_eq!(support(&sq, &point(2, 1)), int(3));
    }

    #[test]
    fn gauge_examples() {
        let b1 = cross_polytope();
        assert_eq!(gauge(&b1, &point(1, 1)), int(2));
        assert_eq!(gauge(&b1, &PointQ::new(ratio(1, 2), int(0))), ratio(1, 2));
        let tri = make_star_polygon(&[point(-1, -1), point(1, 0), point(0, 1)]).unwrap();
        assert_eq!(gauge(&tri, &point(1, 1)), int(2), "ray exits at the edge midpoint");
        assert_eq!(gauge(&b1, &PointQ::origin()), int(0));
    }

    #[test]
    fn gauge_hits_vertices_consistently(){
        let b1 = cross_polytope();
        assert_eq!(gauge(&b1, &point(2, 0)), int(2));
        assert_eq!(gauge(&b1, &point(0, -3)), int(3));
    }

    #[test]
    fn central_and_axis_symmetry() {
        let b1 = cross_polytope();
        assert!(is_centrally_symmetric(&b1));
        assert!(is_axis_symmetric(&b1));
        let tri = make_star_polygon(&[point(-1, -1), point(1, 0), point(0, 1)]).unwrap();
        assert!(!is_centrally_symmetric(&tri));
        // Centrally symmetric hexagon that is not axis-symmetric.
        let hexagon = make_star_polygon(&[
            point(1, 0),
            point(1, 1),
            point(0, 1),
            point(-1, 0),
            point(-1, -1),
            point(0, -1),
        ])
        .unwrap();
        assert!(is_centrally_symmetric(&hexagon));
        assert!(!is_axis_symmetric(&hexagon));
    }

    #[test]
    fn convex_polygon_rejects_reflex_and_collinear() {
        let star = make_star_polygon(&[
            point(2, 0),
            point(1, 1),
            point(0, 2),
            point(-2, 0),
            point(0, -2),
        ])
        .unwrap();
        // (2,0) → (1,1) → (0,2) is collinear, so not strictly convex.
        assert_eq!(
            ConvexPolygon::from_star(star).unwrap_err(),
            GeometryError::NotConvex
        );
        let notched = make_star_polygon(&[
            point(2, 0),
            point(1, 1),
            point(0, 3),
            point(-2, 0),
            point(0, -2),
        ])
        .unwrap();
        assert!(ConvexPolygon::from_star(notched).is_err());
    }

    #[test]
    fn convex_region_from_points() {
        let q = ConvexRegion::from_points(&[
            point(1, 0),
            point(2, 1),
            point(1, 2),
            point(0, 1),
            point(1, 1),
        ])
        .unwrap();
        assert_eq!(q.vertices().len(), 4, "interior point dropped");
        assert_eq!(q.area(), int(2));
        assert!(q.in_positive_quadrant());
        assert!(q.contains(&point(1, 1)));
        assert!(!q.contains(&point(2, 2)));
    }

    #[test]
    fn scaling_scales_area_quadratically() {
        let b1 = cross_polytope();
        let scaled = b1.scaled(&ratio(3, 2));
        assert_eq!(area(&scaled), ratio(9, 2));
    }
}
