//! Ball decompositions of anchored toric regions.
//!
//! A convex region Ω in the closed positive quadrant that touches both
//! axes sits inside the right triangle T(b) with b = max(x+y). Cutting
//! the three corner pieces of T(b) \ Ω down to triangles yields weights
//! (b; w_1, …, w_n): the toric domain over Ω and the disjoint union of
//! balls B(w_i) carved out of B(b) have the same capacity data.

use crate::geometry::{ConvexRegion, PointQ};
use crate::rational::{format_rational, Rational};
use num_traits::{Signed, Zero};
use std::fmt;

use super::EchError;

/// A head size b together with positive weights sorted descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSequence {
    head: Rational,
    weights: Vec<Rational>,
}

impl WeightSequence {
    pub fn new(head: Rational, mut weights: Vec<Rational>) -> WeightSequence {
        assert!(head.is_positive(), "head size must be positive");
        assert!(
            weights.iter().all(|w| w.is_positive()),
            "weights must be positive"
        );
        weights.sort_by(|a, b| b.cmp(a));
        WeightSequence { head, weights }
    }

    pub fn head(&self) -> &Rational {
        &self.head
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn sum_of_squares(&self) -> Rational {
        self.weights.iter().map(|w| w * w).sum()
    }
}

impl fmt::Display for WeightSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", format_rational(&self.head))?;
        for (i, w) in self.weights.iter().enumerate() {
            write!(f, "{}{}", if i == 0 { "; " } else { ", " }, format_rational(w))?;
        }
        write!(f, ")")
    }
}

/// One corner piece: the region under a convex nonincreasing polyline
/// running from (0, q) on the y-axis to (p, 0) on the x-axis.
struct CornerPiece {
    polyline: Vec<PointQ>,
}

impl CornerPiece {
    fn is_empty(&self) -> bool {
        self.polyline.len() < 2
            || self.polyline[0].y.is_zero()
            || self.polyline[self.polyline.len() - 1].x.is_zero()
    }
}

/// Largest inscribed-triangle size: min of x+y over the polyline.
fn min_level(polyline: &[PointQ]) -> Rational {
    polyline
        .iter()
        .map(|v| &v.x + &v.y)
        .min()
        .expect("polyline is nonempty")
}

/// Cuts the inscribed triangle T(m) out of each piece, emitting m and the
/// two residual corner pieces, until every piece is empty.
fn concave_weights(seed: Vec<CornerPiece>, out: &mut Vec<Rational>) -> Result<(), EchError> {
    let mut stack = seed;
    let mut budget: u32 = 4096;
    while let Some(piece) = stack.pop() {
        if piece.is_empty() {
            continue;
        }
        if budget == 0 {
            return Err(EchError::NonTerminating);
        }
        budget -= 1;
        let line = piece.polyline;
        debug_assert!(line[0].x.is_zero() && line[line.len() - 1].y.is_zero());
        let m = min_level(&line);
        debug_assert!(m.is_positive());
        let i1 = line
            .iter()
            .position(|v| &v.x + &v.y == m)
            .expect("minimum is attained");
        let i2 = line
            .iter()
            .rposition(|v| &v.x + &v.y == m)
            .expect("minimum is attained");
        debug_assert!((i1..=i2).all(|i| &line[i].x + &line[i].y == m), "argmin run is contiguous");
        out.push(m.clone());
        // Right residual between the cut line x+y = m and the arc beyond
        // the argmin run, normalized by the unimodular corner map that
        // sends (m, 0) to the origin and the cut line to the y-axis.
        let right: Vec<PointQ> = line[i2..]
            .iter()
            .map(|v| PointQ::new(&(&v.x + &v.y) - &m, v.y.clone()))
            .collect();
        // Left residual against the y-axis, with the cut line mapped to
        // the x-axis.
        let left: Vec<PointQ> = line[..=i1]
            .iter()
            .map(|v| PointQ::new(v.x.clone(), &(&v.x + &v.y) - &m))
            .collect();
        stack.push(CornerPiece { polyline: right });
        stack.push(CornerPiece { polyline: left });
    }
    Ok(())
}

/// The ball decomposition (b; w_1, …, w_n) of an anchored toric region.
///
/// The region must lie in the closed positive quadrant and touch both
/// coordinate axes; b is the maximum of x+y over the region.
pub fn weight_decomposition(region: &ConvexRegion) -> Result<WeightSequence, EchError> {
    if !region.in_positive_quadrant() {
        return Err(EchError::NotInPositiveQuadrant);
    }
    if region.min_x().is_positive() || region.min_y().is_positive() {
        return Err(EchError::RegionNotAnchored);
    }
    let verts = region.vertices();
    let n = verts.len();
    let b = verts
        .iter()
        .map(|v| &v.x + &v.y)
        .max()
        .expect("region has vertices");
    let level = |i: usize| &verts[i].x + &verts[i].y;
    // Contact runs on the three sides of T(b); each is one vertex or an
    // edge's two endpoints because hull vertices are in strictly convex
    // position.
    let pick = |on: &dyn Fn(usize) -> bool, key: &dyn Fn(usize) -> Rational, want_max: bool| {
        let mut found: Option<usize> = None;
        for i in 0..n {
            if on(i) {
                found = Some(match found {
                    None => i,
                    Some(j) => {
                        let better = if want_max { key(i) > key(j) } else { key(i) < key(j) };
                        if better {
                            i
                        } else {
                            j
                        }
                    }
                });
            }
        }
        found
    };
    let on_bottom = |i: usize| verts[i].y.is_zero();
    let on_left = |i: usize| verts[i].x.is_zero();
    let on_hyp = |i: usize| level(i) == b;
    let x_of = |i: usize| verts[i].x.clone();
    let y_of = |i: usize| verts[i].y.clone();
    let bottom_lo = pick(&on_bottom, &x_of, false).expect("region touches the x-axis");
    let bottom_hi = pick(&on_bottom, &x_of, true).expect("region touches the x-axis");
    let left_lo = pick(&on_left, &y_of, false).expect("region touches the y-axis");
    let left_hi = pick(&on_left, &y_of, true).expect("region touches the y-axis");
    let hyp_left = pick(&on_hyp, &x_of, false).expect("b is attained");
    let hyp_right = pick(&on_hyp, &x_of, true).expect("b is attained");
    let arc = |from: usize, to: usize| -> Vec<PointQ> {
        let mut out = vec![verts[from].clone()];
        let mut i = from;
        while i != to {
            i = (i + 1) % n;
            out.push(verts[i].clone());
        }
        out
    };
    // Corner at the origin: the arc already runs y-axis to x-axis.
    let origin_piece = CornerPiece {
        polyline: arc(left_lo, bottom_lo),
    };
    // Corner at (b, 0): map (x, y) to (b-x-y, y), sending the hypotenuse
    // to the y-axis, then reverse the arc to run y-axis to x-axis.
    let mut bottom_arc: Vec<PointQ> = arc(bottom_hi, hyp_right)
        .iter()
        .map(|v| PointQ::new(&(&b - &v.x) - &v.y, v.y.clone()))
        .collect();
    bottom_arc.reverse();
    // Corner at (0, b): map (x, y) to (x, b-x-y), sending the hypotenuse
    // to the x-axis.
    let mut left_arc: Vec<PointQ> = arc(hyp_left, left_hi)
        .iter()
        .map(|v| PointQ::new(v.x.clone(), &(&b - &v.x) - &v.y))
        .collect();
    left_arc.reverse();
    let mut weights = Vec::new();
    concave_weights(
        vec![
            origin_piece,
            CornerPiece { polyline: bottom_arc },
            CornerPiece { polyline: left_arc },
        ],
        &mut weights,
    )?;
    Ok(WeightSequence::new(b, weights))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point;
    use crate::rational::{int, ratio};

    fn region(pts: &[(i64, i64)]) -> ConvexRegion {
        ConvexRegion::from_points(&pts.iter().map(|&(x, y)| point(x, y)).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn right_triangle_is_a_single_ball() {
        for d in 1..=4 {
            let w = weight_decomposition(&region(&[(0, 0), (d, 0), (0, d)])).unwrap();
            assert_eq!(w.head(), &int(d));
            assert!(w.weights().is_empty());
        }
    }

    #[test]
    fn tilted_unit_square_decomposes_into_five_unit_balls() {
        let w = weight_decomposition(&region(&[(1, 0), (2, 1), (1, 2), (0, 1)])).unwrap();
        assert_eq!(w.head(), &int(3));
        assert_eq!(w.weights(), &vec![int(1); 5][..]);
    }

    #[test]
    fn anchored_tilted_triangle_decomposes_into_six_unit_balls() {
        let w = weight_decomposition(&region(&[(0, 0), (2, 1), (1, 2)])).unwrap();
        assert_eq!(w.head(), &int(3));
        assert_eq!(w.weights(), &vec![int(1); 6][..]);
    }

    #[test]
    fn axis_square_decomposition() {
        let w = weight_decomposition(&region(&[(0, 0), (1, 0), (1, 1), (0, 1)])).unwrap();
        assert_eq!(w.head(), &int(2));
        assert_eq!(w.weights(), &[int(1), int(1)]);
    }

    /// head² − Σ w² equals twice the region's area for every input.
    #[test]
    fn volume_accounting() {
        let regions = [
            region(&[(0, 0), (2, 1), (1, 2)]),
            region(&[(1, 0), (2, 1), (1, 2), (0, 1)]),
            region(&[(0, 0), (3, 0), (0, 2)]),
            region(&[(0, 0), (2, 0), (2, 1), (0, 1)]),
        ];
        for r in regions {
            let w = weight_decomposition(&r).unwrap();
            let lhs = w.head() * w.head() - w.sum_of_squares();
            assert_eq!(lhs, r.area() * int(2));
        }
    }

    #[test]
    fn rational_vertices_terminate() {
        let r = ConvexRegion::from_points(&[
            point(0, 0),
            PointQ::new(ratio(5, 2), ratio(0, 1)),
            PointQ::new(ratio(1, 2), ratio(3, 2)),
            PointQ::new(ratio(0, 1), ratio(1, 1)),
        ])
        .unwrap();
        let w = weight_decomposition(&r).unwrap();
        let lhs = w.head() * w.head() - w.sum_of_squares();
        assert_eq!(lhs, r.area() * int(2));
    }

    #[test]
    fn rejects_regions_outside_the_quadrant_or_off_the_axes() {
        assert!(matches!(
            weight_decomposition(&region(&[(-1, 0), (1, 0), (0, 1)])),
            Err(EchError::NotInPositiveQuadrant)
        ));
        assert!(matches!(
            weight_decomposition(&region(&[(1, 1), (2, 1), (1, 2)])),
            Err(EchError::RegionNotAnchored)
        ));
        assert!(matches!(
            weight_decomposition(&region(&[(0, 1), (1, 1), (1, 2), (0, 2)])),
            Err(EchError::RegionNotAnchored)
        ));
    }

    #[test]
    fn display_formats_head_and_weights() {
        let w = WeightSequence::new(int(3), vec![int(1), ratio(3, 2)]);
        assert_eq!(w.to_string(), "(3; 3/2, 1)");
        assert_eq!(WeightSequence::new(int(2), vec![]).to_string(), "(2)");
    }
}
