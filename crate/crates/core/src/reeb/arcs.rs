//! Primitive integer directions inside a vertex normal arc.
//!
//! A vertex of the fiber polygon contributes one closed orbit class per
//! primitive integer vector in its (open) normal arc, with action w·p at
//! the vertex p. Both the minimum action and the list of actions below a
//! cutoff are computed by Stern–Brocot subdivision of the arc's cone:
//! for a cone spanned by integer vectors a, b with D = a×b > 0, every
//! interior integer w satisfies w·p ≥ (a·p + b·p)/D, which prunes the
//! recursion exactly.

use crate::geometry::{Direction, NormalFeature, PointQ};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// An open planar cone between two primitive directions with positive
/// cross product (angular width in (0, π)).
#[derive(Debug, Clone)]
pub(crate) struct Cone {
    a: Direction,
    b: Direction,
}

impl Cone {
    /// The open normal cone of a vertex feature, oriented counterclockwise.
    /// `None` when the arc is degenerate (collinear adjacent edges).
    pub(crate) fn of_vertex_feature(feature: &NormalFeature) -> Option<Cone> {
        let (lo, hi) = feature.oriented_cone()?;
        if lo.cross(&hi).is_zero() {
            return None;
        }
        Some(Cone {
            a: Direction::from_vec(&lo).expect("edge normal is nonzero"),
            b: Direction::from_vec(&hi).expect("edge normal is nonzero"),
        })
    }

    #[cfg(test)]
    pub(crate) fn contains_open(&self, w: &Direction) -> bool {
        let cross_aw = self.a.m() * w.n() - self.a.n() * w.m();
        let cross_wb = w.m() * self.b.n() - w.n() * self.b.m();
        cross_aw.is_positive() && cross_wb.is_positive()
    }
}

fn cross(a: &Direction, b: &Direction) -> BigInt {
    a.m() * b.n() - a.n() * b.m()
}

fn mediant(a: &Direction, b: &Direction) -> Direction {
    Direction::primitive(a.m() + b.m(), a.n() + b.n()).expect("mediant of a proper cone")
}

/// Minimum of w·p over primitive integer w strictly inside the cone,
/// considering only values strictly below `bound` (pass the best edge
/// action so far). Returns the improved minimum with a witness direction.
pub(crate) fn min_action_in_cone(
    cone: &Cone,
    p: &PointQ,
    bound: &Rational,
) -> Option<(Direction, Rational)> {
    let mut best: Option<(Direction, Rational)> = None;
    let mut current = bound.clone();
    descend_min(&cone.a, &cone.b, p, &mut current, &mut best);
    best
}

fn descend_min(
    a: &Direction,
    b: &Direction,
    p: &PointQ,
    best_value: &mut Rational,
    best: &mut Option<(Direction, Rational)>,
) {
    let d = cross(a, b);
    debug_assert!(d.is_positive(), "cone generators must be ordered");
    let fa = a.dot_point(p);
    let fb = b.dot_point(p);
    // Interior points w = (αa + βb) with α, β ≥ 1/D, so w·p ≥ (fa+fb)/D.
    let lower = (&fa + &fb) / Rational::from_integer(d);
    if lower >= *best_value {
        return;
    }
    let m = mediant(a, b);
    let fm = m.dot_point(p);
    if fm < *best_value {
        *best_value = fm.clone();
        *best = Some((m.clone(), fm));
    }
    descend_min(a, &m, p, best_value, best);
    descend_min(&m, b, p, best_value, best);
}

/// All primitive integer directions strictly inside the cone with action
/// w·p ≤ cutoff, sorted by (action, direction).
pub(crate) fn directions_in_cone(
    cone: &Cone,
    p: &PointQ,
    cutoff: &Rational,
) -> Vec<(Direction, Rational)> {
    let mut out = Vec::new();
    descend_list(&cone.a, &cone.b, p, cutoff, &mut out);
    out.sort_by(|x, y| (&x.1, x.0.m(), x.0.n()).cmp(&(&y.1, y.0.m(), y.0.n())));
    out
}

fn descend_list(
    a: &Direction,
    b: &Direction,
    p: &PointQ,
    cutoff: &Rational,
    out: &mut Vec<(Direction, Rational)>,
) {
    let d = cross(a, b);
    debug_assert!(d.is_positive(), "cone generators must be ordered");
    let fa = a.dot_point(p);
    let fb = b.dot_point(p);
    if (&fa + &fb) / Rational::from_integer(d) > *cutoff {
        return;
    }
    let m = mediant(a, b);
    let fm = m.dot_point(p);
    if fm <= *cutoff {
        out.push((m.clone(), fm));
    }
    descend_list(a, &m, p, cutoff, out);
    descend_list(&m, b, p, cutoff, out);
}
