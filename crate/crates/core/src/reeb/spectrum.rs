//! Closed-orbit classes on T² × ∂A and the action spectrum.
//!
//! A fiber point p ∈ ∂A carries a closed Reeb orbit for every primitive
//! integer rescaling w of the outward normal at p; the orbit's action is
//! w·p. Edges therefore contribute their primitive normal with action
//! constant along the edge; vertices contribute every primitive direction
//! in the open normal arc at the vertex. Iterated covers multiply the base
//! action.

use super::arcs::{directions_in_cone, Cone};
use super::ReebError;
use crate::geometry::{normal_features, Direction, NormalFeature, PointQ, StarPolygon, VecQ};
use crate::rational::Rational;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// Which boundary feature carries an orbit class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FeatureKind {
    Edge,
    Vertex,
}

impl FeatureKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FeatureKind::Edge => "edge",
            FeatureKind::Vertex => "vertex",
        }
    }
}

/// A family of closed Reeb orbits: all orbits over the boundary locus with
/// the given primitive normal direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClass {
    /// Index into `normal_features` of the fiber polygon.
    pub feature_index: usize,
    pub kind: FeatureKind,
    /// Primitive integer rescaling of the outward normal.
    pub direction: Direction,
    /// A fiber point realizing the direction (edge midpoint or vertex).
    pub base_point: PointQ,
    /// Action of the simple orbit, direction · base_point.
    pub base_action: Rational,
    /// Iterate multiplicity; the orbit's action is cover × base_action.
    pub cover: u32,
}

impl OrbitClass {
    pub fn action(&self) -> Rational {
        &self.base_action * Rational::from_integer(self.cover.into())
    }
}

/// The action spectrum up to a cutoff: sorted actions with the orbit
/// classes (including covers) realizing each.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub cutoff: Rational,
    pub actions: Vec<(Rational, Vec<OrbitClass>)>,
}

impl Spectrum {
    /// The minimal action, when any orbit exists below the cutoff.
    pub fn min_action(&self) -> Option<&Rational> {
        self.actions.first().map(|(a, _)| a)
    }
}

fn midpoint(a: &PointQ, b: &PointQ) -> PointQ {
    a.add(b).scale(&crate::rational::ratio(1, 2))
}

fn class_sort_key(c: &OrbitClass) -> (Rational, Direction, usize, u32) {
    (c.base_action.clone(), c.direction.clone(), c.feature_index, c.cover)
}

/// All simple orbit classes with base action ≤ cutoff, sorted by
/// (base_action, direction, feature).
pub fn orbit_classes(p: &StarPolygon, cutoff: &Rational) -> Vec<OrbitClass> {
    assert!(cutoff.is_positive(), "spectrum cutoff must be positive");
    let mut classes = Vec::new();
    for (feature_index, feature) in normal_features(p).iter().enumerate() {
        match feature {
            NormalFeature::Edge { start, end, direction, .. } => {
                let base_action = direction.dot_point(start);
                debug_assert_eq!(
                    base_action,
                    direction.dot_point(end),
                    "edge action must be constant along the edge"
                );
                if base_action <= *cutoff {
                    classes.push(OrbitClass {
                        feature_index,
                        kind: FeatureKind::Edge,
                        direction: direction.clone(),
                        base_point: midpoint(start, end),
                        base_action,
                        cover: 1,
                    });
                }
            }
            NormalFeature::Vertex { point, .. } => {
                let Some(cone) = Cone::of_vertex_feature(feature) else {
                    continue;
                };
                for (direction, base_action) in directions_in_cone(&cone, point, cutoff) {
                    classes.push(OrbitClass {
                        feature_index,
                        kind: FeatureKind::Vertex,
                        direction,
                        base_point: point.clone(),
                        base_action,
                        cover: 1,
                    });
                }
            }
        }
    }
    classes.sort_by_key(class_sort_key);
    classes
}

/// The action spectrum up to the cutoff, covers included.
pub fn spectrum(p: &StarPolygon, cutoff: &Rational) -> Spectrum {
    let simple = orbit_classes(p, cutoff);
    let mut buckets: BTreeMap<Rational, Vec<OrbitClass>> = BTreeMap::new();
    for class in simple {
        let max_cover = (cutoff / &class.base_action).floor();
        let max_cover = max_cover
            .numer()
            .try_into()
            .expect("cover count fits in u32 at desk scale");
        for cover in 1..=max_cover {
            let mut covered = class.clone();
            covered.cover = cover;
            buckets.entry(covered.action()).or_default().push(covered);
        }
    }
    let actions = buckets
        .into_iter()
        .map(|(action, mut classes)| {
            classes.sort_by_key(class_sort_key);
            (action, classes)
        })
        .collect();
    Spectrum { cutoff: cutoff.clone(), actions }
}

/// The Reeb direction at an edge-interior boundary point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReebDirection {
    /// V with p·V = 1: the orbit advances along V in the base torus.
    pub v: VecQ,
    /// Whether the fiber direction closes up (rational normal direction).
    pub closed: bool,
    /// The primitive integer direction when closed.
    pub direction: Option<Direction>,
}

/// Locates p on ∂P and reports the Reeb direction there.
///
/// The direction is V(p) = n(p)/(p·n(p)), which is well defined on edge
/// interiors; vertex queries are ambiguous (the normal sweeps an arc) and
/// are reported as errors, as are points off the boundary.
pub fn reeb_direction(p: &StarPolygon, x: &PointQ) -> Result<ReebDirection, ReebError> {
    if p.vertices().iter().any(|v| v == x) {
        return Err(ReebError::QueryAtVertex);
    }
    let n = p.len();
    for i in 0..n {
        let (a, b) = p.edge(i);
        let edge = b.sub(a);
        let offset = x.sub(a);
        if !edge.cross(&offset).is_zero() {
            continue;
        }
        let along = offset.dot(&edge);
        if along.is_negative() || along > edge.dot(&edge) {
            continue;
        }
        let normal = p.edge_normal(i);
        let scale = x.dot(&normal);
        debug_assert!(scale.is_positive(), "star polygon keeps the origin inside");
        let v = normal.scale(&scale.recip());
        let direction = Direction::from_vec(&normal);
        return Ok(ReebDirection { v, closed: direction.is_some(), direction });
    }
    Err(ReebError::PointNotOnBoundary)
}
