//! ECH capacities and symplectic embedding certificates.
//!
//! Four computation families, all exact:
//! * balls and disjoint unions of balls (closed-form index arithmetic
//!   plus a dynamic program),
//! * flat codisc bundles over centrally symmetric fibers (minimal
//!   norm-perimeter of convex lattice polygons),
//! * ball decompositions of anchored convex toric regions and the
//!   derived capacities of generalized convex toric domains,
//! * ball-embedding certificates with an explicit finite check range and
//!   an analytic tail bound, plus Gromov widths.

mod balls;
mod embed;
mod lattice;
mod weights;

pub use balls::{ball_capacity, union_capacity, union_capacity_table};
pub use embed::{
    embed_ball_check, gen_toric_capacity, gen_toric_capacity_detailed, gromov_width,
    CertificateMethod, EmbedVerdict, EmbeddingCertificate,
};
pub use lattice::{flat_capacity, lattice_count, wulff_lower_bound, LatticePolygon};
pub use weights::{weight_decomposition, WeightSequence};

use crate::geometry::ConvexPolygon;
use crate::rational::Rational;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EchError {
    #[error("weight decomposition did not terminate within its step budget")]
    NonTerminating,
    #[error("region must lie in the closed positive quadrant")]
    NotInPositiveQuadrant,
    #[error("region must touch both coordinate axes")]
    RegionNotAnchored,
    #[error("total ball area {sum_sq} exceeds the head ball area {head_sq}; the tail inequality never holds")]
    TailBoundFails { sum_sq: Rational, head_sq: Rational },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapacitySource {
    Ball,
    Union,
    Flat,
    GenToric,
}

impl CapacitySource {
    pub fn as_str(&self) -> &'static str {
        match self {
            CapacitySource::Ball => "ball",
            CapacitySource::Union => "union",
            CapacitySource::Flat => "flat",
            CapacitySource::GenToric => "gen_toric",
        }
    }
}

/// Capacities c_0, …, c_kmax of one domain, tagged with how they were
/// computed. Always starts at 0 and is nondecreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapacitySequence {
    source: CapacitySource,
    values: Vec<Rational>,
}

impl CapacitySequence {
    fn new(source: CapacitySource, values: Vec<Rational>) -> CapacitySequence {
        assert!(!values.is_empty());
        assert!(values[0].is_zero(), "capacities start at c_0 = 0");
        assert!(
            values.windows(2).all(|w| w[0] <= w[1]),
            "capacities are nondecreasing"
        );
        CapacitySequence { source, values }
    }

    pub fn ball(a: &Rational, k_max: u64) -> CapacitySequence {
        let values = (0..=k_max).map(|k| ball_capacity(a, k)).collect();
        CapacitySequence::new(CapacitySource::Ball, values)
    }

    pub fn union(weights: &[Rational], k_max: u64) -> CapacitySequence {
        CapacitySequence::new(CapacitySource::Union, union_capacity_table(weights, k_max))
    }

    pub fn flat(fiber: &ConvexPolygon, k_max: u64) -> CapacitySequence {
        let values = (0..=k_max).map(|k| flat_capacity(fiber, k)).collect();
        CapacitySequence::new(CapacitySource::Flat, values)
    }

    pub fn gen_toric(weights: &WeightSequence, k_max: u64) -> CapacitySequence {
        let values = (0..=k_max).map(|k| gen_toric_capacity(weights, k)).collect();
        CapacitySequence::new(CapacitySource::GenToric, values)
    }

    pub fn source(&self) -> CapacitySource {
        self.source
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, k: u64) -> &Rational {
        &self.values[k as usize]
    }

    pub fn k_max(&self) -> u64 {
        (self.values.len() - 1) as u64
    }
}
