//! Capacity transfer between a monotone toric domain X over a moment
//! region Ω in the positive quadrant and the product domain T² × Ω.
//!
//! For monotone Ω the two domains have the same capacity sequence, so the
//! product's capacities can be read off the toric side: the weight
//! expansion of Ω determines every c_k, and the first capacity is the
//! common normalized value.

use super::CapacityError;
use crate::ech::{
    gen_toric_capacity, weight_decomposition, CapacitySequence, WeightSequence,
};
use crate::geometry::ConvexRegion;
use num_traits::{Signed, Zero};

/// The transferred capacity data shared by X over Ω and T² × Ω.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricTransferReport {
    /// Weight expansion of the moment region.
    pub weights: WeightSequence,
    /// The common capacity sequence c_1 .. c_k_max of both domains.
    pub capacities: CapacitySequence,
    /// The common value of every ball-normalized capacity, which is the
    /// first capacity of the sequence.
    pub common_value: crate::rational::Rational,
    /// True when the region is affinely a ball's moment triangle, so the
    /// weight expansion has no tail.
    pub is_ball: bool,
}

/// Checks that Ω is the moment image of a monotone toric domain and
/// computes the capacity data shared by that domain and T² × Ω.
///
/// Monotonicity is checked edge-wise: every boundary edge must either lie
/// on a coordinate axis or have an outward normal with both entries
/// nonnegative. Regions leaving the quadrant fail the same precondition.
pub fn toric_transfer(
    region: &ConvexRegion,
    k_max: u64,
) -> Result<ToricTransferReport, CapacityError> {
    if !region.in_positive_quadrant() {
        return Err(CapacityError::NotMonotone);
    }
    let verts = region.vertices();
    let n = verts.len();
    for i in 0..n {
        let a = &verts[i];
        let b = &verts[(i + 1) % n];
        let on_x_axis = a.y.is_zero() && b.y.is_zero();
        let on_y_axis = a.x.is_zero() && b.x.is_zero();
        if on_x_axis || on_y_axis {
            continue;
        }
        let normal = b.sub(a).outward_normal();
        if normal.x.is_negative() || normal.y.is_negative() {
            return Err(CapacityError::NotMonotone);
        }
    }
    let weights = weight_decomposition(region)
        .expect("monotone regions are anchored to both axes and decompose");
    let capacities = CapacitySequence::gen_toric(&weights, k_max.max(1));
    let common_value = gen_toric_capacity(&weights, 1);
    let is_ball = weights.weights().is_empty();
    Ok(ToricTransferReport { weights, capacities, common_value, is_ball })
}
