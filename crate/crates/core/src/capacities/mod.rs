//! Normalized-capacity determinations for product domains T² × A.
//!
//! Every ball-normalized symplectic capacity takes the same value 2·sys on
//! a codisc bundle whose centrally symmetric convex fiber is either
//! axis-symmetric or has systolic ratio at most 1/8. Outside those two
//! rules the capacity is pinned between the Gromov width of the anchored
//! toric model and 2·sys. The module also computes the capacity of
//! rectangle fibers and tilted cylinders, transfers capacities between
//! monotone toric domains and their product counterparts, and probes for
//! a gap between the Gromov width and 2·sys, which would contradict the
//! strong Viterbo conjecture for the fiber's Lagrangian product.

mod cylinder;
mod transfer;

pub use cylinder::{
    strip_witness_polygon, tilted_cylinder_capacity, CapacityScalar, CylinderDirection,
};
pub use transfer::{toric_transfer, ToricTransferReport};

use crate::ech::{gromov_width, weight_decomposition};
use crate::geometry::{
    is_axis_symmetric, is_centrally_symmetric, is_convex, vec2, ConvexRegion, StarPolygon,
};
use crate::rational::{ratio, Rational};
use crate::reeb::{sys, sys_ratio};
use num_traits::Signed;
use thiserror::Error;

/// Precondition failures of the capacity determinations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CapacityError {
    /// The fiber polygon is not convex.
    #[error("fiber polygon must be convex")]
    NotConvex,
    /// The fiber polygon is not symmetric about the origin.
    #[error("fiber polygon must be centrally symmetric")]
    NotCentrallySymmetric,
    /// The strip normal is an integer vector with a common factor.
    #[error("strip normal must be a prime integer vector")]
    NotPrime,
    /// The region is not the moment image of a monotone toric domain.
    #[error("moment region must be monotone: profile normals nonnegative")]
    NotMonotone,
}

/// Which determination produced a capacity verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapacityRule {
    /// Systolic ratio at most 1/8 pins the value to 2·sys.
    SmallSystolicRatio,
    /// Symmetry about both coordinate axes pins the value to 2·sys.
    AxisSymmetry,
    /// Neither rule applies; only the interval bounds are known.
    IntervalOnly,
}

impl CapacityRule {
    pub fn as_str(&self) -> &'static str {
        match self {
            CapacityRule::SmallSystolicRatio => "small_systolic_ratio",
            CapacityRule::AxisSymmetry => "axis_symmetry",
            CapacityRule::IntervalOnly => "interval_only",
        }
    }
}

/// An exact capacity value or a two-sided enclosure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CapacityValue {
    Exact(Rational),
    Interval { lo: Rational, hi: Rational },
}

/// The outcome of a normalized-capacity determination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapacityVerdict {
    pub value: CapacityValue,
    pub rule: CapacityRule,
    /// Systole of the fiber boundary, the active quantity in both rules.
    pub sys: Rational,
    /// Systolic ratio of the fiber, the hypothesis of the first rule.
    pub sys_ratio: Rational,
}

impl CapacityVerdict {
    /// Lower end of the verdict (the value itself when exact).
    pub fn lo(&self) -> &Rational {
        match &self.value {
            CapacityValue::Exact(v) => v,
            CapacityValue::Interval { lo, .. } => lo,
        }
    }

    /// Upper end of the verdict (the value itself when exact).
    pub fn hi(&self) -> &Rational {
        match &self.value {
            CapacityValue::Exact(v) => v,
            CapacityValue::Interval { hi, .. } => hi,
        }
    }
}

/// Translates a convex fiber into the positive quadrant so that it touches
/// both axes, the position required by the weight expansion.
pub fn anchored_model(fiber: &StarPolygon) -> ConvexRegion {
    let shift_x = fiber.support_vec(&vec2(ratio(-1, 1), ratio(0, 1)));
    let shift_y = fiber.support_vec(&vec2(ratio(0, 1), ratio(-1, 1)));
    let shifted: Vec<_> = fiber.vertices().iter().map(|v| v.add(&vec2(shift_x.clone(), shift_y.clone()))).collect();
    ConvexRegion::from_points(&shifted).expect("a convex fiber translates to a convex region")
}

/// The common value of every ball-normalized capacity on the codisc bundle
/// with fiber A, when one of the two coincidence rules pins it down.
///
/// With systolic ratio at most 1/8, or with symmetry about both coordinate
/// axes, the value is exactly 2·sys(∂A). Otherwise the verdict is the
/// interval from the Gromov width of the anchored toric model up to 2·sys.
pub fn normalized_capacity(fiber: &StarPolygon) -> Result<CapacityVerdict, CapacityError> {
    if !is_convex(fiber) {
        return Err(CapacityError::NotConvex);
    }
    if !is_centrally_symmetric(fiber) {
        return Err(CapacityError::NotCentrallySymmetric);
    }
    let s = sys(fiber);
    let rho = sys_ratio(fiber);
    let two_sys = ratio(2, 1) * &s;
    let rule = if rho <= ratio(1, 8) {
        CapacityRule::SmallSystolicRatio
    } else if is_axis_symmetric(fiber) {
        CapacityRule::AxisSymmetry
    } else {
        CapacityRule::IntervalOnly
    };
    let value = match rule {
        CapacityRule::IntervalOnly => {
            let weights = weight_decomposition(&anchored_model(fiber))
                .expect("anchored convex fibers decompose");
            let lo = gromov_width(&weights);
            debug_assert!(lo <= two_sys, "width never exceeds the first capacity");
            CapacityValue::Interval { lo, hi: two_sys }
        }
        _ => CapacityValue::Exact(two_sys),
    };
    Ok(CapacityVerdict { value, rule, sys: s, sys_ratio: rho })
}

/// The capacity of the codisc bundle over the rectangle fiber
/// [-a, a] × [-b, b] with 0 < a ≤ b: the short half-width doubled.
pub fn rectangle_capacity(a: &Rational, b: &Rational) -> Rational {
    assert!(a.is_positive() && a <= b, "rectangle needs 0 < a <= b");
    ratio(2, 1) * a
}

/// Outcome of the width-versus-capacity probe on a symmetric convex fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViterboProbe {
    /// Gromov width of the anchored toric model of T² × A.
    pub width: Rational,
    /// 2·sys(∂A), the value forced on the width when the fiber's
    /// Lagrangian product A × A° satisfies the strong Viterbo conjecture.
    pub double_sys: Rational,
    /// True when width < 2·sys, which would make the Gromov width of
    /// A × A° strictly smaller than its cylindrical capacity 4.
    pub gap: bool,
    pub summary: String,
}

/// Probes whether the Gromov width of T² × A falls short of 2·sys(∂A).
///
/// A strict shortfall would force c_Gr(A × A°) < 4 = c_HZ(A × A°) and so
/// refute the strong Viterbo conjecture on the Lagrangian product; no
/// fiber with a gap is known. The fiber must be convex and centrally
/// symmetric.
pub fn viterbo_probe(fiber: &StarPolygon) -> ViterboProbe {
    assert!(is_convex(fiber), "probe fiber must be convex");
    assert!(is_centrally_symmetric(fiber), "probe fiber must be centrally symmetric");
    let s = sys(fiber);
    let double_sys = ratio(2, 1) * &s;
    let weights =
        weight_decomposition(&anchored_model(fiber)).expect("anchored convex fibers decompose");
    let width = gromov_width(&weights);
    let gap = width < double_sys;
    let summary = if gap {
        format!(
            "width {} < {} = 2 sys: Gromov width of the Lagrangian product drops below \
             its cylindrical capacity 4, contradicting the strong Viterbo conjecture",
            width, double_sys
        )
    } else {
        format!("no gap detected: width = 2 sys = {}", double_sys)
    };
    ViterboProbe { width, double_sys, gap, summary }
}
