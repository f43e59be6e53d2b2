//! Capacities of balls and disjoint unions of balls.
//!
//! Ball sizes are denominated in capacity units: B(a) is the ball of
//! Gromov width a (area of the moment interval), so every capacity is an
//! exact rational. c_k(B(a)) = a·d where d is the unique index with
//! (d²+d)/2 ≤ k ≤ (d²+3d)/2, and the capacity of a disjoint union
//! maximizes Σ aᵢdᵢ over Σ(dᵢ²+dᵢ)/2 ≤ k.

use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// The triangular number d(d+1)/2: the cost of index d.
pub(crate) fn tri(d: u64) -> u64 {
    d * (d + 1) / 2
}

/// The largest index d with tri(d) ≤ budget.
pub(crate) fn max_index(budget: u64) -> u64 {
    let s = (8u128 * u128::from(budget) + 1).isqrt() as u64;
    (s - 1) / 2
}

/// The k-th capacity of the ball of size a.
///
/// max_index(k) = d also satisfies k ≤ (d²+3d)/2: k < tri(d+1) means
/// 2k ≤ d² + 3d, which is the upper end of the plateau for d.
pub fn ball_capacity(a: &Rational, k: u64) -> Rational {
    assert!(a.is_positive(), "ball size must be positive");
    a * Rational::from_integer(max_index(k).into())
}

/// Common denominator scaling: weights as integers plus the scale.
fn scaled_values(weights: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let scale = weights
        .iter()
        .fold(BigInt::from(1), |acc, w| num_integer::lcm(acc, w.denom().clone()));
    let values = weights
        .iter()
        .map(|w| (w * Rational::from_integer(scale.clone())).to_integer())
        .collect();
    (values, scale)
}

/// Exact maximization of Σ vᵢdᵢ subject to Σ tri(dᵢ) ≤ t for every
/// budget t ≤ kmax, one weight at a time: each ball's index is chosen
/// independently, so the table after weight j is
/// dp[t] = max over d of dp_prev[t − tri(d)] + vⱼ·d.
fn union_table_scaled(values: &[BigInt], kmax: u64) -> Vec<BigInt> {
    let mut dp = vec![BigInt::zero(); kmax as usize + 1];
    for v in values {
        let mut next = dp.clone();
        for t in 1..=kmax {
            for d in 1..=max_index(t) {
                let cand = &dp[(t - tri(d)) as usize] + v * BigInt::from(d);
                if cand > next[t as usize] {
                    next[t as usize] = cand;
                }
            }
        }
        dp = next;
    }
    dp
}

/// The k-th capacity of the disjoint union of balls of the given sizes.
pub fn union_capacity(weights: &[Rational], k: u64) -> Rational {
    assert!(weights.iter().all(|w| w.is_positive()), "ball sizes must be positive");
    if weights.is_empty() || k == 0 {
        return Rational::zero();
    }
    let (values, scale) = scaled_values(weights);
    let dp = union_table_scaled(&values, k);
    Rational::new(dp[k as usize].clone(), scale)
}

/// All union capacities for k = 0, …, kmax in one pass.
pub fn union_capacity_table(weights: &[Rational], kmax: u64) -> Vec<Rational> {
    assert!(weights.iter().all(|w| w.is_positive()), "ball sizes must be positive");
    if weights.is_empty() {
        return vec![Rational::zero(); kmax as usize + 1];
    }
    let (values, scale) = scaled_values(weights);
    union_table_scaled(&values, kmax)
        .into_iter()
        .map(|v| Rational::new(v, scale.clone()))
        .collect()
}
