//! Ball-embedding certificates, Gromov widths, and capacities of
//! generalized convex toric domains.
//!
//! Everything reduces to ball arithmetic: a ball B(a) embeds into the
//! domain with ball decomposition (b; w₁, …, wₙ) exactly when the
//! disjoint union ⊔ B(wᵢ) ⊔ B(a) embeds into B(b), which in turn holds
//! exactly when every capacity inequality
//! union_capacity(w ∪ {a}, k) ≤ ball_capacity(b, k) does.

use super::balls::{ball_capacity, max_index, tri, union_capacity_table};
use super::weights::WeightSequence;
use super::EchError;
use crate::rational::{ceil_sqrt, floor_sqrt, int, ratio, sqrt_exact, Rational};
use num_traits::{Signed, Zero};

/// Dyadic precision for the one-sided square-root bounds used in loop
/// termination tests (never in certified values).
const SQRT_BITS: u32 = 64;

/// Hard cap on adaptive searches; reaching it means the instance is far
/// outside the intended desk scale.
const SEARCH_BUDGET: u64 = 1 << 20;

/// The least K with √(2k·sum_sq) ≤ head·(√(2k + 9/4) − 3/2) for every
/// k ≥ K: squaring twice reduces the inequality to
/// 2k(head² − sum_sq)² ≥ 9·head²·sum_sq, which is monotone in k.
///
/// Requires sum_sq < head²; at equality the inequality fails for all k.
pub(crate) fn tail_threshold(head: &Rational, sum_sq: &Rational) -> u64 {
    let head_sq = head * head;
    let gap = &head_sq - sum_sq;
    assert!(gap.is_positive(), "tail bound needs total ball area below head area");
    if sum_sq.is_zero() {
        return 1;
    }
    let bound = int(9) * head_sq * sum_sq / (int(2) * &gap * &gap);
    u64::try_from(bound.ceil().to_integer())
        .expect("tail threshold fits u64")
        .max(1)
}

/// Direct exact test of √(2k·sum_sq) ≤ head·(√(2k + 9/4) − 3/2) by
/// squaring twice, used to cross-check the closed-form threshold.
#[cfg(test)]
fn tail_inequality_holds(head: &Rational, sum_sq: &Rational, k: u64) -> bool {
    let head_sq = head * head;
    let two_k = int(2 * k as i64);
    // First squaring rearranged: 3·head²·√(2k+9/4) ≤ 2k(head²−sum_sq) + (9/2)head².
    let rhs = &two_k * (&head_sq - sum_sq) + ratio(9, 2) * &head_sq;
    if rhs.is_negative() {
        return false;
    }
    let radicand = &two_k + ratio(9, 4);
    int(9) * &head_sq * &head_sq * radicand <= &rhs * &rhs
}

/// Whether (head; sizes) reduces to a nonnegative form under Cremona
/// moves: repeatedly replace (b; a₁ ≥ a₂ ≥ a₃, …) by
/// (b − δ; a₁ − δ, a₂ − δ, a₃ − δ, …) with δ = a₁ + a₂ + a₃ − b, until
/// δ ≤ 0 (embeds) or a negative entry appears (obstructed).
///
/// All values stay in (1/N)ℤ for the common denominator N and the head
/// strictly decreases, so the loop terminates.
pub(crate) fn cremona_embeds(head: &Rational, sizes: &[Rational]) -> bool {
    let mut b = head.clone();
    let mut ws: Vec<Rational> = sizes.to_vec();
    loop {
        ws.retain(|w| !w.is_zero());
        if b.is_negative() || ws.iter().any(|w| w.is_negative()) {
            return false;
        }
        ws.sort_by(|x, y| y.cmp(x));
        while ws.len() < 3 {
            ws.push(Rational::zero());
        }
        let delta = &ws[0] + &ws[1] + &ws[2] - &b;
        if !delta.is_positive() {
            return true;
        }
        b -= &delta;
        for w in ws.iter_mut().take(3) {
            *w -= &delta;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbedVerdict {
    Embeds,
    ObstructedAtK {
        k: u64,
        union_value: Rational,
        ball_value: Rational,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateMethod {
    /// Explicit capacity checks up to the tail threshold; the
    /// Cauchy–Schwarz tail bound covers every larger index.
    CapacityTail,
    /// Volume-filling case (Σ sizes² = head²), certified by Cremona
    /// reduction; the explicit checks corroborate.
    ExactFillingReduction,
}

/// A verified finite list of capacity inequalities plus the analytic
/// argument covering the remaining indices.
#[derive(Debug, Clone)]
pub struct EmbeddingCertificate {
    pub target: WeightSequence,
    pub ball: Rational,
    /// Largest index whose inequality was evaluated explicitly.
    pub explicit_k_max: u64,
    /// Index from which the analytic tail bound applies; 0 when the
    /// certificate rests on the reduction method instead.
    pub tail_bound_k: u64,
    /// checked[k-1] records whether the inequality held at index k.
    pub checked: Vec<bool>,
    pub verdict: EmbedVerdict,
    pub method: CertificateMethod,
}

impl EmbeddingCertificate {
    pub fn embeds(&self) -> bool {
        self.verdict == EmbedVerdict::Embeds
    }
}

fn combined_sizes(target: &WeightSequence, a: &Rational) -> Vec<Rational> {
    let mut sizes = target.weights().to_vec();
    sizes.push(a.clone());
    sizes
}

/// Evaluates the capacity inequalities for k = 1, …, k_max; returns the
/// per-k outcomes and the first violated index with its two sides.
fn check_range(
    sizes: &[Rational],
    head: &Rational,
    k_max: u64,
) -> (Vec<bool>, Option<(u64, Rational, Rational)>) {
    let table = union_capacity_table(sizes, k_max);
    let mut checked = Vec::with_capacity(k_max as usize);
    let mut witness = None;
    for k in 1..=k_max {
        let ball = ball_capacity(head, k);
        let pass = table[k as usize] <= ball;
        checked.push(pass);
        if !pass && witness.is_none() {
            witness = Some((k, table[k as usize].clone(), ball));
        }
    }
    (checked, witness)
}

/// Decides whether B(a) embeds into the domain with decomposition
/// `target`, with a certificate listing the verified inequalities.
///
/// Σ sizes² < head² gives a tail threshold K: indices beyond K pass by
/// the Cauchy–Schwarz bound, so checking k ≤ K decides. At exact
/// filling (Σ sizes² = head²) no tail bound exists and the verdict
/// comes from Cremona reduction, with a witness scan when obstructed.
/// Σ sizes² > head² is a volume obstruction reported as an error.
pub fn embed_ball_check(
    target: &WeightSequence,
    a: &Rational,
) -> Result<EmbeddingCertificate, EchError> {
    assert!(a.is_positive(), "ball size must be positive");
    let head = target.head().clone();
    let head_sq = &head * &head;
    let sum_sq = target.sum_of_squares() + a * a;
    if sum_sq > head_sq {
        return Err(EchError::TailBoundFails {
            sum_sq,
            head_sq,
        });
    }
    let sizes = combined_sizes(target, a);
    if sum_sq == head_sq {
        return Ok(exact_filling_certificate(target, a, &sizes, &head));
    }
    let threshold = tail_threshold(&head, &sum_sq);
    let (checked, witness) = check_range(&sizes, &head, threshold);
    let verdict = match witness {
        None => EmbedVerdict::Embeds,
        Some((k, union_value, ball_value)) => EmbedVerdict::ObstructedAtK {
            k,
            union_value,
            ball_value,
        },
    };
    Ok(EmbeddingCertificate {
        target: target.clone(),
        ball: a.clone(),
        explicit_k_max: threshold,
        tail_bound_k: threshold,
        checked,
        verdict,
        method: CertificateMethod::CapacityTail,
    })
}

fn exact_filling_certificate(
    target: &WeightSequence,
    a: &Rational,
    sizes: &[Rational],
    head: &Rational,
) -> EmbeddingCertificate {
    const CORROBORATION_K: u64 = 64;
    if cremona_embeds(head, sizes) {
        let (checked, witness) = check_range(sizes, head, CORROBORATION_K);
        assert!(
            witness.is_none(),
            "Cremona reduction and capacity inequalities disagree"
        );
        return EmbeddingCertificate {
            target: target.clone(),
            ball: a.clone(),
            explicit_k_max: CORROBORATION_K,
            tail_bound_k: 0,
            checked,
            verdict: EmbedVerdict::Embeds,
            method: CertificateMethod::ExactFillingReduction,
        };
    }
    // Obstructed: some capacity inequality fails at a finite index; scan
    // in growing windows until the witness appears.
    let mut k_max = CORROBORATION_K;
    loop {
        let (checked, witness) = check_range(sizes, head, k_max);
        if let Some((k, union_value, ball_value)) = witness {
            return EmbeddingCertificate {
                target: target.clone(),
                ball: a.clone(),
                explicit_k_max: k_max,
                tail_bound_k: 0,
                checked,
                verdict: EmbedVerdict::ObstructedAtK {
                    k,
                    union_value,
                    ball_value,
                },
            method: CertificateMethod::ExactFillingReduction,
            };
        }
        assert!(k_max < SEARCH_BUDGET, "no obstruction witness within budget");
        k_max *= 2;
    }
}

/// The Gromov width of the domain with ball decomposition `target`: the
/// largest a for which embed_ball_check(target, a) embeds.
///
/// The width is the minimum over k ≥ 1 and d₀ ≥ 1 with tri(d₀) ≤ k of
/// (ball_capacity(b,k) − union_capacity(w, k − tri(d₀))) / d₀: each such
/// pair bounds a from above, and the bounds for k up to the tail
/// threshold of the candidate are exhaustive. The exact-filling
/// candidate √(b² − Σw²) short-circuits when rational and realizable.
pub fn gromov_width(target: &WeightSequence) -> Rational {
    let head = target.head().clone();
    let head_sq = &head * &head;
    let weights_sq = target.sum_of_squares();
    let gap = &head_sq - &weights_sq;
    assert!(gap.is_positive(), "width needs head² > Σ weights²");
    if let Some(fill) = sqrt_exact(&gap) {
        if cremona_embeds(&head, &combined_sizes(target, &fill)) {
            return fill;
        }
    }
    let mut k_max: u64 = 64;
    loop {
        let table = union_capacity_table(target.weights(), k_max);
        let mut best: Option<Rational> = None;
        for k in 1..=k_max {
            let ball = ball_capacity(&head, k);
            // The index-0 inequalities (no ball added) must already hold,
            // or the decomposition itself is invalid.
            assert!(
                table[k as usize] <= ball,
                "weight sequence exceeds its own head ball at k={k}"
            );
            for d0 in 1..=max_index(k) {
                let cand = (&ball - &table[(k - tri(d0)) as usize]) / int(d0 as i64);
                if best.as_ref().is_none_or(|b| &cand < b) {
                    best = Some(cand);
                }
            }
        }
        let candidate = best.expect("k=1, d0=1 always contributes");
        assert!(candidate.is_positive(), "degenerate width candidate");
        let total_sq = &weights_sq + &candidate * &candidate;
        if total_sq < head_sq {
            let threshold = tail_threshold(&head, &total_sq);
            if threshold <= k_max {
                return candidate;
            }
            k_max = threshold;
        } else if total_sq == head_sq
            && cremona_embeds(&head, &combined_sizes(target, &candidate))
        {
            return candidate;
        } else {
            // Volume still exceeded: constraints beyond k_max must cut
            // the candidate further.
            k_max *= 2;
        }
        assert!(k_max < SEARCH_BUDGET, "width search exceeded budget");
    }
}

/// The k-th capacity of the generalized convex toric domain with ball
/// decomposition W: min over l ≥ k of
/// ball_capacity(b, l) − union_capacity(w, l − k), clamped at 0.
pub fn gen_toric_capacity(weights: &WeightSequence, k: u64) -> Rational {
    gen_toric_capacity_detailed(weights, k).0
}

/// As gen_toric_capacity, plus a flag reporting whether any intermediate
/// value of the minimization was negative (pathological inputs only).
pub fn gen_toric_capacity_detailed(weights: &WeightSequence, k: u64) -> (Rational, bool) {
    let head = weights.head().clone();
    let head_sq = &head * &head;
    let sum_sq = weights.sum_of_squares();
    let gap = &head_sq - &sum_sq;
    assert!(gap.is_positive(), "capacity search needs head² > Σ weights²");
    // The lower bound head·(√(2l+9/4) − 3/2) − √(2(l−k)·Σw²) on the l-th
    // term is nondecreasing from l_star on; past l_star, once its dyadic
    // under-approximation exceeds the incumbent no later l can win.
    let l_star_exact = (int(k as i64) * &head_sq + ratio(9, 8) * &sum_sq) / &gap;
    let l_star = u64::try_from(l_star_exact.ceil().to_integer()).expect("l_star fits u64").max(k);
    let mut table = union_capacity_table(weights.weights(), 64.min(l_star + 64));
    let mut incumbent: Option<Rational> = None;
    let mut saw_negative = false;
    let mut l = k;
    loop {
        let t = (l - k) as usize;
        if t >= table.len() {
            let grown = (table.len() as u64 * 2).max(l - k + 1);
            table = union_capacity_table(weights.weights(), grown);
        }
        let value = ball_capacity(&head, l) - &table[t];
        saw_negative |= value.is_negative();
        if incumbent.as_ref().is_none_or(|inc| &value < inc) {
            incumbent = Some(value);
        }
        let inc = incumbent.as_ref().expect("set above");
        if !inc.is_positive() {
            // Clamped result is 0 already; nothing can improve it.
            return (Rational::zero(), saw_negative);
        }
        if l >= l_star {
            let under = &head * (floor_sqrt(&(int(2 * l as i64) + ratio(9, 4)), SQRT_BITS) - ratio(3, 2))
                - ceil_sqrt(&(int(2 * (l - k) as i64) * &sum_sq), SQRT_BITS);
            if &under > inc {
                return (incumbent.expect("set above"), saw_negative);
            }
        }
        l += 1;
        assert!(l < SEARCH_BUDGET, "capacity search exceeded budget");
    }
}
