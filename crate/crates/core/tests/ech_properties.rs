//! Randomized invariants of the capacity arithmetic: the ball oracle,
//! union composition, lattice counting, weight-volume accounting, and
//! the Cauchy-Schwarz tail bound.

mod common;

use codisc::ech::{
    ball_capacity, flat_capacity, gen_toric_capacity, lattice_count, union_capacity,
    weight_decomposition, CapacitySequence, LatticePolygon, WeightSequence,
    wulff_lower_bound,
};
use codisc::geometry::{point, ConvexRegion, PointQ};
use codisc::rational::{int, ratio, Rational};
use codisc::reeb::sys;
use common::symmetric_convex_lattice;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The (k+1)-th smallest element of the multiset {a(m+n) : m, n >= 0},
/// the closed-form the capacity sequence of a ball must reproduce.
fn ball_oracle(a: &Rational, k: u64) -> Rational {
    let mut actions: Vec<Rational> = Vec::new();
    for m in 0..=12i64 {
        for n in 0..=12i64 {
            actions.push(a * int(m + n));
        }
    }
    actions.sort();
    actions[k as usize].clone()
}

#[test]
fn ball_capacities_match_the_brute_force_oracle() {
    for a in [int(1), ratio(3, 2), int(2), int(3)] {
        for k in 0..=50 {
            assert_eq!(ball_capacity(&a, k), ball_oracle(&a, k), "a = {a}, k = {k}");
        }
    }
}

#[test]
fn a_union_of_one_ball_is_that_ball() {
    for a in [int(1), ratio(3, 2), ratio(7, 5)] {
        for k in 0..=30 {
            assert_eq!(union_capacity(&[a.clone()], k), ball_capacity(&a, k));
        }
    }
}

/// Unpruned maximum of sum of per-ball capacities over all index splits.
fn union_oracle(weights: &[Rational], k: u64) -> Rational {
    if weights.len() == 1 {
        return ball_capacity(&weights[0], k);
    }
    let (first, rest) = weights.split_first().unwrap();
    (0..=k)
        .map(|i| ball_capacity(first, i) + union_oracle(rest, k - i))
        .max()
        .unwrap()
}

#[test]
fn union_capacities_match_the_unpruned_split_maximum() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..6 {
        let count = rng.gen_range(2..=4);
        let weights: Vec<Rational> =
            (0..count).map(|_| ratio(rng.gen_range(1..=5), rng.gen_range(1..=3))).collect();
        for k in 0..=20 {
            assert_eq!(
                union_capacity(&weights, k),
                union_oracle(&weights, k),
                "weights {weights:?}, k = {k}"
            );
        }
    }
}

#[test]
fn capacity_sequences_are_nondecreasing_and_start_at_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let six_balls = WeightSequence::new(int(3), vec![int(1); 6]);
    assert_eq!(gen_toric_capacity(&six_balls, 0), int(0));
    let sequences = [
        CapacitySequence::ball(&ratio(3, 2), 20),
        CapacitySequence::union(&[int(1), ratio(3, 2), int(2)], 20),
        CapacitySequence::gen_toric(&six_balls, 20),
        CapacitySequence::flat(&symmetric_convex_lattice(&mut rng, 5), 20),
    ];
    for seq in &sequences {
        for k in 1..=seq.k_max() {
            assert!(seq.value(k) >= seq.value(k - 1), "{:?} decreased at {k}", seq.source());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn the_first_flat_capacity_is_twice_the_systole(seed in 0u64..10_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = symmetric_convex_lattice(&mut rng, 6);
        prop_assert_eq!(flat_capacity(&p, 1), ratio(2, 1) * sys(p.as_star()));
    }

    #[test]
    fn flat_capacities_obey_the_wulff_bound(seed in 0u64..10_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = symmetric_convex_lattice(&mut rng, 5);
        for k in 1..=10 {
            let c = flat_capacity(&p, k);
            prop_assert!(&c * &c >= wulff_lower_bound(&p, k));
        }
    }

    #[test]
    fn union_capacities_obey_cauchy_schwarz(seed in 0u64..10_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let count = rng.gen_range(1..=5);
        let weights: Vec<Rational> =
            (0..count).map(|_| ratio(rng.gen_range(1..=4), rng.gen_range(1..=3))).collect();
        let sum_sq: Rational = weights.iter().map(|w| w * w).sum();
        for k in 0..=25u64 {
            let c = union_capacity(&weights, k);
            prop_assert!(&c * &c <= int(2) * int(k as i64) * &sum_sq);
        }
    }
}

#[test]
fn the_paper_weights_satisfy_the_tail_inequality() {
    // Combined sizes (1^6, 3/2) have sum of squares 33/4, so every
    // capacity is bounded by sqrt(33k/2).
    let mut sizes = vec![int(1); 6];
    sizes.push(ratio(3, 2));
    for k in 0..=60u64 {
        let c = union_capacity(&sizes, k);
        assert!(&c * &c <= ratio(33, 2) * int(k as i64));
    }
}

/// Direct lattice-point enumeration over the bounding box, the slow side
/// of the Pick identity.
fn enumerate_lattice_points(polygon: &LatticePolygon) -> u64 {
    let verts = polygon.vertices();
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
    for &(x, y) in verts {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let inside = |px: i64, py: i64| -> bool {
        if verts.len() == 1 {
            return (px, py) == verts[0];
        }
        if verts.len() == 2 {
            let (ax, ay) = verts[0];
            let (bx, by) = verts[1];
            let cross = (bx - ax) * (py - ay) - (by - ay) * (px - ax);
            return cross == 0
                && px >= ax.min(bx)
                && px <= ax.max(bx)
                && py >= ay.min(by)
                && py <= ay.max(by);
        }
        for i in 0..verts.len() {
            let (ax, ay) = verts[i];
            let (bx, by) = verts[(i + 1) % verts.len()];
            if (bx - ax) * (py - ay) - (by - ay) * (px - ax) < 0 {
                return false;
            }
        }
        true
    };
    let mut count = 0;
    for px in min_x..=max_x {
        for py in min_y..=max_y {
            if inside(px, py) {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn pick_counting_matches_direct_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..60 {
        let count = rng.gen_range(1..=7);
        let pts: Vec<(i64, i64)> = (0..count)
            .map(|_| (rng.gen_range(-10..=10), rng.gen_range(-10..=10)))
            .collect();
        let polygon = LatticePolygon::new(&pts);
        assert_eq!(
            lattice_count(&polygon),
            enumerate_lattice_points(&polygon),
            "vertices {:?}",
            polygon.vertices()
        );
    }
}

/// Random convex moment region anchored at the origin corner.
fn random_anchored_region<R: Rng>(rng: &mut R) -> ConvexRegion {
    loop {
        let mut pts: Vec<PointQ> = vec![point(0, 0)];
        pts.push(point(rng.gen_range(1..=6), 0));
        pts.push(point(0, rng.gen_range(1..=6)));
        for _ in 0..rng.gen_range(0..=3) {
            pts.push(point(rng.gen_range(1..=6), rng.gen_range(1..=6)));
        }
        if let Ok(region) = ConvexRegion::from_points(&pts) {
            return region;
        }
    }
}

#[test]
fn weight_decompositions_account_for_the_area() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let mut decomposed = 0;
    while decomposed < 40 {
        let region = random_anchored_region(&mut rng);
        let Ok(weights) = weight_decomposition(&region) else { continue };
        let head_sq = weights.head() * weights.head();
        let tail_sq: Rational = weights.weights().iter().map(|w| w * w).sum();
        assert_eq!(head_sq - tail_sq, int(2) * area_of_region(&region));
        decomposed += 1;
    }
}

fn area_of_region(region: &ConvexRegion) -> Rational {
    area_shoelace(region.vertices())
}

fn area_shoelace(vertices: &[PointQ]) -> Rational {
    let n = vertices.len();
    let mut twice: Rational = int(0);
    for i in 0..n {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % n];
        twice += a.cross(b);
    }
    twice / int(2)
}

#[test]
fn the_six_ball_difference_decomposes_the_anchored_pentagon() {
    // Head 3 with six unit balls removed leaves twice the area of the
    // region, pinning the decomposition arithmetic on the suite's main
    // example.
    let six = WeightSequence::new(int(3), vec![int(1); 6]);
    let head_sq = six.head() * six.head();
    let tail_sq: Rational = six.weights().iter().map(|w| w * w).sum();
    assert_eq!(head_sq - tail_sq, int(3));
}
