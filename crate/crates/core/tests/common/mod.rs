//! Shared random generators for the property and acceptance suites.
//! Everything is seeded, so failures reproduce.

// Each test binary compiles this module separately and uses its own subset.
#![allow(dead_code)]

use codisc::geometry::{
    hull_points, make_star_polygon, point, ConvexPolygon, PointQ, StarPolygon,
};
use codisc::rational::ratio;
use rand::Rng;

/// The eight primitive compass directions, counterclockwise from (1, 0).
pub const FAN_DIRECTIONS: [(i64, i64); 8] =
    [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)];

/// A random star polygon: positive rational radii on the eight compass
/// rays. Consecutive rays are less than a half-turn apart, so any radii
/// give a polygon star-shaped about the origin; collinear triples are
/// merged or rejected by the constructor, hence the retry loop.
pub fn radial_fan_star<R: Rng>(rng: &mut R) -> StarPolygon {
    loop {
        let vertices: Vec<PointQ> = FAN_DIRECTIONS
            .iter()
            .map(|&(x, y)| {
                let r = ratio(rng.gen_range(1..=12), rng.gen_range(1..=4));
                let d = point(x, y);
                PointQ::new(&r * &d.x, &r * &d.y)
            })
            .collect();
        if let Ok(p) = make_star_polygon(&vertices) {
            return p;
        }
    }
}

/// A random convex lattice polygon symmetric about both coordinate axes:
/// the hull of sampled points closed under both sign flips.
pub fn axis_symmetric_convex_lattice<R: Rng>(rng: &mut R, bound: i64) -> ConvexPolygon {
    loop {
        let count = rng.gen_range(1..=4);
        let mut pts: Vec<PointQ> = Vec::with_capacity(4 * count);
        for _ in 0..count {
            let x = rng.gen_range(1..=bound);
            let y = rng.gen_range(1..=bound);
            for (sx, sy) in [(1, -1), (1, 1), (-1, 1), (-1, -1)] {
                pts.push(point(sx * x, sy * y));
            }
        }
        let hull = hull_points(&pts);
        if hull.len() < 4 {
            continue;
        }
        if let Ok(star) = make_star_polygon(&hull) {
            if let Ok(convex) = ConvexPolygon::from_star(star) {
                return convex;
            }
        }
    }
}

/// A random centrally symmetric convex lattice polygon with vertices in
/// [-bound, bound]^2, built as the hull of sampled points and their
/// negatives.
pub fn symmetric_convex_lattice<R: Rng>(rng: &mut R, bound: i64) -> ConvexPolygon {
    loop {
        let count = rng.gen_range(2..=6);
        let mut pts: Vec<PointQ> = Vec::with_capacity(2 * count);
        for _ in 0..count {
            let x = rng.gen_range(-bound..=bound);
            let y = rng.gen_range(-bound..=bound);
            if x == 0 && y == 0 {
                continue;
            }
            pts.push(point(x, y));
            pts.push(point(-x, -y));
        }
        let hull = hull_points(&pts);
        if hull.len() < 4 {
            continue;
        }
        if let Ok(star) = make_star_polygon(&hull) {
            if let Ok(convex) = ConvexPolygon::from_star(star) {
                return convex;
            }
        }
    }
}
