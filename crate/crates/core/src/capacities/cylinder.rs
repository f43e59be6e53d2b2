//! Capacity of the tilted cylinder T² × S(r, α), where S(r, α) is the
//! planar strip of points p with |p·α| ≤ r·|α|.
//!
//! For a prime integer normal α = (m, n) the capacity is 2r·√(m²+n²); for
//! a strip whose normal has irrational slope it is infinite. The value
//! carries a square root, so it is returned as an exact squared rational
//! whenever the root itself is irrational.

use super::CapacityError;
use crate::geometry::{make_star_polygon, PointQ, StarPolygon};
use crate::rational::{int, sqrt_exact, Rational};
use num_integer::Integer;
use num_traits::Signed;

/// The normal direction of the strip fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CylinderDirection {
    /// An integer normal (m, n); must be prime (coprime entries, or one
    /// entry zero and the other ±1).
    Integer(i64, i64),
    /// A normal of irrational slope, named but never represented by
    /// coordinates: rationality cannot be decided from floats.
    Irrational,
}

/// An exact capacity value that may be the square root of a rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CapacityScalar {
    /// The value itself is rational.
    Exact(Rational),
    /// The value is the square root of this rational (which is not a
    /// perfect square).
    SquareRoot(Rational),
    /// No finite value: the domain contains arbitrarily large balls.
    Infinite,
}

impl CapacityScalar {
    /// The square of the value, when finite.
    pub fn squared(&self) -> Option<Rational> {
        match self {
            CapacityScalar::Exact(v) => Some(v * v),
            CapacityScalar::SquareRoot(s) => Some(s.clone()),
            CapacityScalar::Infinite => None,
        }
    }
}

fn is_prime_direction(m: i64, n: i64) -> bool {
    if m == 0 || n == 0 {
        return m.abs() + n.abs() == 1;
    }
    m.gcd(&n) == 1
}

/// The common value of every normalized capacity on the tilted cylinder
/// with half-width r and strip normal `direction`.
///
/// For a prime normal (m, n) the squared value is 4r²(m²+n²), returned
/// exactly; an irrational normal makes the cylinder contain translates of
/// arbitrarily large anchored triangles, so the capacity is infinite.
pub fn tilted_cylinder_capacity(
    r: &Rational,
    direction: CylinderDirection,
) -> Result<CapacityScalar, CapacityError> {
    assert!(r.is_positive(), "strip half-width must be positive");
    match direction {
        CylinderDirection::Irrational => Ok(CapacityScalar::Infinite),
        CylinderDirection::Integer(m, n) => {
            if !is_prime_direction(m, n) {
                return Err(CapacityError::NotPrime);
            }
            let norm_sq = int(m * m + n * n);
            let squared = int(4) * r * r * &norm_sq;
            match sqrt_exact(&squared) {
                Some(root) => Ok(CapacityScalar::Exact(root)),
                None => Ok(CapacityScalar::SquareRoot(squared)),
            }
        }
    }
}

/// The rational model of the quadrilateral inscribed in the strip of prime
/// normal α = (m, n) that witnesses the capacity's lower bound.
///
/// The true witness P(a) ⊂ S(1, α) is √(m²+n²) times this polygon, so
/// sys(∂P(a)) = √(m²+n²)·sys of this model. Two opposite edges lie on the
/// strip boundary (support 1 in direction α) and the other two close it
/// off at parameter distance a; for a large enough the systole of the
/// model is exactly 1, carried by the boundary-edge orbit classes.
pub fn strip_witness_polygon(m: i64, n: i64, a: &Rational) -> StarPolygon {
    assert!(is_prime_direction(m, n), "strip normal must be prime");
    assert!(a.is_positive(), "closing parameter must be positive");
    let (m, n) = if n > 0 || (n == 0 && m > 0) { (m, n) } else { (-m, -n) };
    let one = int(1);
    let (v1, v2) = if n == 0 {
        // Vertical strip |x| ≤ 1: an axis-aligned rectangle suffices.
        (PointQ::new(one, a.clone()), PointQ::new(-int(1), a.clone()))
    } else {
        let mq = int(m);
        let nq = int(n);
        let top = (&one - &mq * a) / &nq;
        let bottom = (&one + &mq * a) / nq;
        (PointQ::new(a.clone(), top), PointQ::new(-a, bottom))
    };
    let vertices = [v1.clone(), v2.clone(), v1.neg(), v2.neg()];
    make_star_polygon(&vertices).expect("strip witness is a symmetric parallelogram")
}
