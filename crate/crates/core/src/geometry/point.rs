//! Exact points, vectors, and primitive integer directions.

use crate::rational::{format_rational, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::fmt;

/// A point of the fiber plane with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointQ {
    pub x: Rational,
    pub y: Rational,
}

/// Rational displacement vectors share the representation of points.
pub type VecQ = PointQ;

/// Shorthand for an integer-coordinate point.
pub fn point(x: i64, y: i64) -> PointQ {
    PointQ::new(crate::rational::int(x), crate::rational::int(y))
}

/// Shorthand for a rational vector.
pub fn vec2(x: Rational, y: Rational) -> VecQ {
    PointQ::new(x, y)
}

impl PointQ {
    pub fn new(x: Rational, y: Rational) -> Self {
        PointQ { x, y }
    }

    pub fn origin() -> Self {
        PointQ::new(Rational::zero(), Rational::zero())
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn add(&self, other: &PointQ) -> PointQ {
        PointQ::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn sub(&self, other: &PointQ) -> PointQ {
        PointQ::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn neg(&self) -> PointQ {
        PointQ::new(-&self.x, -&self.y)
    }

    pub fn scale(&self, c: &Rational) -> PointQ {
        PointQ::new(&self.x * c, &self.y * c)
    }

    pub fn dot(&self, other: &PointQ) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the cross product `self × other`.
    pub fn cross(&self, other: &PointQ) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    /// Outward normal of an edge traversed counterclockwise: rotate the
    /// edge vector by −90°.
    pub fn outward_normal(&self) -> VecQ {
        PointQ::new(self.y.clone(), -&self.x)
    }
}

impl fmt::Display for PointQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

/// Orientation of the triple (a, b, c): positive for a left turn.
pub(crate) fn orient(a: &PointQ, b: &PointQ, c: &PointQ) -> Rational {
    b.sub(a).cross(&c.sub(a))
}

/// A primitive integer direction (m, n) with gcd(|m|, |n|) = 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Direction {
    m: BigInt,
    n: BigInt,
}

impl Direction {
    /// Reduces (m, n) to its primitive representative. Returns `None` for
    /// the zero vector.
    pub fn primitive(m: BigInt, n: BigInt) -> Option<Direction> {
        if m.is_zero() && n.is_zero() {
            return None;
        }
        let g = m.gcd(&n);
        Some(Direction { m: m / &g, n: n / &g })
    }

    /// Primitive direction of a nonzero rational vector.
    pub fn from_vec(v: &VecQ) -> Option<Direction> {
        if v.is_origin() {
            return None;
        }
        // Clear denominators, then reduce.
        let scale = v.x.denom().lcm(v.y.denom());
        let m = v.x.numer() * (&scale / v.x.denom());
        let n = v.y.numer() * (&scale / v.y.denom());
        Direction::primitive(m, n)
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn as_vec(&self) -> VecQ {
        PointQ::new(
            Rational::from_integer(self.m.clone()),
            Rational::from_integer(self.n.clone()),
        )
    }

    pub fn neg(&self) -> Direction {
        Direction { m: -&self.m, n: -&self.n }
    }

    pub fn dot_point(&self, p: &PointQ) -> Rational {
        &p.x * Rational::from_integer(self.m.clone())
            + &p.y * Rational::from_integer(self.n.clone())
    }

    /// True when both components are ≥ 0 (a monotone profile normal).
    pub fn is_nonnegative(&self) -> bool {
        !self.m.is_negative() && !self.n.is_negative()
    }
}

impl From<(i64, i64)> for Direction {
    fn from((m, n): (i64, i64)) -> Self {
        Direction::primitive(BigInt::from(m), BigInt::from(n))
            .expect("direction components must not both be zero")
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}
