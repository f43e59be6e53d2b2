//! Exact rational scalars and small integer helpers shared by every module.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational scalar used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `n / d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"p"`, or decimal forms like `"1.5"` into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let neg = whole.trim_start().starts_with('-');
        let w: BigInt = if whole.is_empty() || whole == "-" {
            BigInt::zero()
        } else {
            whole.parse().ok()?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let f: BigInt = frac.parse().ok()?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let mag = w.abs() * &scale + f;
        let signed = if neg { -mag } else { mag };
        return Some(Rational::new(signed, scale));
    }
    let n: BigInt = s.parse().ok()?;
    Some(Rational::from_integer(n))
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact square root of a rational, if it is a perfect square.
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let sn = r.numer().sqrt();
    let sd = r.denom().sqrt();
    if &(&sn * &sn) == r.numer() && &(&sd * &sd) == r.denom() {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// Largest integer `s` with `s² ≤ n`. Panics if `n < 0`.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative integer");
    n.sqrt()
}

/// Smallest rational upper bound `u` for `√r` of the form `m / 2^k`,
/// accurate to within `2^-k`. Requires `r ≥ 0`.
///
/// Used for sound pruning: `√r ≤ ceil_sqrt(r, k)` always holds.
pub fn ceil_sqrt(r: &Rational, k: u32) -> Rational {
    assert!(!r.is_negative(), "ceil_sqrt of negative rational");
    // √(n/d) = √(n d) / d; scale by 4^k so the integer sqrt carries k
    // extra binary digits.
    let scale = BigInt::one() << (2 * k);
    let prod = r.numer() * r.denom() * &scale;
    let mut root = prod.sqrt();
    if &root * &root < prod {
        root += 1;
    }
    Rational::new(root, r.denom() * (BigInt::one() << k))
}

/// Largest rational lower bound analogue of [`ceil_sqrt`]:
/// `floor_sqrt(r, k) ≤ √r`.
pub fn floor_sqrt(r: &Rational, k: u32) -> Rational {
    assert!(!r.is_negative(), "floor_sqrt of negative rational");
    let scale = BigInt::one() << (2 * k);
    let prod = r.numer() * r.denom() * &scale;
    let root = prod.sqrt();
    Rational::new(root, r.denom() * (BigInt::one() << k))
}

/// `gcd(|a|, |b|)` as a `BigInt`; `gcd(0, 0) = 0`.
pub fn gcd_bigint(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// True if `r` is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Converts a rational to `f64` (for reports only; may round).
pub fn to_f64(r: &Rational) -> f64 {
    // Split into quotient and remainder so huge numerators stay in range.
    let (q, rem) = r.numer().div_rem(r.denom());
    let qf = bigint_to_f64(&q);
    let rf = bigint_to_f64(&rem) / bigint_to_f64(r.denom());
    qf + rf
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    // Lossy conversion through a string is fine: reports never feed back
    // into exact computation.
    n.to_string().parse::<f64>().unwrap_or_else(|_| {
        if n.sign() == Sign::Minus {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_integer_and_decimal() {
        assert_eq!(parse_rational("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("1.5").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), ratio(-1, 4));
        assert_eq!(parse_rational(" 2 / 6 ").unwrap(), ratio(1, 3));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }

    #[test]
    fn formats_reduced() {
        assert_eq!(format_rational(&ratio(2, 6)), "1/3");
        assert_eq!(format_rational(&int(5)), "5");
        assert_eq!(format_rational(&ratio(-3, 2)), "-3/2");
    }

    #[test]
    fn sqrt_exact_detects_squares() {
        assert_eq!(sqrt_exact(&ratio(9, 4)).unwrap(), ratio(3, 2));
        assert_eq!(sqrt_exact(&int(0)).unwrap(), int(0));
        assert!(sqrt_exact(&int(2)).is_none());
        assert!(sqrt_exact(&int(-4)).is_none());
    }

    #[test]
    fn sqrt_bounds_bracket() {
        for (n, d) in [(2i64, 1i64), (5, 3), (594, 1), (1, 7)] {
            let r = ratio(n, d);
            let lo = floor_sqrt(&r, 32);
            let hi = ceil_sqrt(&r, 32);
            assert!(&lo * &lo <= r, "floor bound fails for {n}/{d}");
            assert!(&hi * &hi >= r, "ceil bound fails for {n}/{d}");
            assert!(&hi - &lo <= ratio(1, 1 << 30), "bracket too wide");
        }
    }

    #[test]
    fn f64_conversion_close() {
        assert!((to_f64(&ratio(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
        assert!((to_f64(&ratio(-7, 2)) + 3.5).abs() < 1e-15);
    }
}
