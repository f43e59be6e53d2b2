//! Polygon families with transcendental vertex data.
//!
//! The star-shaped family P_v (vertices e^{v_j} spread over half-turn
//! angles, doubled by central symmetry) and its positive-quadrant sibling
//! Q_v (quarter-turn angles plus the origin corner) realize the sup
//! distance |v - w|_inf as an inclusion distance. Their vertices involve
//! e^{v_j}, sin and cos, so they are evaluated in high-precision floating
//! point and rounded once into exact rational coordinates; everything
//! downstream stays exact in those coordinates.

use super::DistanceError;
use crate::geometry::{make_star_polygon, ConvexRegion, PointQ, StarPolygon};
use crate::rational::Rational;
use astro_float::{BigFloat, Consts, RoundingMode, Sign, Word};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

/// Working precision floor: the documented accuracy contract for the
/// family constructors assumes at least this many mantissa bits.
pub const MIN_PRECISION_BITS: usize = 80;

/// Default working precision of the transcendental evaluations.
pub const DEFAULT_PRECISION_BITS: usize = 128;

/// The exact rational value of a finite high-precision float.
fn to_rational(f: &BigFloat) -> Option<Rational> {
    if f.is_inf() || f.is_nan() {
        return None;
    }
    let (words, n, sign, exponent, _) = f.as_raw_parts()?;
    if n == 0 {
        return Some(Rational::zero());
    }
    let word_bits = std::mem::size_of::<Word>() * 8;
    let mut mantissa = BigUint::zero();
    for w in words.iter().rev() {
        mantissa = (mantissa << word_bits) | BigUint::from(*w);
    }
    let mut numer = BigInt::from(mantissa);
    if matches!(sign, Sign::Neg) {
        numer = -numer;
    }
    // The float's value is mantissa / 2^(word bits) x 2^exponent.
    let shift = exponent as i64 - (words.len() * word_bits) as i64;
    Some(if shift >= 0 {
        Rational::from_integer(numer << shift as usize)
    } else {
        Rational::new(numer, BigInt::from(1) << (-shift) as usize)
    })
}

/// Evaluation context: a constants cache plus the chosen precision.
struct Evaluator {
    consts: Consts,
    p: usize,
    rm: RoundingMode,
}

impl Evaluator {
    fn new(precision_bits: usize) -> Evaluator {
        assert!(
            precision_bits >= MIN_PRECISION_BITS,
            "precision below the documented {MIN_PRECISION_BITS}-bit floor"
        );
        let consts = Consts::new().expect("constants cache allocation");
        Evaluator { consts, p: precision_bits, rm: RoundingMode::ToEven }
    }

    /// The rational point e^row x (cos of angle, sin of angle), where the
    /// angle is the half-turn fraction `num`/`den`. The quarter-turn and
    /// zero angles land exactly on the axes: edges meeting the origin
    /// must lie exactly on an axis or rounding noise makes regions with
    /// different rows incomparable.
    fn radial_point(&mut self, row: f64, num: u64, den: u64) -> Option<PointQ> {
        if !row.is_finite() {
            return None;
        }
        if num == 0 || 2 * num == den {
            let radius = to_rational(&BigFloat::from_f64(row, self.p).exp(
                self.p,
                self.rm,
                &mut self.consts,
            ))?;
            return Some(if num == 0 {
                PointQ::new(radius, Rational::zero())
            } else {
                PointQ::new(Rational::zero(), radius)
            });
        }
        let pi = self.consts.pi(self.p, self.rm);
        let frac = BigFloat::from_f64(num as f64, self.p)
            .div(&BigFloat::from_f64(den as f64, self.p), self.p, self.rm);
        let theta = pi.mul(&frac, self.p, self.rm);
        let radius = BigFloat::from_f64(row, self.p).exp(self.p, self.rm, &mut self.consts);
        let x = radius.mul(&theta.cos(self.p, self.rm, &mut self.consts), self.p, self.rm);
        let y = radius.mul(&theta.sin(self.p, self.rm, &mut self.consts), self.p, self.rm);
        Some(PointQ::new(to_rational(&x)?, to_rational(&y)?))
    }
}

/// A star polygon whose vertices were rounded from transcendental data;
/// distances computed through it are correct to the working precision,
/// not exact.
#[derive(Debug, Clone)]
pub struct PvPolygon {
    star: StarPolygon,
    precision_bits: usize,
}

impl PvPolygon {
    pub fn as_star(&self) -> &StarPolygon {
        &self.star
    }

    pub fn precision_bits(&self) -> usize {
        self.precision_bits
    }
}

/// The centrally symmetric star polygon with 2N vertices
/// e^{v_j}·(cos πj'/N, sin πj'/N), j' = j - 1, and their negatives.
///
/// Any finite v yields a star-shaped polygon: consecutive vertices sit on
/// rays less than a half turn apart, so the boundary winds once around
/// the origin. Non-finite entries, or rounding collapse at extreme
/// magnitudes, are rejected.
pub fn pv_polygon(v: &[f64], precision_bits: usize) -> Result<PvPolygon, DistanceError> {
    assert!(v.len() >= 2, "the family needs at least two rays");
    let n = v.len() as u64;
    let mut eval = Evaluator::new(precision_bits);
    let mut vertices = Vec::with_capacity(2 * v.len());
    for (j, &row) in v.iter().enumerate() {
        let p = eval
            .radial_point(row, j as u64, n)
            .ok_or(DistanceError::NotStarShaped)?;
        vertices.push(p);
    }
    let negatives: Vec<PointQ> = vertices.iter().map(|p| p.neg()).collect();
    vertices.extend(negatives);
    let star = make_star_polygon(&vertices).map_err(|_| DistanceError::NotStarShaped)?;
    Ok(PvPolygon { star, precision_bits })
}

/// The positive-quadrant moment region with corner at the origin and
/// profile vertices e^{v_j}·(cos, sin) at quarter-turn fractions
/// (j-1)/(N-1).
///
/// The profile must be in convex position: the region type is convex, and
/// a dropped profile vertex would silently change the shape, so such
/// inputs are rejected instead.
pub fn qv_region(v: &[f64], precision_bits: usize) -> Result<ConvexRegion, DistanceError> {
    assert!(v.len() >= 2, "the family needs at least two rays");
    let n = v.len() as u64;
    let mut eval = Evaluator::new(precision_bits);
    let mut points = vec![PointQ::origin()];
    for (j, &row) in v.iter().enumerate() {
        let p = eval
            .radial_point(row, j as u64, 2 * (n - 1))
            .ok_or(DistanceError::NotStarShaped)?;
        points.push(p);
    }
    let region = ConvexRegion::from_points(&points).map_err(|_| DistanceError::NotStarShaped)?;
    if region.vertices().len() != points.len() {
        return Err(DistanceError::NotConvexPosition);
    }
    Ok(region)
}
