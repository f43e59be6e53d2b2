//! The dynamical zeta function of the product domain.
//!
//! For T² × A every closed orbit is a degenerate shear, and the Morse-Bott
//! count cancels exactly: ζ(T² × A) = 1. The formal-product builder below
//! exists to exhibit the contrast with nondegenerate data, where a lowest
//! action term survives.

use crate::geometry::StarPolygon;
use crate::rational::{format_rational, Rational};
use std::fmt;

/// Nondegenerate orbit types and their zeta factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum OrbitKind {
    /// Factor (1 − t^a)⁻¹ = 1 + t^a + t^{2a} + …
    Elliptic,
    /// Factor (1 − t^a).
    PositiveHyperbolic,
    /// Factor (1 + t^a).
    NegativeHyperbolic,
}

/// An orbit action: an exact rational, or a named infinitesimally
/// perturbed value such as "1-eps" that compares only with itself.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ActionLabel {
    Rational(Rational),
    Symbolic(String),
}

impl fmt::Display for ActionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionLabel::Rational(r) => write!(f, "{}", format_rational(r)),
            ActionLabel::Symbolic(s) => write!(f, "{s}"),
        }
    }
}

/// One factor of the formal product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaFactor {
    pub action: ActionLabel,
    pub kind: OrbitKind,
}

/// A zeta function as a formal product over simple orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaExpression {
    pub factors: Vec<ZetaFactor>,
    pub is_trivially_one: bool,
}

impl ZetaExpression {
    pub fn one() -> ZetaExpression {
        ZetaExpression { factors: Vec::new(), is_trivially_one: true }
    }

    /// The lowest-order term t^a beyond the constant 1, with its
    /// coefficient: +1 per elliptic or negative hyperbolic factor of
    /// minimal action, −1 per positive hyperbolic one.
    ///
    /// Returns None when the expression is 1, when symbolic and rational
    /// actions mix (incomparable), or when the minimal-order coefficients
    /// cancel (the lowest surviving order is then not determined by the
    /// factor list alone).
    pub fn lowest_term(&self) -> Option<(ActionLabel, i64)> {
        if self.factors.is_empty() {
            return None;
        }
        let all_rational = self.factors.iter().all(|f| matches!(f.action, ActionLabel::Rational(_)));
        let min_action = if all_rational {
            self.factors.iter().map(|f| f.action.clone()).min().unwrap()
        } else {
            let first = self.factors[0].action.clone();
            if self.factors.iter().any(|f| f.action != first) {
                return None;
            }
            first
        };
        let coefficient: i64 = self
            .factors
            .iter()
            .filter(|f| f.action == min_action)
            .map(|f| match f.kind {
                OrbitKind::Elliptic | OrbitKind::NegativeHyperbolic => 1,
                OrbitKind::PositiveHyperbolic => -1,
            })
            .sum();
        if coefficient == 0 {
            return None;
        }
        Some((min_action, coefficient))
    }
}

impl fmt::Display for ZetaExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match factor.kind {
                OrbitKind::Elliptic => write!(f, "(1 - t^{{{}}})^-1", factor.action)?,
                OrbitKind::PositiveHyperbolic => write!(f, "(1 - t^{{{}}})", factor.action)?,
                OrbitKind::NegativeHyperbolic => write!(f, "(1 + t^{{{}}})", factor.action)?,
            }
        }
        Ok(())
    }
}

/// The zeta function of T² × A: identically 1, since all product-domain
/// orbits come in Morse-Bott families whose contributions cancel.
pub fn zeta(_p: &StarPolygon) -> ZetaExpression {
    ZetaExpression::one()
}

/// Builds the formal product for a finite list of nondegenerate orbits.
pub fn zeta_from_orbits(orbits: &[(ActionLabel, OrbitKind)]) -> ZetaExpression {
    let factors: Vec<ZetaFactor> = orbits
        .iter()
        .map(|(action, kind)| ZetaFactor { action: action.clone(), kind: *kind })
        .collect();
    let is_trivially_one = factors.is_empty();
    ZetaExpression { factors, is_trivially_one }
}
