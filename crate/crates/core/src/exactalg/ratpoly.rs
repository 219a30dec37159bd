use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::{write_terms, IntPoly};

/// Univariate polynomial with exact rational coefficients, ascending degree,
/// canonical like [`IntPoly`]. `BigRational` keeps every coefficient reduced
/// with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `poly / divisor`, coefficientwise.
    ///
    /// Panics if `divisor` is zero.
    pub fn from_int_poly_over(poly: &IntPoly, divisor: &BigInt) -> Self {
        assert!(!divisor.is_zero(), "division of a polynomial by zero");
        Self::new(
            poly.coeffs()
                .iter()
                .map(|c| BigRational::new(c.clone(), divisor.clone()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, alpha: usize) -> BigRational {
        self.coeffs
            .get(alpha)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, v: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * v + c)
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

/// Same layout as [`IntPoly`]'s printer; fractions print as `1/2 x`.
impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(deg, c)| (c.is_negative(), c.abs().to_string(), deg));
        write_terms(f, terms)
    }
}
