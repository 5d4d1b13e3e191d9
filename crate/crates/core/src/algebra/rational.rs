use std::fmt;

use super::laurent::LaurentPoly;
use super::AlgebraError;

/// A quotient of Laurent polynomials with nonzero denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: LaurentPoly,
    denominator: LaurentPoly,
}

impl RationalFunction {
    pub fn new(numerator: LaurentPoly, denominator: LaurentPoly) -> Result<Self, AlgebraError> {
        if denominator.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        if numerator.field() != denominator.field() {
            return Err(AlgebraError::FieldMismatch);
        }
        Ok(RationalFunction { numerator, denominator })
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.denominator
    }

    /// Lowest terms with t-powers stripped from both sides and a monic
    /// denominator. Returns `(k, r)` with `self = t^k * r`.
    pub fn reduce(&self) -> (i64, RationalFunction) {
        let g = self.numerator.gcd(&self.denominator).expect("denominator is nonzero");
        let num = self.numerator.exact_div(&g).expect("same field").expect("gcd divides");
        let den = self.denominator.exact_div(&g).expect("same field").expect("gcd divides");
        let (kn, num) = num.strip_t_power();
        let (kd, den) = den.strip_t_power();
        let lead_inv = den.leading_coeff().expect("nonzero").inv().expect("nonzero");
        let reduced = RationalFunction { numerator: num.scale(&lead_inv), denominator: den.scale(&lead_inv) };
        (kn - kd, reduced)
    }

    /// True when the denominator is a unit, i.e. a monomial.
    pub fn is_laurent_polynomial(&self) -> bool {
        self.denominator.span() == Some(0)
    }

    /// Cross-multiplication test.
    pub fn equals(&self, other: &RationalFunction) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }

    /// Image under `t ↦ t⁻¹`.
    pub fn reflect(&self) -> RationalFunction {
        RationalFunction { numerator: self.numerator.reflect(), denominator: self.denominator.reflect() }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    #[test]
    fn reduce_normalizes() {
        let q = Field::rationals();
        // t^-2 (t-1)^2 (t^2-4t+1) / (t-1)^2
        let sq = LaurentPoly::from_ints(&q, 0, &[1, -2, 1]);
        let quad = LaurentPoly::from_ints(&q, 0, &[1, -4, 1]);
        let r = RationalFunction::new((&sq * &quad).shift(-2), sq.scale(&q.from_int(3))).unwrap();
        let (k, red) = r.reduce();
        assert_eq!(k, -2);
        assert_eq!(red.numerator(), &quad.scale(&q.from_int(3).inv().unwrap()));
        assert!(red.denominator().is_one());
        let three = LaurentPoly::constant(&q.from_int(3));
        assert!(red.equals(&RationalFunction::new(quad, three).unwrap()));
    }

    #[test]
    fn zero_denominator_rejected() {
        let q = Field::rationals();
        assert_eq!(
            RationalFunction::new(LaurentPoly::one(&q), LaurentPoly::zero(&q)),
            Err(AlgebraError::ZeroDenominator)
        );
    }
}
