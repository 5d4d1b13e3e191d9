use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::dense::{self, Arith};
use super::field::{Field, FieldElement, Scalar};
use super::render::render_terms;
use super::AlgebraError;

/// A Laurent polynomial in `t` over a [`Field`], stored sparsely by degree.
/// No stored coefficient is zero; the zero polynomial has no terms.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    field: Field,
    terms: BTreeMap<i64, Scalar>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.field == other.field
    }
}

impl Eq for LaurentPoly {}

impl LaurentPoly {
    pub fn zero(field: &Field) -> Self {
        LaurentPoly { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(&field.one())
    }

    pub fn constant(c: &FieldElement) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^k`.
    pub fn monomial(c: &FieldElement, k: i64) -> Self {
        let mut p = Self::zero(c.field());
        if !c.is_zero() {
            p.terms.insert(k, c.value.clone());
        }
        p
    }

    /// The variable `t`.
    pub fn t(field: &Field) -> Self {
        Self::monomial(&field.one(), 1)
    }

    /// Integer coefficients `coeffs[i]` on `t^(low + i)`.
    pub fn from_ints(field: &Field, low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(field, coeffs.iter().enumerate().map(|(i, &c)| (low + i as i64, field.from_int(c))))
    }

    /// Sums the given terms; repeated degrees accumulate.
    pub fn from_terms(field: &Field, terms: impl IntoIterator<Item = (i64, FieldElement)>) -> Self {
        let mut p = Self::zero(field);
        for (k, c) in terms {
            assert!(c.field() == field, "coefficient from a different field");
            p.add_term(k, &c.value);
        }
        p
    }

    pub(crate) fn add_term(&mut self, k: i64, c: &Scalar) {
        if self.field.is_zero(c) {
            return;
        }
        match self.terms.get(&k) {
            None => {
                self.terms.insert(k, c.clone());
            }
            Some(old) => {
                let sum = self.field.add(old, c);
                if self.field.is_zero(&sum) {
                    self.terms.remove(&k);
                } else {
                    self.terms.insert(k, sum);
                }
            }
        }
    }

    pub(crate) fn from_dense(field: &Field, low: i64, coeffs: Vec<Scalar>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(i, c)| (low + i as i64, c))
            .collect();
        LaurentPoly { field: field.clone(), terms }
    }

    /// `(low, coeffs)` with `self = t^low * Σ coeffs[i] t^i`; zero gives `(0, [])`.
    pub(crate) fn to_dense(&self) -> (i64, Vec<Scalar>) {
        let (Some(lo), Some(hi)) = (self.min_degree(), self.max_degree()) else {
            return (0, Vec::new());
        };
        let mut out = vec![Arith::zero(&self.field); (hi - lo + 1) as usize];
        for (k, c) in &self.terms {
            out[(k - lo) as usize] = c.clone();
        }
        (lo, out)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&Arith::one(&self.field))
    }

    pub fn coeff(&self, k: i64) -> FieldElement {
        match self.terms.get(&k) {
            Some(c) => self.field.wrap(c.clone()),
            None => self.field.zero(),
        }
    }

    /// Nonzero terms in increasing degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, FieldElement)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, self.field.wrap(c.clone())))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Width `max_degree - min_degree`, the degree once t-powers are stripped.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_degree()? - self.min_degree()?)
    }

    pub fn leading_coeff(&self) -> Option<FieldElement> {
        self.terms.values().next_back().map(|c| self.field.wrap(c.clone()))
    }

    /// Coefficient of the lowest-degree term.
    pub fn trailing_coeff(&self) -> Option<FieldElement> {
        self.terms.values().next().map(|c| self.field.wrap(c.clone()))
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        assert!(c.field() == &self.field, "scalar from a different field");
        if c.is_zero() {
            return Self::zero(&self.field);
        }
        let terms = self.terms.iter().map(|(k, v)| (*k, self.field.mul(v, &c.value))).collect();
        LaurentPoly { field: self.field.clone(), terms }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        let terms = self.terms.iter().map(|(d, v)| (d + k, v.clone())).collect();
        LaurentPoly { field: self.field.clone(), terms }
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(&self.field), |acc, _| &acc * self)
    }

    /// Splits off the t-power content: returns `(k, q)` with `self = t^k q`
    /// and `q` having a nonzero constant term (`(0, 0)` for zero).
    pub fn strip_t_power(&self) -> (i64, Self) {
        match self.min_degree() {
            None => (0, self.clone()),
            Some(k) => (k, self.shift(-k)),
        }
    }

    /// Image under `t ↦ t⁻¹`.
    pub fn reflect(&self) -> Self {
        let terms = self.terms.iter().map(|(d, v)| (-d, v.clone())).collect();
        LaurentPoly { field: self.field.clone(), terms }
    }

    /// Exact division in `F[t^{±1}]`: `Some(q)` with `self = q * divisor`.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<Option<LaurentPoly>, AlgebraError> {
        self.check_field(divisor)?;
        if divisor.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let (a_lo, a) = self.to_dense();
        let (b_lo, b) = divisor.to_dense();
        Ok(dense::exact_div(&self.field, &a, &b).map(|q| Self::from_dense(&self.field, a_lo - b_lo, q)))
    }

    /// Monic gcd with nonzero constant term.
    pub fn gcd(&self, other: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(AlgebraError::BothZero);
        }
        let (_, a) = self.to_dense();
        let (_, b) = other.to_dense();
        Ok(Self::from_dense(&self.field, 0, dense::gcd(&self.field, &a, &b)))
    }

    /// Returns `(c, k)` with `self = c t^k other`, if the two are associates.
    pub fn unit_ratio(&self, other: &LaurentPoly) -> Option<(FieldElement, i64)> {
        if self.field != other.field || self.is_zero() || other.is_zero() {
            return None;
        }
        let k = self.min_degree()? - other.min_degree()?;
        let c = &self.trailing_coeff()? / &other.trailing_coeff()?;
        (other.scale(&c).shift(k) == *self).then_some((c, k))
    }

    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement, AlgebraError> {
        if x.field() != &self.field {
            return Err(AlgebraError::FieldMismatch);
        }
        let mut acc = self.field.zero();
        for (k, c) in self.terms() {
            acc = &acc + &(&c * &x.pow(k)?);
        }
        Ok(acc)
    }

    fn check_field(&self, other: &LaurentPoly) -> Result<(), AlgebraError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(AlgebraError::FieldMismatch)
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_field(rhs).unwrap_or_else(|e| panic!("{e}"));
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(k, v)| (*k, self.field.neg(v))).collect();
        LaurentPoly { field: self.field.clone(), terms }
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_field(rhs).unwrap_or_else(|e| panic!("{e}"));
        let (a_lo, a) = self.to_dense();
        let (b_lo, b) = rhs.to_dense();
        // lowest degrees add
        #[allow(clippy::suspicious_arithmetic_impl)]
        let low = a_lo + b_lo;
        LaurentPoly::from_dense(&self.field, low, dense::mul(&self.field, &a, &b))
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl LaurentPoly {
    /// Rendered with `var` in place of `t`.
    pub(crate) fn render(&self, var: &str) -> String {
        let terms = self.terms.iter().rev().map(|(k, c)| (*k, self.field.coeff_text(c)));
        render_terms(terms, var)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering_rules() {
        let q = Field::rationals();
        assert_eq!(LaurentPoly::from_ints(&q, 0, &[1, -4, 1]).to_string(), "t^2 - 4*t + 1");
        assert_eq!(LaurentPoly::from_ints(&q, -2, &[-1, 0, 3]).to_string(), "3 - t^-2");
        assert_eq!(LaurentPoly::from_ints(&q, 0, &[-1, 1]).to_string(), "t - 1");
        assert_eq!(LaurentPoly::from_ints(&q, 1, &[-1]).to_string(), "-t");
        assert_eq!(LaurentPoly::zero(&q).to_string(), "0");
        let f5 = Field::prime(5).unwrap();
        let kt = LaurentPoly::from_ints(&f5, 0, &[4, 0, 2, 1, 2, 0, 4]);
        assert_eq!(kt.to_string(), "4*t^6 + 2*t^4 + t^3 + 2*t^2 + 4");
        assert_eq!(LaurentPoly::from_ints(&f5, 0, &[-1, -1]).to_string(), "4*t + 4");
    }

    #[test]
    fn gcd_cases() {
        let q = Field::rationals();
        let p = LaurentPoly::from_ints(&q, 3, &[6, 2]);
        assert_eq!(p.gcd(&LaurentPoly::zero(&q)).unwrap(), LaurentPoly::from_ints(&q, 0, &[3, 1]));
        assert_eq!(LaurentPoly::zero(&q).gcd(&LaurentPoly::zero(&q)), Err(AlgebraError::BothZero));

        let sq = LaurentPoly::from_ints(&q, 0, &[1, -2, 1]);
        let quad = LaurentPoly::from_ints(&q, 0, &[1, -4, 1]);
        assert_eq!((&sq * &quad).gcd(&sq).unwrap(), sq);
    }

    #[test]
    fn exact_division_and_strip() {
        let f5 = Field::prime(5).unwrap();
        let num = LaurentPoly::from_ints(&f5, 12, &[3, 4, 1, 4, 3]);
        let den = LaurentPoly::from_ints(&f5, 0, &[1, 3, 1]);
        let q = num.exact_div(&den).unwrap().unwrap();
        assert_eq!(q.strip_t_power(), (12, LaurentPoly::from_ints(&f5, 0, &[3, 0, 3])));
        assert_eq!(den.exact_div(&num).unwrap(), None);
    }

    #[test]
    fn unit_ratio_and_reflect() {
        let q = Field::rationals();
        let p = LaurentPoly::from_ints(&q, 0, &[1, -3, 1]);
        let (c, k) = p.reflect().unit_ratio(&p).unwrap();
        assert_eq!((c, k), (q.one(), -2));
        assert!(p.unit_ratio(&LaurentPoly::from_ints(&q, 0, &[1, 1])).is_none());
    }
}
