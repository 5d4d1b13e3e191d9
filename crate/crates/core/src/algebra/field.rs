//! Runtime-configured exact fields: `F_p`, `Q`, and simple extensions of
//! either by a monic irreducible polynomial.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dense::{self, Arith};
use super::render::{render_terms, CoeffText};
use super::AlgebraError;

/// Largest supported prime characteristic; products of two residues must fit in `u64`.
pub const MAX_CHARACTERISTIC: u64 = (1 << 31) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct ModP(pub u64);

impl Arith for ModP {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        Some(self.pow(*a, self.0 - 2))
    }
}

impl ModP {
    pub(crate) fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.0;
            }
            base = base * base % self.0;
            exp >>= 1;
        }
        acc
    }

    pub(crate) fn reduce_int(&self, v: &BigInt) -> u64 {
        let p = BigInt::from(self.0);
        v.mod_floor(&p).to_u64().expect("residue below p")
    }

    fn reduce_rational(&self, q: &BigRational) -> Option<u64> {
        let den = self.reduce_int(q.denom());
        Some(self.mul(&self.reduce_int(q.numer()), &self.inv(&den)?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Rationals;

impl Arith for Rationals {
    type E = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
}

/// `base[w] / (modulus)`; elements are trimmed residues of degree < deg(modulus).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ExtField<B: Arith> {
    base: B,
    modulus: Vec<B::E>,
}

impl<B: Arith> Arith for ExtField<B> {
    type E = Vec<B::E>;

    fn zero(&self) -> Self::E {
        Vec::new()
    }
    fn one(&self) -> Self::E {
        vec![self.base.one()]
    }
    fn is_zero(&self, a: &Self::E) -> bool {
        a.is_empty()
    }
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E {
        dense::add(&self.base, a, b)
    }
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        dense::sub(&self.base, a, b)
    }
    fn neg(&self, a: &Self::E) -> Self::E {
        a.iter().map(|c| self.base.neg(c)).collect()
    }
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E {
        let prod = dense::mul(&self.base, a, b);
        dense::div_rem(&self.base, &prod, &self.modulus).1
    }
    fn inv(&self, a: &Self::E) -> Option<Self::E> {
        if a.is_empty() {
            return None;
        }
        dense::inv_mod(&self.base, a, &self.modulus)
    }
}

/// Raw field value without its field. Canonical for a given field, so
/// structural equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Scalar {
    Mod(u64),
    Rat(BigRational),
    ModExt(Vec<u64>),
    RatExt(Vec<BigRational>),
}

/// Description of a field: characteristic 0 or prime, optionally extended by
/// one generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub characteristic: u64,
    pub extension: Option<ExtensionSpec>,
}

/// A simple extension `base[name] / (modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionSpec {
    pub generator: String,
    /// Monic modulus, lowest degree first. In characteristic p the
    /// coefficients are integers in `0..p`.
    pub modulus: Vec<BigRational>,
}

#[derive(Debug)]
enum Kind {
    Prime(ModP),
    Rational(Rationals),
    PrimeExt(ExtField<ModP>),
    RationalExt(ExtField<Rationals>),
}

#[derive(Debug)]
struct Inner {
    spec: FieldSpec,
    kind: Kind,
}

/// Shared handle to a field. Cheap to clone.
#[derive(Clone, Debug)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Ben-Or irreducibility test over `F_p`: `f` (monic, degree d) is
/// irreducible iff `gcd(x^(p^i) - x, f) = 1` for all `1 <= i <= d/2`.
fn irreducible_mod_p(fp: &ModP, f: &[u64]) -> bool {
    let d = f.len() - 1;
    let x = vec![0, 1];
    let mut power = x.clone();
    for _ in 0..d / 2 {
        power = pow_mod(fp, &power, fp.0, f);
        let diff = dense::sub(fp, &power, &x);
        if dense::gcd(fp, &diff, f).len() != 1 {
            return false;
        }
    }
    true
}

fn pow_mod(fp: &ModP, base: &[u64], mut exp: u64, m: &[u64]) -> Vec<u64> {
    let mut acc = vec![1];
    let mut b = dense::div_rem(fp, base, m).1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = dense::div_rem(fp, &dense::mul(fp, &acc, &b), m).1;
        }
        b = dense::div_rem(fp, &dense::mul(fp, &b, &b), m).1;
        exp >>= 1;
    }
    acc
}

fn rat(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl Field {
    /// Validates `spec` and builds the field. Irreducibility of an extension
    /// modulus is checked in characteristic p and trusted in characteristic 0.
    pub fn new(spec: FieldSpec) -> Result<Self, AlgebraError> {
        let p = spec.characteristic;
        if p != 0 && !is_prime(p) {
            return Err(AlgebraError::InvalidField(format!("characteristic {p} is not prime")));
        }
        if p > MAX_CHARACTERISTIC {
            return Err(AlgebraError::InvalidField(format!("characteristic {p} exceeds {MAX_CHARACTERISTIC}")));
        }
        let (spec, kind) = match spec.extension {
            None if p == 0 => (spec, Kind::Rational(Rationals)),
            None => (spec, Kind::Prime(ModP(p))),
            Some(ext) => {
                if ext.modulus.len() < 3 {
                    return Err(AlgebraError::InvalidField("extension modulus must have degree at least 2".into()));
                }
                if p == 0 {
                    if !ext.modulus.last().is_some_and(|c| c.is_one()) {
                        return Err(AlgebraError::InvalidField("extension modulus is not monic".into()));
                    }
                    let kind = Kind::RationalExt(ExtField { base: Rationals, modulus: ext.modulus.clone() });
                    (FieldSpec { characteristic: 0, extension: Some(ext) }, kind)
                } else {
                    let fp = ModP(p);
                    let modulus =
                        ext.modulus.iter().map(|c| fp.reduce_rational(c)).collect::<Option<Vec<u64>>>().ok_or_else(
                            || AlgebraError::InvalidField("modulus coefficient has denominator divisible by p".into()),
                        )?;
                    if modulus.last() != Some(&1) {
                        return Err(AlgebraError::InvalidField("extension modulus is not monic".into()));
                    }
                    if !irreducible_mod_p(&fp, &modulus) {
                        return Err(AlgebraError::InvalidField(format!("extension modulus is reducible over F_{p}")));
                    }
                    let canonical =
                        ExtensionSpec { generator: ext.generator, modulus: modulus.iter().map(|&c| rat(c)).collect() };
                    let kind = Kind::PrimeExt(ExtField { base: fp, modulus });
                    (FieldSpec { characteristic: p, extension: Some(canonical) }, kind)
                }
            }
        };
        Ok(Field(Arc::new(Inner { spec, kind })))
    }

    pub fn prime(p: u64) -> Result<Self, AlgebraError> {
        Self::new(FieldSpec { characteristic: p, extension: None })
    }

    pub fn rationals() -> Self {
        Self::new(FieldSpec { characteristic: 0, extension: None }).expect("Q is a valid field")
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn characteristic(&self) -> u64 {
        self.0.spec.characteristic
    }

    /// Degree over the prime field (1 without an extension).
    pub fn degree(&self) -> usize {
        self.0.spec.extension.as_ref().map_or(1, |e| e.modulus.len() - 1)
    }

    pub fn is_extension(&self) -> bool {
        self.0.spec.extension.is_some()
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(Arith::zero(self))
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(Arith::one(self))
    }

    pub fn from_int(&self, v: i64) -> FieldElement {
        self.from_rational(&BigRational::from_integer(BigInt::from(v))).expect("integers embed in every field")
    }

    /// Fails in characteristic p when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElement, AlgebraError> {
        self.from_residue(std::slice::from_ref(q))
    }

    /// Element `Σ coeffs[i] w^i` for the extension generator `w`, reduced
    /// modulo the modulus. Without an extension only `coeffs.len() <= 1` is
    /// accepted.
    pub fn from_residue(&self, coeffs: &[BigRational]) -> Result<FieldElement, AlgebraError> {
        let scalar = match &self.0.kind {
            Kind::Prime(fp) | Kind::PrimeExt(ExtField { base: fp, .. }) => {
                let raw = coeffs
                    .iter()
                    .map(|c| fp.reduce_rational(c))
                    .collect::<Option<Vec<u64>>>()
                    .ok_or(AlgebraError::DivisionByZero)?;
                let raw = dense::trim(fp, raw);
                match &self.0.kind {
                    Kind::PrimeExt(ext) => Scalar::ModExt(dense::div_rem(fp, &raw, &ext.modulus).1),
                    _ => Scalar::Mod(self.base_only(raw, 0)?),
                }
            }
            Kind::Rational(_) | Kind::RationalExt(_) => {
                let raw = dense::trim(&Rationals, coeffs.to_vec());
                match &self.0.kind {
                    Kind::RationalExt(ext) => Scalar::RatExt(dense::div_rem(&Rationals, &raw, &ext.modulus).1),
                    _ => Scalar::Rat(self.base_only(raw, BigRational::zero())?),
                }
            }
        };
        Ok(self.wrap(scalar))
    }

    fn base_only<T>(&self, mut raw: Vec<T>, zero: T) -> Result<T, AlgebraError> {
        match raw.len() {
            0 => Ok(zero),
            1 => Ok(raw.pop().expect("one element")),
            _ => Err(AlgebraError::InvalidField("field has no extension generator".into())),
        }
    }

    /// The extension generator, if any.
    pub fn generator(&self) -> Option<FieldElement> {
        self.0.spec.extension.as_ref()?;
        Some(self.from_residue(&[BigRational::zero(), BigRational::one()]).expect("generator embeds"))
    }

    pub fn generator_name(&self) -> Option<&str> {
        self.0.spec.extension.as_ref().map(|e| e.generator.as_str())
    }

    /// Every element of a finite field, in canonical order. `None` for
    /// characteristic 0.
    pub fn elements(&self) -> Option<Vec<FieldElement>> {
        let p = self.characteristic();
        if p == 0 {
            return None;
        }
        let d = self.degree();
        let count = (p as usize).pow(d as u32);
        Some(
            (0..count)
                .map(|mut idx| {
                    let coeffs: Vec<BigRational> = (0..d)
                        .map(|_| {
                            let c = idx % p as usize;
                            idx /= p as usize;
                            rat(c as u64)
                        })
                        .collect();
                    self.from_residue(&coeffs).expect("residues are in range")
                })
                .collect(),
        )
    }

    pub(crate) fn wrap(&self, value: Scalar) -> FieldElement {
        FieldElement { field: self.clone(), value }
    }

    /// Residue coefficients of a raw scalar, lowest degree first.
    pub(crate) fn residue_of(&self, s: &Scalar) -> Vec<BigRational> {
        match s {
            Scalar::Mod(0) => Vec::new(),
            Scalar::Mod(v) => vec![rat(*v)],
            Scalar::Rat(q) if q.is_zero() => Vec::new(),
            Scalar::Rat(q) => vec![q.clone()],
            Scalar::ModExt(v) => v.iter().map(|&c| rat(c)).collect(),
            Scalar::RatExt(v) => v.clone(),
        }
    }

    pub(crate) fn render_scalar(&self, s: &Scalar) -> String {
        let text = self.coeff_text(s);
        match (text.negative, text.compound) {
            (_, true) => text.body.trim_start_matches('(').trim_end_matches(')').to_string(),
            (true, false) => format!("-{}", text.body),
            (false, false) => text.body,
        }
    }

    /// Formatting data for `s` as a coefficient inside a larger polynomial.
    pub(crate) fn coeff_text(&self, s: &Scalar) -> CoeffText {
        match s {
            Scalar::Mod(v) => CoeffText::plain(false, v.to_string(), *v == 1),
            Scalar::Rat(q) => CoeffText::plain(q.is_negative(), q.abs().to_string(), q.abs().is_one()),
            Scalar::ModExt(_) | Scalar::RatExt(_) => {
                let name = self.generator_name().expect("extension scalar");
                let base = self.base_field();
                let terms: Vec<(i64, CoeffText)> = self
                    .residue_of(s)
                    .into_iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(d, c)| {
                        let raw = base.from_rational(&c).expect("residue coefficient embeds").value;
                        (d as i64, base.coeff_text(&raw))
                    })
                    .collect();
                match terms.len() {
                    0 => CoeffText::plain(false, "0".into(), false),
                    1 => {
                        let (d, c) = &terms[0];
                        if *d == 0 {
                            c.clone()
                        } else {
                            let unsigned = CoeffText { negative: false, ..c.clone() };
                            let body = render_terms(std::iter::once((*d, unsigned)), name);
                            CoeffText::plain(c.negative, body, false)
                        }
                    }
                    _ => CoeffText {
                        negative: false,
                        body: format!("({})", render_terms(terms.into_iter(), name)),
                        unit: false,
                        compound: true,
                    },
                }
            }
        }
    }

    /// The prime field (or `Q`) underneath this field.
    pub fn base_field(&self) -> Field {
        match self.0.spec.extension {
            None => self.clone(),
            Some(_) => Field::new(FieldSpec { characteristic: self.characteristic(), extension: None })
                .expect("prime field of a valid field"),
        }
    }
}

macro_rules! dispatch_binary {
    ($field:expr, $a:expr, $b:expr, $method:ident) => {
        match (&$field.0.kind, $a, $b) {
            (Kind::Prime(f), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(f.$method(x, y)),
            (Kind::Rational(f), Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(f.$method(x, y)),
            (Kind::PrimeExt(f), Scalar::ModExt(x), Scalar::ModExt(y)) => Scalar::ModExt(f.$method(x, y)),
            (Kind::RationalExt(f), Scalar::RatExt(x), Scalar::RatExt(y)) => Scalar::RatExt(f.$method(x, y)),
            _ => panic!("scalar does not belong to this field"),
        }
    };
}

impl Arith for Field {
    type E = Scalar;

    fn zero(&self) -> Scalar {
        match &self.0.kind {
            Kind::Prime(_) => Scalar::Mod(0),
            Kind::Rational(_) => Scalar::Rat(BigRational::zero()),
            Kind::PrimeExt(_) => Scalar::ModExt(Vec::new()),
            Kind::RationalExt(_) => Scalar::RatExt(Vec::new()),
        }
    }

    fn one(&self) -> Scalar {
        match &self.0.kind {
            Kind::Prime(f) => Scalar::Mod(f.one()),
            Kind::Rational(_) => Scalar::Rat(BigRational::one()),
            Kind::PrimeExt(f) => Scalar::ModExt(f.one()),
            Kind::RationalExt(f) => Scalar::RatExt(f.one()),
        }
    }

    fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(v) => *v == 0,
            Scalar::Rat(q) => q.is_zero(),
            Scalar::ModExt(v) => v.is_empty(),
            Scalar::RatExt(v) => v.is_empty(),
        }
    }

    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        dispatch_binary!(self, a, b, add)
    }

    fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        dispatch_binary!(self, a, b, sub)
    }

    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        dispatch_binary!(self, a, b, mul)
    }

    fn neg(&self, a: &Scalar) -> Scalar {
        match (&self.0.kind, a) {
            (Kind::Prime(f), Scalar::Mod(x)) => Scalar::Mod(f.neg(x)),
            (Kind::Rational(_), Scalar::Rat(x)) => Scalar::Rat(-x),
            (Kind::PrimeExt(f), Scalar::ModExt(x)) => Scalar::ModExt(f.neg(x)),
            (Kind::RationalExt(f), Scalar::RatExt(x)) => Scalar::RatExt(f.neg(x)),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match (&self.0.kind, a) {
            (Kind::Prime(f), Scalar::Mod(x)) => f.inv(x).map(Scalar::Mod),
            (Kind::Rational(f), Scalar::Rat(x)) => f.inv(x).map(Scalar::Rat),
            (Kind::PrimeExt(f), Scalar::ModExt(x)) => f.inv(x).map(Scalar::ModExt),
            (Kind::RationalExt(f), Scalar::RatExt(x)) => f.inv(x).map(Scalar::RatExt),
            _ => panic!("scalar does not belong to this field"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic() {
            0 => write!(f, "Q")?,
            p => write!(f, "F_{p}")?,
        }
        if let Some(ext) = &self.0.spec.extension {
            let base = self.base_field();
            let terms = ext.modulus.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).map(|(d, c)| {
                let raw = base.from_rational(c).expect("modulus embeds").value;
                (d as i64, base.coeff_text(&raw))
            });
            write!(f, "[{}]/({})", ext.generator, render_terms(terms, &ext.generator))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An element of a [`Field`], in canonical residue form.
#[derive(Clone, Debug)]
pub struct FieldElement {
    field: Field,
    pub(crate) value: Scalar,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.value)
    }

    pub fn is_one(&self) -> bool {
        self.value == Arith::one(&self.field)
    }

    /// Canonical residue coefficients, lowest degree first; empty for zero.
    pub fn residue(&self) -> Vec<BigRational> {
        self.field.residue_of(&self.value)
    }

    /// The representative in `0..p` for prime-field elements.
    pub fn as_residue_u64(&self) -> Option<u64> {
        match self.value {
            Scalar::Mod(v) => Some(v),
            _ => None,
        }
    }

    pub fn inv(&self) -> Result<FieldElement, AlgebraError> {
        self.field.inv(&self.value).map(|v| self.field.wrap(v)).ok_or(AlgebraError::DivisionByZero)
    }

    pub fn pow(&self, exp: i64) -> Result<FieldElement, AlgebraError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.field.one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Checked binary operation.
    pub fn apply(&self, op: FieldOp, rhs: &FieldElement) -> Result<FieldElement, AlgebraError> {
        if self.field != rhs.field {
            return Err(AlgebraError::FieldMismatch);
        }
        let f = &self.field;
        let value = match op {
            FieldOp::Add => f.add(&self.value, &rhs.value),
            FieldOp::Sub => f.sub(&self.value, &rhs.value),
            FieldOp::Mul => f.mul(&self.value, &rhs.value),
            FieldOp::Div => {
                let inv = f.inv(&rhs.value).ok_or(AlgebraError::DivisionByZero)?;
                f.mul(&self.value, &inv)
            }
        };
        Ok(f.wrap(value))
    }
}

macro_rules! impl_op {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.apply($op, rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_op!(Add, add, FieldOp::Add);
impl_op!(Sub, sub, FieldOp::Sub);
impl_op!(Mul, mul, FieldOp::Mul);
impl_op!(Div, div, FieldOp::Div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.field.wrap(self.field.neg(&self.value))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.render_scalar(&self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_omega() -> Field {
        let m = [1, 1, 1].iter().map(|&c| rat(c)).collect();
        Field::new(FieldSpec {
            characteristic: 0,
            extension: Some(ExtensionSpec { generator: "w".into(), modulus: m }),
        })
        .unwrap()
    }

    #[test]
    fn f5_division() {
        let f = Field::prime(5).unwrap();
        let q = f.from_int(2).apply(FieldOp::Div, &f.from_int(4)).unwrap();
        assert_eq!(q, f.from_int(3));
    }

    #[test]
    fn omega_squared() {
        let f = q_omega();
        let w = f.generator().unwrap();
        assert_eq!(&w * &w, -&w - f.one());
        assert_eq!((&w * &w).to_string(), "-w - 1");
    }

    #[test]
    fn additive_identity() {
        for f in [Field::prime(7).unwrap(), Field::rationals(), q_omega()] {
            let a = f.from_int(3);
            assert_eq!(&a + &f.zero(), a);
        }
    }

    #[test]
    fn errors() {
        let f5 = Field::prime(5).unwrap();
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f5.one().apply(FieldOp::Div, &f5.zero()), Err(AlgebraError::DivisionByZero));
        assert_eq!(f5.one().apply(FieldOp::Add, &f7.one()), Err(AlgebraError::FieldMismatch));
        assert!(Field::prime(6).is_err());
    }

    #[test]
    fn inverses_exhaustive_small_fields() {
        for p in [2, 3, 5, 7] {
            let f = Field::prime(p).unwrap();
            for a in f.elements().unwrap().into_iter().filter(|a| !a.is_zero()) {
                assert!((&a * &a.inv().unwrap()).is_one());
            }
        }
        // F_25 = F_5[w]/(w^2 - 2) and F_27 = F_3[w]/(w^3 - w - 1)
        for (p, m) in [(5, vec![3, 0, 1]), (3, vec![2, 2, 0, 1])] {
            let f = Field::new(FieldSpec {
                characteristic: p,
                extension: Some(ExtensionSpec { generator: "w".into(), modulus: m.into_iter().map(rat).collect() }),
            })
            .unwrap();
            let elems = f.elements().unwrap();
            assert_eq!(elems.len() as u64, p.pow(f.degree() as u32));
            for a in elems.into_iter().filter(|a| !a.is_zero()) {
                assert!((&a * &a.inv().unwrap()).is_one(), "{a}");
            }
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // w^2 + 1 = (w + 2)(w + 3) over F_5
        let spec = FieldSpec {
            characteristic: 5,
            extension: Some(ExtensionSpec { generator: "w".into(), modulus: vec![rat(1), rat(0), rat(1)] }),
        };
        assert!(Field::new(spec).is_err());
        // quartic with no roots but reducible: (w^2 + 2)(w^2 + 3) = w^4 + 1 over F_5
        let spec = FieldSpec {
            characteristic: 5,
            extension: Some(ExtensionSpec {
                generator: "w".into(),
                modulus: vec![rat(6), rat(0), rat(5), rat(0), rat(1)],
            }),
        };
        assert!(Field::new(spec).is_err());
    }

    #[test]
    fn rendering() {
        let q = Field::rationals();
        let half = q.from_rational(&BigRational::new(BigInt::from(-1), BigInt::from(2))).unwrap();
        assert_eq!(half.to_string(), "-1/2");
        let f = Field::prime(5).unwrap();
        assert_eq!(f.from_int(-1).to_string(), "4");
        assert_eq!(q_omega().to_string(), "Q[w]/(w^2 + w + 1)");
    }
}
