use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::word::Word;

/// An element of the integral group ring `Z[F]` of a free group: a finite
/// integer combination of reduced words. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        Self::term(1, w)
    }

    pub fn term(c: i64, w: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(c, w);
        e
    }

    pub fn add_term(&mut self, c: i64, w: Word) {
        if c == 0 {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v += c;
                if *v == 0 {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scalar_mul(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        GroupRingElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect() }
    }

    /// Left multiplication by a single word.
    pub fn left_mul_word(&self, w: &Word) -> Self {
        let mut out = Self::zero();
        for (v, c) in &self.terms {
            out.add_term(*c, w * v);
        }
        out
    }

    /// Image under a generator substitution, extended linearly.
    pub fn substitute(&self, images: &[Word]) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(*c, w.substitute(images));
        }
        out
    }

    /// Sum of coefficients (the augmentation).
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> RingDisplay<'a> {
        RingDisplay { element: self, names }
    }
}

impl Add<&GroupRingElement> for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*c, w.clone());
        }
        out
    }
}

impl Sub<&GroupRingElement> for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        self + &(-rhs)
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        self.scalar_mul(-1)
    }
}

impl Mul<&GroupRingElement> for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(a * b, u * v);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for GroupRingElement {
            type Output = GroupRingElement;
            fn $method(self, rhs: GroupRingElement) -> GroupRingElement {
                (&self).$method(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

pub struct RingDisplay<'a> {
    element: &'a GroupRingElement,
    names: &'a [String],
}

impl fmt::Display for RingDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.element.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.element.terms.iter().enumerate() {
            match (i, *c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.unsigned_abs();
            let mut shown = w.display(self.names);
            shown.separator = "*";
            match (w.is_identity(), abs) {
                (true, _) => write!(f, "{abs}")?,
                (false, 1) => write!(f, "{shown}")?,
                (false, _) => write!(f, "{abs}*{shown}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: &[(usize, i64)]) -> Word {
        Word::from_powers(p)
    }

    #[test]
    fn small_products() {
        let x = GroupRingElement::from_word(w(&[(0, 1)]));
        let x_inv = GroupRingElement::from_word(w(&[(0, -1)]));
        let one = GroupRingElement::one();
        assert_eq!(&(&x - &one) * &x_inv, &one - &x_inv);
        assert_eq!(&x * &one, x);

        // y (x^-1 y) - y x^-1 = y x^-1 y - y x^-1
        let y = GroupRingElement::from_word(w(&[(1, 1)]));
        let lhs = &(&y * &GroupRingElement::from_word(w(&[(0, -1), (1, 1)]))) - &(&y * &x_inv);
        let mut expect = GroupRingElement::zero();
        expect.add_term(1, w(&[(1, 1), (0, -1), (1, 1)]));
        expect.add_term(-1, w(&[(1, 1), (0, -1)]));
        assert_eq!(lhs, expect);
    }

    #[test]
    fn cancellation_drops_terms() {
        let x = GroupRingElement::from_word(w(&[(0, 1)]));
        assert!((&x - &x).is_zero());
    }
}
