//! Dense univariate polynomial kernels, generic over a coefficient field.
//!
//! Polynomials are coefficient vectors, lowest degree first, with no trailing
//! zeros. The empty vector is the zero polynomial.

use std::fmt::Debug;

/// Field arithmetic on a context object. Elements do not carry their field;
/// the context does.
pub(crate) trait Arith {
    type E: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// `None` for zero.
    fn inv(&self, a: &Self::E) -> Option<Self::E>;
}

pub(crate) fn trim<A: Arith>(f: &A, mut p: Vec<A::E>) -> Vec<A::E> {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
    p
}

pub(crate) fn add<A: Arith>(f: &A, a: &[A::E], b: &[A::E]) -> Vec<A::E> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => f.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(f, out)
}

pub(crate) fn sub<A: Arith>(f: &A, a: &[A::E], b: &[A::E]) -> Vec<A::E> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => f.sub(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => f.neg(y),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(f, out)
}

pub(crate) fn scale<A: Arith>(f: &A, a: &[A::E], c: &A::E) -> Vec<A::E> {
    if f.is_zero(c) {
        return Vec::new();
    }
    trim(f, a.iter().map(|x| f.mul(x, c)).collect())
}

pub(crate) fn mul<A: Arith>(f: &A, a: &[A::E], b: &[A::E]) -> Vec<A::E> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let prod = f.mul(x, y);
            out[i + j] = f.add(&out[i + j], &prod);
        }
    }
    trim(f, out)
}

/// Quotient and remainder. Panics if `b` is zero.
pub(crate) fn div_rem<A: Arith>(f: &A, a: &[A::E], b: &[A::E]) -> (Vec<A::E>, Vec<A::E>) {
    let lead = b.last().expect("division by the zero polynomial");
    let lead_inv = f.inv(lead).expect("trimmed polynomial has nonzero leading coefficient");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let mut rem = a.to_vec();
    let mut quot = vec![f.zero(); a.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let c = f.mul(&rem[k + b.len() - 1], &lead_inv);
        if f.is_zero(&c) {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            let prod = f.mul(&c, bi);
            rem[k + i] = f.sub(&rem[k + i], &prod);
        }
        quot[k] = c;
    }
    rem.truncate(b.len() - 1);
    (trim(f, quot), trim(f, rem))
}

/// `Some(a / b)` when `b` divides `a` exactly.
pub(crate) fn exact_div<A: Arith>(f: &A, a: &[A::E], b: &[A::E]) -> Option<Vec<A::E>> {
    let (q, r) = div_rem(f, a, b);
    r.is_empty().then_some(q)
}

pub(crate) fn make_monic<A: Arith>(f: &A, a: &[A::E]) -> Vec<A::E> {
    match a.last() {
        None => Vec::new(),
        Some(lead) => scale(f, a, &f.inv(lead).expect("nonzero leading coefficient")),
    }
}

/// Monic gcd via the Euclidean algorithm; zero iff both inputs are zero.
pub(crate) fn gcd<A: Arith>(f: &A, a: &[A::E], b: &[A::E]) -> Vec<A::E> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let (_, r) = div_rem(f, &x, &y);
        x = std::mem::replace(&mut y, r);
    }
    make_monic(f, &x)
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub(crate) fn inv_mod<A: Arith>(f: &A, a: &[A::E], m: &[A::E]) -> Option<Vec<A::E>> {
    // Invariant: s * a ≡ r (mod m) for both rows.
    let (mut r0, mut r1) = (m.to_vec(), div_rem(f, a, m).1);
    let (mut s0, mut s1) = (Vec::new(), vec![f.one()]);
    while !r1.is_empty() {
        let (q, r) = div_rem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = f.inv(&r0[0])?;
    let s = scale(f, &s0, &c);
    Some(div_rem(f, &s, m).1)
}
