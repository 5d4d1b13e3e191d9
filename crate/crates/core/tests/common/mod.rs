#![allow(dead_code)]

use proptest::prelude::*;
use rtorsion::algebra::{Field, LaurentPoly, PolyMatrix};
use rtorsion::group::{Letter, Word};

pub fn f5() -> Field {
    Field::prime(5).unwrap()
}

/// `Q(w)` with `w^2 + w + 1 = 0`.
pub fn q_omega() -> Field {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use rtorsion::algebra::{ExtensionSpec, FieldSpec};
    let modulus = [1, 1, 1].iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
    Field::new(FieldSpec { characteristic: 0, extension: Some(ExtensionSpec { generator: "w".into(), modulus }) })
        .unwrap()
}

/// Laurent polynomials with small integer coefficients in degrees
/// `low..low + len`.
pub fn laurent(field: Field, max_len: usize) -> impl Strategy<Value = LaurentPoly> {
    (-3i64..=3, prop::collection::vec(-4i64..=4, 0..=max_len))
        .prop_map(move |(low, coeffs)| LaurentPoly::from_ints(&field, low, &coeffs))
}

pub fn poly_matrix(field: Field, n: usize, max_len: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(laurent(field.clone(), max_len), n * n)
        .prop_map(move |entries| PolyMatrix::new(&field, n, n, entries).unwrap())
}

pub fn word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..rank, any::<bool>()), 0..=max_len)
        .prop_map(|ls| Word::from_letters(ls.into_iter().map(|(g, i)| Letter::new(g, i))))
}

/// Laplace expansion along the first row; independent of elimination.
pub fn cofactor_det(m: &PolyMatrix) -> LaurentPoly {
    let n = m.rows();
    let f = m.field().clone();
    if n == 0 {
        return LaurentPoly::one(&f);
    }
    let mut acc = LaurentPoly::zero(&f);
    for c in 0..n {
        let minor = PolyMatrix::from_fn(&f, n - 1, n - 1, |i, j| {
            let col = if j < c { j } else { j + 1 };
            m.get(i + 1, col).clone()
        });
        let term = m.get(0, c) * &cofactor_det(&minor);
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}
