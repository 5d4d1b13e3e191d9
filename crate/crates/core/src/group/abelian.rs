use num_traits::{One, Signed, ToPrimitive};

use crate::algebra::{smith_normal_form, IntMatrix};

use super::presentation::Presentation;
use super::word::Word;
use super::GroupError;

/// A homomorphism onto `Z = ⟨t⟩`, given by `α(x_i) = t^{a_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianizationMap {
    exponents: Vec<i64>,
}

/// Relations × generators matrix of exponent sums of `lhs` minus `rhs`.
pub fn relation_matrix(p: &Presentation) -> IntMatrix {
    let rank = p.rank();
    let rows: Vec<Vec<i64>> = p
        .relations()
        .iter()
        .map(|r| {
            let l = r.lhs.exponent_sums(rank);
            let s = r.rhs.exponent_sums(rank);
            l.iter().zip(&s).map(|(a, b)| a - b).collect()
        })
        .collect();
    IntMatrix::from_rows(rank, &rows)
}

impl AbelianizationMap {
    /// Checks `exponents` against every relation of `p`.
    pub fn new(exponents: Vec<i64>, p: &Presentation) -> Result<Self, GroupError> {
        let map = AbelianizationMap { exponents };
        if map.exponents.len() != p.rank() || !map.is_consistent_with(p) {
            return Err(GroupError::InconsistentAbelianization);
        }
        Ok(map)
    }

    /// The abelianization of `p`, when `H_1` is infinite cyclic. The sign
    /// makes the first nonzero exponent positive.
    pub fn of(p: &Presentation) -> Result<Self, GroupError> {
        let rank = p.rank();
        let snf = smith_normal_form(&relation_matrix(p));
        let cyclic = snf.rank + 1 == rank && snf.factors.iter().all(|d| d.is_one());
        if !cyclic {
            let mut parts: Vec<String> = snf.factors.iter().filter(|d| !d.is_one()).map(|d| format!("Z/{d}")).collect();
            for _ in 0..rank.saturating_sub(snf.rank) {
                parts.push("Z".into());
            }
            let h1 = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
            return Err(GroupError::NotInfiniteCyclic { h1 });
        }
        // The columns of `right` past the rank span the integer kernel.
        let mut exponents: Vec<i64> =
            (0..rank).map(|i| snf.right.get(i, rank - 1).to_i64().expect("exponent fits in i64")).collect();
        if exponents.iter().find(|a| **a != 0).is_some_and(|a| a.is_negative()) {
            exponents.iter_mut().for_each(|a| *a = -*a);
        }
        let map = AbelianizationMap { exponents };
        debug_assert!(map.is_consistent_with(p));
        Ok(map)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn exponent(&self, g: usize) -> i64 {
        self.exponents[g]
    }

    /// `k` with `α(w) = t^k`.
    pub fn degree(&self, w: &Word) -> i64 {
        w.letters().iter().map(|l| self.exponents[l.generator] * l.exponent()).sum()
    }

    /// Both sides of every relation have the same image.
    pub fn is_consistent_with(&self, p: &Presentation) -> bool {
        p.relations().iter().all(|r| self.degree(&r.lhs) == self.degree(&r.rhs))
    }
}
