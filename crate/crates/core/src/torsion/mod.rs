//! Reidemeister torsion `det M_j / det Φ(x_j - 1)` and its diagnostics.

mod checks;

use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraError, Field, FieldElement, LaurentPoly, RationalFunction};
use crate::fox::{alexander_matrix, FoxError};
use crate::group::{AbelianizationMap, GroupError, Presentation};
use crate::par::{self, Execution};
use crate::rep::{RepError, Representation, TensorEvaluator, Validation};

pub use checks::{
    check_column_independence, check_column_independence_with, fibered_obstruction, polynomial_certificate,
    symmetry_check, Certificate, ColumnPair, IndependenceReport, ObstructionReport, Symmetry, SymmetryReport, Verdict,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TorsionError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Fox(#[from] FoxError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("InvalidRepresentation: {0}")]
    InvalidRepresentation(String),
    #[error("NotAcyclic: det M_j vanishes for every column")]
    NotAcyclic,
    #[error("NoValidDenominator: every det Phi(x_j - 1) vanishes; det M_{column} = {numerator}")]
    NoValidDenominator { column: usize, numerator: LaurentPoly },
    #[error("ZeroDenominator: det Phi(x_j - 1) vanishes for column {column}")]
    ZeroDenominator { column: usize },
    #[error("IndexOutOfRange: column {column} with {rank} generators")]
    ColumnOutOfRange { column: usize, rank: usize },
    #[error("IndependenceViolated: columns {first} and {second} disagree beyond a unit")]
    IndependenceViolated { first: usize, second: usize },
    #[error("polynomial certificate holds but det Phi(x_j - 1) does not divide det M_j")]
    CertificateViolated,
}

/// The ambiguity of the torsion: `{t^{nk}}` for even `n`, `{±t^{nk}}` for
/// odd `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitGroup {
    pub dimension: usize,
}

impl UnitGroup {
    pub fn signed(&self) -> bool {
        self.dimension % 2 == 1
    }

    /// Whether `c` is an allowed scalar part (`1`, or `±1` when signed).
    pub fn contains_scalar(&self, c: &FieldElement) -> bool {
        c.is_one() || (self.signed() && (-c).is_one())
    }

    pub fn contains(&self, c: &FieldElement, shift: i64) -> bool {
        self.contains_scalar(c) && shift % self.dimension as i64 == 0
    }
}

impl fmt::Display for UnitGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.signed() { "±" } else { "" };
        if self.dimension == 1 {
            write!(f, "{sign}t^k")
        } else {
            write!(f, "{sign}t^({}k)", self.dimension)
        }
    }
}

/// Outcome of the torsion computation for one removed column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionResult {
    column: usize,
    numerator: LaurentPoly,
    denominator: LaurentPoly,
    reduced: RationalFunction,
    shift: i64,
    dimension: usize,
    is_polynomial: bool,
}

impl TorsionResult {
    /// Index of the removed generator column.
    pub fn column(&self) -> usize {
        self.column
    }

    /// `det M_j`.
    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    /// `det Φ(x_j - 1)`.
    pub fn denominator(&self) -> &LaurentPoly {
        &self.denominator
    }

    /// Lowest terms, no t-power content, monic denominator.
    pub fn reduced(&self) -> &RationalFunction {
        &self.reduced
    }

    /// `k` with `numerator / denominator = t^k * reduced`.
    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn unit_group(&self) -> UnitGroup {
        UnitGroup { dimension: self.dimension }
    }

    /// The denominator divides the numerator.
    pub fn is_polynomial(&self) -> bool {
        self.is_polynomial
    }

    pub fn field(&self) -> &Field {
        self.numerator.field()
    }

    /// The unreduced quotient.
    pub fn quotient(&self) -> RationalFunction {
        RationalFunction::new(self.numerator.clone(), self.denominator.clone()).expect("nonzero denominator")
    }

    fn build(column: usize, numerator: LaurentPoly, denominator: LaurentPoly, dimension: usize) -> Self {
        let quotient = RationalFunction::new(numerator.clone(), denominator.clone()).expect("nonzero denominator");
        let (shift, reduced) = quotient.reduce();
        let is_polynomial = numerator.exact_div(&denominator).expect("same field").is_some();
        TorsionResult { column, numerator, denominator, reduced, shift, dimension, is_polynomial }
    }
}

/// `det Φ(x_j - 1)` for every generator.
pub fn denominators(ev: &TensorEvaluator) -> Result<Vec<LaurentPoly>, TorsionError> {
    (0..ev.rank()).map(|j| Ok(ev.generator_minus_one(j).det()?)).collect()
}

/// `(det M_j, det Φ(x_j - 1))` for every column `j`, computed per column
/// under `exec`.
pub fn column_determinants(
    p: &Presentation,
    ev: &TensorEvaluator,
    exec: Execution,
) -> Result<Vec<(LaurentPoly, LaurentPoly)>, TorsionError> {
    p.require_deficiency_one()?;
    let m = alexander_matrix(p, ev, exec)?;
    let n = ev.dim();
    let dens = denominators(ev)?;
    let nums = par::map_range(exec, p.rank(), |j| m.remove_block_column(j, n).det());
    nums.into_iter().zip(dens).map(|(num, den)| Ok((num?, den))).collect()
}

/// Torsion for an explicit evaluator (so an explicit `α`). The
/// representation is not validated here.
pub fn torsion_from_evaluator(
    p: &Presentation,
    ev: &TensorEvaluator,
    column: Option<usize>,
    exec: Execution,
) -> Result<TorsionResult, TorsionError> {
    p.require_deficiency_one()?;
    let u = p.rank();
    if let Some(j) = column.filter(|&j| j >= u) {
        return Err(TorsionError::ColumnOutOfRange { column: j, rank: u });
    }
    let n = ev.dim();
    let m = alexander_matrix(p, ev, exec)?;
    let dens = denominators(ev)?;
    let j = match column {
        Some(j) if dens[j].is_zero() => return Err(TorsionError::ZeroDenominator { column: j }),
        Some(j) => j,
        None => match dens.iter().position(|d| !d.is_zero()) {
            Some(j) => j,
            None => {
                let nums = par::map_range(exec, u, |k| m.remove_block_column(k, n).det());
                for (k, num) in nums.into_iter().enumerate() {
                    let num = num?;
                    if !num.is_zero() {
                        return Err(TorsionError::NoValidDenominator { column: k, numerator: num });
                    }
                }
                return Err(TorsionError::NotAcyclic);
            }
        },
    };
    let numerator = m.remove_block_column(j, n).det()?;
    // With det Φ(x_j - 1) ≠ 0, column independence forces every det M_k
    // to vanish along with det M_j.
    if numerator.is_zero() {
        return Err(TorsionError::NotAcyclic);
    }
    Ok(TorsionResult::build(j, numerator, dens[j].clone(), n))
}

/// Checks deficiency, abelianization and the representation, then builds
/// the evaluator.
pub fn evaluator_for(p: &Presentation, rho: &Representation) -> Result<TensorEvaluator, TorsionError> {
    p.require_deficiency_one()?;
    let alpha = AbelianizationMap::of(p)?;
    match rho.validate(p)? {
        Validation::Valid => {}
        Validation::RelationFails(i) => {
            return Err(TorsionError::InvalidRepresentation(format!("relation {} does not hold", i + 1)))
        }
        Validation::NotUnimodular(g) => {
            return Err(TorsionError::InvalidRepresentation(format!(
                "image of `{}` does not have determinant 1",
                p.generators()[g]
            )))
        }
    }
    Ok(TensorEvaluator::new(rho.clone(), alpha)?)
}

pub fn reidemeister_torsion(
    p: &Presentation,
    rho: &Representation,
    column: Option<usize>,
) -> Result<TorsionResult, TorsionError> {
    reidemeister_torsion_with(p, rho, column, Execution::default())
}

pub fn reidemeister_torsion_with(
    p: &Presentation,
    rho: &Representation,
    column: Option<usize>,
    exec: Execution,
) -> Result<TorsionResult, TorsionError> {
    let ev = evaluator_for(p, rho)?;
    torsion_from_evaluator(p, &ev, column, exec)
}

/// Torsion for the trivial one-dimensional representation over `Q`:
/// `Δ(t) / (t - 1)` up to units.
pub fn classical_alexander(p: &Presentation) -> Result<TorsionResult, TorsionError> {
    let rho = Representation::trivial(&Field::rationals(), p.rank());
    reidemeister_torsion(p, &rho, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldMatrix;
    use crate::group::parse_presentation;

    #[test]
    fn unknot_group() {
        let p = parse_presentation("gens x\n").unwrap();
        let r = classical_alexander(&p).unwrap();
        let q = Field::rationals();
        assert!(r.numerator().is_one());
        assert_eq!(r.denominator(), &LaurentPoly::from_ints(&q, 0, &[-1, 1]));
        assert_eq!(r.reduced().to_string(), "(1) / (t - 1)");
        assert!(!r.is_polynomial());
    }

    #[test]
    fn classical_figure_eight() {
        let p = parse_presentation("gens x y\nrel x^-1 y x y^-1 x^-1 x = y x^-1 y x y^-1 x^-1\n").unwrap();
        let r = classical_alexander(&p).unwrap();
        let q = Field::rationals();
        let delta = LaurentPoly::from_ints(&q, 0, &[1, -3, 1]);
        assert!(r.reduced().numerator().unit_ratio(&delta).is_some(), "{}", r.reduced());
        assert_eq!(r.reduced().denominator(), &LaurentPoly::from_ints(&q, 0, &[-1, 1]));
    }

    #[test]
    fn column_errors() {
        let p = parse_presentation("gens x y\nrel x y x = y x y\n").unwrap();
        let q = Field::rationals();
        let rho = Representation::trivial(&q, 2);
        assert_eq!(reidemeister_torsion(&p, &rho, Some(2)), Err(TorsionError::ColumnOutOfRange { column: 2, rank: 2 }));
        let bad = parse_presentation("gens x y\n").unwrap();
        assert!(matches!(
            reidemeister_torsion(&bad, &rho, None),
            Err(TorsionError::Group(GroupError::NotDeficiencyOne { .. }))
        ));
        let wrong = Representation::new(&q, 1, vec![FieldMatrix::from_ints(&q, &[&[2]]), FieldMatrix::identity(&q, 1)])
            .unwrap();
        assert!(matches!(reidemeister_torsion(&p, &wrong, None), Err(TorsionError::InvalidRepresentation(_))));
    }

    #[test]
    fn zero_denominator_column() {
        // α(x) = 0 on a mapping torus, so det Φ(x - 1) = 0 for trivial ρ
        let p = parse_presentation("gens x y h\nrel h x h^-1 = x y\nrel h y h^-1 = y x y\n").unwrap();
        let rho = Representation::trivial(&Field::rationals(), 3);
        assert_eq!(reidemeister_torsion(&p, &rho, Some(0)), Err(TorsionError::ZeroDenominator { column: 0 }));
        let r = reidemeister_torsion(&p, &rho, None).unwrap();
        assert_eq!(r.column(), 2);
        let delta = LaurentPoly::from_ints(&Field::rationals(), 0, &[1, -3, 1]);
        assert!(r.reduced().numerator().unit_ratio(&delta).is_some(), "{}", r.reduced());
    }

    #[test]
    fn unit_group_membership() {
        let f = Field::prime(5).unwrap();
        let even = UnitGroup { dimension: 2 };
        let odd = UnitGroup { dimension: 1 };
        assert!(even.contains(&f.one(), 4));
        assert!(!even.contains(&f.one(), 3));
        assert!(!even.contains(&f.from_int(-1), 0));
        assert!(odd.contains(&f.from_int(-1), 3));
        assert_eq!(even.to_string(), "t^(2k)");
        assert_eq!(odd.to_string(), "±t^k");
    }
}
