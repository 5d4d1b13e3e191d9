//! Consistency checks and the fiberedness obstruction.

use crate::algebra::{FieldElement, LaurentPoly};
use crate::group::{AbelianizationMap, GroupError, Presentation, Word};
use crate::par::Execution;
use crate::rep::{Representation, TensorEvaluator};

use super::{column_determinants, evaluator_for, reidemeister_torsion, TorsionError, TorsionResult, UnitGroup};

/// `±1` as a sign, if `c` is one of them.
fn sign_of(c: &FieldElement) -> Option<i8> {
    if c.is_one() {
        Some(1)
    } else if (-c).is_one() {
        Some(-1)
    } else {
        None
    }
}

/// `det M_j · det Φ(x_k - 1) = sign · t^shift · det M_k · det Φ(x_j - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnPair {
    pub first: usize,
    pub second: usize,
    pub sign: i8,
    pub shift: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    pub dimension: usize,
    /// Columns with nonzero denominator.
    pub usable: Vec<usize>,
    pub pairs: Vec<ColumnPair>,
}

impl IndependenceReport {
    /// Every unit found lies in the sign-free group `{t^{nk}}` when `n` is
    /// even (the sign is not forced to vanish by the general argument).
    pub fn within_unit_group(&self) -> bool {
        let g = UnitGroup { dimension: self.dimension };
        self.pairs.iter().all(|p| (g.signed() || p.sign == 1) && p.shift % self.dimension as i64 == 0)
    }
}

pub fn check_column_independence(p: &Presentation, rho: &Representation) -> Result<IndependenceReport, TorsionError> {
    let ev = evaluator_for(p, rho)?;
    check_column_independence_with(p, &ev, Execution::default())
}

/// Compares every pair of usable columns; fails unless they agree up to
/// `±t^{nk}`.
pub fn check_column_independence_with(
    p: &Presentation,
    ev: &TensorEvaluator,
    exec: Execution,
) -> Result<IndependenceReport, TorsionError> {
    let dets = column_determinants(p, ev, exec)?;
    if dets.iter().all(|(num, _)| num.is_zero()) {
        return Err(TorsionError::NotAcyclic);
    }
    let n = ev.dim();
    let usable: Vec<usize> = (0..dets.len()).filter(|&j| !dets[j].1.is_zero()).collect();
    let mut pairs = Vec::new();
    for (a, &j) in usable.iter().enumerate() {
        for &k in &usable[a + 1..] {
            let lhs = &dets[j].0 * &dets[k].1;
            let rhs = &dets[k].0 * &dets[j].1;
            let unit = lhs.unit_ratio(&rhs).and_then(|(c, shift)| Some((sign_of(&c)?, shift)));
            match unit {
                Some((sign, shift)) if shift % n as i64 == 0 => {
                    pairs.push(ColumnPair { first: j, second: k, sign, shift })
                }
                _ => return Err(TorsionError::IndependenceViolated { first: j, second: k }),
            }
        }
    }
    Ok(IndependenceReport { dimension: n, usable, pairs })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The torsion is not a quotient of monic polynomials: not fibered.
    Obstructed(String),
    /// Necessary condition only; never a fiberedness certificate.
    Passes,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    /// Leading coefficient of the reduced numerator over that of the
    /// reduced denominator.
    pub leading_ratio: FieldElement,
    pub trailing_ratio: FieldElement,
    /// Even dimension, as the monic criterion requires.
    pub within_hypothesis: bool,
}

/// Monic test at both ends of the reduced torsion. Ratios are used since
/// the reduced form is only fixed up to a common scalar.
pub fn fibered_obstruction(r: &TorsionResult) -> ObstructionReport {
    let red = r.reduced();
    let (num, den) = (red.numerator(), red.denominator());
    let ratio = |a: Option<FieldElement>, b: Option<FieldElement>| &a.expect("nonzero") / &b.expect("nonzero");
    let leading_ratio = ratio(num.leading_coeff(), den.leading_coeff());
    let trailing_ratio = ratio(num.trailing_coeff(), den.trailing_coeff());
    let units = r.unit_group();
    let verdict = if !units.contains_scalar(&leading_ratio) {
        Verdict::Obstructed(format!("leading coefficient {leading_ratio} is not a unit"))
    } else if !units.contains_scalar(&trailing_ratio) {
        Verdict::Obstructed(format!("lowest coefficient {trailing_ratio} is not a unit"))
    } else {
        Verdict::Passes
    };
    ObstructionReport { verdict, leading_ratio, trailing_ratio, within_hypothesis: r.dimension().is_multiple_of(2) }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// `τ(t⁻¹) = sign · t^shift · τ(t)`.
    Symmetric {
        sign: i8,
        shift: i64,
    },
    Asymmetric,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub symmetry: Symmetry,
    /// Dimension 2 over a prime field or in characteristic 0; otherwise the
    /// result is informational.
    pub within_hypothesis: bool,
}

pub fn symmetry_check(r: &TorsionResult) -> SymmetryReport {
    let red = r.reduced();
    let (num, den) = (red.numerator(), red.denominator());
    let lhs: LaurentPoly = &num.reflect() * den;
    let rhs: LaurentPoly = num * &den.reflect();
    let symmetry = if num.is_zero() {
        Symmetry::Symmetric { sign: 1, shift: 0 }
    } else {
        match lhs.unit_ratio(&rhs).and_then(|(c, shift)| Some((sign_of(&c)?, shift))) {
            Some((sign, shift)) => Symmetry::Symmetric { sign, shift },
            None => Symmetry::Asymmetric,
        }
    };
    let f = r.field();
    let within_hypothesis = r.dimension() == 2 && (f.characteristic() == 0 || !f.is_extension());
    SymmetryReport { symmetry, within_hypothesis }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `γ` is in the commutator subgroup and `ρ(γ)` lacks eigenvalue 1, so
    /// the torsion is a Laurent polynomial.
    Certified,
    NotInCommutator,
    EigenvalueOne,
}

/// Sufficient condition for `det Φ(x_j - 1) | det M_j`. A `Certified`
/// outcome is cross-checked against the actual division.
pub fn polynomial_certificate(
    p: &Presentation,
    rho: &Representation,
    gamma: &Word,
) -> Result<Certificate, TorsionError> {
    if let Some(g) = gamma.max_generator().filter(|&g| g >= p.rank()) {
        return Err(GroupError::GeneratorOutOfRange { index: g, rank: p.rank() }.into());
    }
    let alpha = AbelianizationMap::of(p)?;
    if alpha.degree(gamma) != 0 {
        return Ok(Certificate::NotInCommutator);
    }
    let shifted = &rho.word_image(gamma) - &crate::algebra::FieldMatrix::identity(rho.field(), rho.dim());
    if shifted.det()?.is_zero() {
        return Ok(Certificate::EigenvalueOne);
    }
    match reidemeister_torsion(p, rho, None) {
        Ok(r) if !r.is_polynomial() => Err(TorsionError::CertificateViolated),
        Ok(_) | Err(TorsionError::NotAcyclic) => Ok(Certificate::Certified),
        Err(e) => Err(e),
    }
}
