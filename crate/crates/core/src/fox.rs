//! Free differential calculus and the Alexander matrix.

use thiserror::Error;

use crate::algebra::{AlgebraError, PolyMatrix};
use crate::group::{GroupRingElement, Letter, Presentation, Relation, Word};
use crate::par::{self, Execution};
use crate::rep::TensorEvaluator;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FoxError {
    #[error("IndexOutOfRange: index {index} with {len} available")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("evaluator covers {evaluator} generators, presentation has {presentation}")]
    RankMismatch { evaluator: usize, presentation: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `∂w/∂x_j`, in one left-to-right pass: an occurrence of `x_j` after the
/// prefix `u` contributes `u`, an occurrence of `x_j⁻¹` contributes
/// `-u x_j⁻¹`.
pub fn fox_derivative(w: &Word, j: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::identity();
    for &l in w.letters() {
        if l.generator == j {
            if l.inverse {
                let mut term = prefix.clone();
                term.push(l);
                out.add_term(-1, term);
            } else {
                out.add_term(1, prefix.clone());
            }
        }
        prefix.push(l);
    }
    out
}

/// `∂u/∂x_j - ∂v/∂x_j` for the relation `u = v`.
pub fn relation_derivative(rel: &Relation, j: usize) -> GroupRingElement {
    &fox_derivative(&rel.lhs, j) - &fox_derivative(&rel.rhs, j)
}

/// `∂r_i/∂x_j` for relation `i` of `p`, with both indices checked.
pub fn presentation_derivative(p: &Presentation, i: usize, j: usize) -> Result<GroupRingElement, FoxError> {
    let rel = p.relations().get(i).ok_or(FoxError::IndexOutOfRange { index: i, len: p.relations().len() })?;
    if j >= p.rank() {
        return Err(FoxError::IndexOutOfRange { index: j, len: p.rank() });
    }
    Ok(relation_derivative(rel, j))
}

/// The Fox Jacobian `(∂r_i/∂x_j)` in the group ring.
pub fn jacobian(p: &Presentation) -> Vec<Vec<GroupRingElement>> {
    p.relations().iter().map(|r| (0..p.rank()).map(|j| relation_derivative(r, j)).collect()).collect()
}

/// The `(u-1)n × un` matrix whose `(i, j)` block is `Φ(∂r_i/∂x_j)`.
pub fn alexander_matrix(p: &Presentation, ev: &TensorEvaluator, exec: Execution) -> Result<PolyMatrix, FoxError> {
    if ev.rank() != p.rank() {
        return Err(FoxError::RankMismatch { evaluator: ev.rank(), presentation: p.rank() });
    }
    let u = p.rank();
    let rows: Vec<Vec<PolyMatrix>> =
        par::map(exec, p.relations(), |rel| (0..u).map(|j| ev.phi(&relation_derivative(rel, j))).collect());
    let blocks: Vec<PolyMatrix> = rows.into_iter().flatten().collect();
    Ok(PolyMatrix::from_blocks(ev.field(), p.relations().len(), u, ev.dim(), &blocks)?)
}

/// `Σ_j (∂w/∂x_j)(x_j - 1)`, which equals `w - 1`.
pub fn fundamental_sum(w: &Word, rank: usize) -> GroupRingElement {
    (0..rank).fold(GroupRingElement::zero(), |acc, j| {
        let xj = &GroupRingElement::from_word(Word::letter(Letter::new(j, false))) - &GroupRingElement::one();
        &acc + &(&fox_derivative(w, j) * &xj)
    })
}
