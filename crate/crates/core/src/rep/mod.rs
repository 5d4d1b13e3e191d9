//! Unimodular representations of presented groups, the evaluator
//! `Φ = ρ̃ ⊗ α̃` into matrices over `F[t^{±1}]`, and a search for
//! `SL(2, F_p)` representations.

mod file;
mod search;

use thiserror::Error;

use crate::algebra::dense::Arith;
use crate::algebra::{AlgebraError, Field, FieldMatrix, LaurentPoly, PolyMatrix};
use crate::group::{AbelianizationMap, GroupRingElement, Presentation, Word};

pub use file::{parse_representation, write_representation};
pub use search::{find_representations, sl2_class_representatives, SearchOptions, SearchOutcome};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("image of generator {generator} is singular")]
    Singular { generator: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{line}:{column}: syntax error: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{line}:{column}: UnknownGenerator: `{name}`")]
    UnknownGenerator { name: String, line: usize, column: usize },
    #[error("{line}:{column}: duplicate matrix for `{name}`")]
    DuplicateMatrix { name: String, line: usize, column: usize },
    #[error("missing matrix for generator `{name}`")]
    MissingMatrix { name: String },
    #[error("search needs a prime field: {0}")]
    InvalidSearch(String),
}

/// Outcome of checking a representation against a presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validation {
    Valid,
    /// The relation at this index maps to two different matrices.
    RelationFails(usize),
    /// The image of this generator does not have determinant 1.
    NotUnimodular(usize),
}

/// `ρ` given by one `n × n` matrix per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    field: Field,
    dim: usize,
    images: Vec<FieldMatrix>,
    inverses: Vec<FieldMatrix>,
}

impl Representation {
    pub fn new(field: &Field, dim: usize, images: Vec<FieldMatrix>) -> Result<Self, RepError> {
        if dim == 0 {
            return Err(RepError::DimensionMismatch("dimension must be positive".into()));
        }
        let mut inverses = Vec::with_capacity(images.len());
        for (g, m) in images.iter().enumerate() {
            if m.field() != field {
                return Err(AlgebraError::FieldMismatch.into());
            }
            if m.rows() != dim || m.cols() != dim {
                return Err(RepError::DimensionMismatch(format!(
                    "image of generator {g} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            inverses.push(m.inverse().map_err(|_| RepError::Singular { generator: g })?);
        }
        Ok(Representation { field: field.clone(), dim, images, inverses })
    }

    /// The one-dimensional trivial representation on `rank` generators.
    pub fn trivial(field: &Field, rank: usize) -> Self {
        Self::new(field, 1, vec![FieldMatrix::identity(field, 1); rank]).expect("identity is invertible")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FieldMatrix] {
        &self.images
    }

    pub fn image(&self, g: usize) -> &FieldMatrix {
        &self.images[g]
    }

    /// `ρ(w)`.
    pub fn word_image(&self, w: &Word) -> FieldMatrix {
        w.letters().iter().fold(FieldMatrix::identity(&self.field, self.dim), |acc, l| {
            let m = if l.inverse { &self.inverses[l.generator] } else { &self.images[l.generator] };
            &acc * m
        })
    }

    /// Checks determinants first, then relations in order.
    pub fn validate(&self, p: &Presentation) -> Result<Validation, RepError> {
        if self.rank() != p.rank() {
            return Err(RepError::DimensionMismatch(format!("{} images for {} generators", self.rank(), p.rank())));
        }
        for (g, m) in self.images.iter().enumerate() {
            if !m.det()?.is_one() {
                return Ok(Validation::NotUnimodular(g));
            }
        }
        for (i, rel) in p.relations().iter().enumerate() {
            if self.word_image(&rel.lhs) != self.word_image(&rel.rhs) {
                return Ok(Validation::RelationFails(i));
            }
        }
        Ok(Validation::Valid)
    }

    /// Some pair of generator images fails to commute.
    pub fn is_noncommutative(&self) -> bool {
        let n = self.images.len();
        (0..n).any(|i| (i + 1..n).any(|j| &self.images[i] * &self.images[j] != &self.images[j] * &self.images[i]))
    }
}

/// `Φ`: sends a generator `x_i` to `t^{a_i} ρ(x_i)` and extends to the
/// group ring.
#[derive(Clone, Debug)]
pub struct TensorEvaluator {
    rep: Representation,
    alpha: AbelianizationMap,
}

impl TensorEvaluator {
    pub fn new(rep: Representation, alpha: AbelianizationMap) -> Result<Self, RepError> {
        if rep.rank() != alpha.exponents().len() {
            return Err(RepError::DimensionMismatch(format!(
                "{} images but {} abelianization exponents",
                rep.rank(),
                alpha.exponents().len()
            )));
        }
        Ok(TensorEvaluator { rep, alpha })
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn abelianization(&self) -> &AbelianizationMap {
        &self.alpha
    }

    pub fn field(&self) -> &Field {
        &self.rep.field
    }

    pub fn dim(&self) -> usize {
        self.rep.dim
    }

    pub fn rank(&self) -> usize {
        self.rep.rank()
    }

    /// `Φ(w) = t^{α(w)} ρ(w)`.
    pub fn phi_word(&self, w: &Word) -> PolyMatrix {
        self.rep.word_image(w).to_poly(self.alpha.degree(w))
    }

    pub fn phi(&self, e: &GroupRingElement) -> PolyMatrix {
        let f = &self.rep.field;
        let n = self.rep.dim;
        let mut entries = vec![LaurentPoly::zero(f); n * n];
        for (w, c) in e.terms() {
            let m = self.rep.word_image(w);
            let k = self.alpha.degree(w);
            let c = f.from_int(c);
            for i in 0..n {
                for j in 0..n {
                    entries[i * n + j].add_term(k, &f.mul(&c.value, m.raw(i, j)));
                }
            }
        }
        PolyMatrix::new(f, n, n, entries).expect("shape by construction")
    }

    /// `Φ(x_j - 1) = t^{a_j} ρ(x_j) - I`.
    pub fn generator_minus_one(&self, j: usize) -> PolyMatrix {
        &self.phi_word(&Word::generator(j)) - &PolyMatrix::identity(self.field(), self.dim())
    }
}
