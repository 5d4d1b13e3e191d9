//! Free groups, group rings, knot-group presentations and their
//! abelianization.

mod abelian;
mod builders;
mod parse;
mod presentation;
mod ring;
mod word;

use thiserror::Error;

pub use abelian::{relation_matrix, AbelianizationMap};
pub use builders::{artin_automorphism, closure_components, presentation_from_braid, presentation_from_monodromy};
pub use parse::parse_presentation;
pub use presentation::{Presentation, Relation, SourceTag};
pub use ring::{GroupRingElement, RingDisplay};
pub use word::{Letter, Word, WordDisplay};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("{line}:{column}: syntax error: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{line}:{column}: UnknownGenerator: `{name}`")]
    UnknownGenerator { name: String, line: usize, column: usize },
    #[error("{line}:{column}: DuplicateGenerator: `{name}`")]
    DuplicateGenerator { name: String, line: usize, column: usize },
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("NotInfiniteCyclic: first homology is {h1}")]
    NotInfiniteCyclic { h1: String },
    #[error("abelianization exponents do not respect the relations")]
    InconsistentAbelianization,
    #[error("NotDeficiencyOne: {generators} generators, {relations} relations")]
    NotDeficiencyOne { generators: usize, relations: usize },
    #[error("NotAbelianizedAutomorphism: {0}")]
    NotAbelianizedAutomorphism(String),
    #[error("ClosureNotKnot: braid closure has {components} components")]
    ClosureNotKnot { components: usize },
    #[error("BadGeneratorIndex: braid letter {index} on {strands} strands")]
    BadGeneratorIndex { index: i32, strands: usize },
    #[error("cannot write presentation: {0}")]
    Unserializable(String),
}
