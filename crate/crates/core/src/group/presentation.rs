use std::fmt::Write as _;

use super::word::Word;
use super::GroupError;

/// Where a presentation came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SourceTag {
    Wirtinger,
    /// Mapping-torus presentation `⟨x_1..x_2g, h | h x_i h⁻¹ = φ(x_i)⟩`.
    Fibered,
    Braid,
    Generic,
}

/// A relation `lhs = rhs`. A relator `r` is stored as `r = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Relation { lhs, rhs }
    }

    pub fn relator(r: Word) -> Self {
        Relation { lhs: r, rhs: Word::identity() }
    }

    /// `lhs * rhs⁻¹`.
    pub fn as_relator(&self) -> Word {
        &self.lhs * &self.rhs.inverse()
    }

    /// Generators occurring on either side.
    pub fn support(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = self.lhs.letters().iter().chain(self.rhs.letters()).map(|l| l.generator).collect();
        gens.sort_unstable();
        gens.dedup();
        gens
    }
}

/// A finite group presentation with named generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relations: Vec<Relation>,
    source: SourceTag,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Presentation {
    pub fn new(generators: Vec<String>, relations: Vec<Relation>, source: SourceTag) -> Result<Self, GroupError> {
        for (i, name) in generators.iter().enumerate() {
            if !is_identifier(name) {
                return Err(GroupError::InvalidName(name.clone()));
            }
            if generators[..i].contains(name) {
                return Err(GroupError::DuplicateGenerator { name: name.clone(), line: 0, column: 0 });
            }
        }
        let rank = generators.len();
        for rel in &relations {
            for w in [&rel.lhs, &rel.rhs] {
                if let Some(g) = w.max_generator().filter(|&g| g >= rank) {
                    return Err(GroupError::GeneratorOutOfRange { index: g, rank });
                }
            }
        }
        Ok(Presentation { generators, relations, source })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn source(&self) -> SourceTag {
        self.source
    }

    pub fn with_source(mut self, source: SourceTag) -> Self {
        self.source = source;
        self
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Generators minus relations.
    pub fn deficiency(&self) -> i64 {
        self.generators.len() as i64 - self.relations.len() as i64
    }

    pub fn require_deficiency_one(&self) -> Result<(), GroupError> {
        if self.deficiency() == 1 {
            Ok(())
        } else {
            Err(GroupError::NotDeficiencyOne { generators: self.rank(), relations: self.relations.len() })
        }
    }

    /// Renders in the presentation file format. Relations whose left side
    /// is the identity but whose right side is not have no written form.
    pub fn to_text(&self) -> Result<String, GroupError> {
        let mut out = String::new();
        writeln!(out, "gens {}", self.generators.join(" ")).expect("string write");
        for (i, rel) in self.relations.iter().enumerate() {
            let lhs = rel.lhs.display(&self.generators);
            match (rel.lhs.is_identity(), rel.rhs.is_identity()) {
                (true, _) => {
                    return Err(GroupError::Unserializable(format!("relation {} has an empty left side", i + 1)))
                }
                (false, true) => writeln!(out, "rel {lhs}"),
                (false, false) => writeln!(out, "rel {lhs} = {}", rel.rhs.display(&self.generators)),
            }
            .expect("string write");
        }
        Ok(out)
    }
}
