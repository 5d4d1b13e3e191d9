//! Builtin knot groups with representations, stored as text in the
//! presentation and representation file formats.

use crate::group::{parse_presentation, Presentation};
use crate::rep::{parse_representation, Representation};

struct RawEntry {
    name: &'static str,
    description: &'static str,
    presentation: &'static str,
    representations: &'static [(&'static str, &'static str)],
}

const RAW: &[RawEntry] = &[
    RawEntry {
        name: "figure-eight",
        description: "figure-eight knot, genus one and fibered",
        presentation: include_str!("../data/figure-eight.pres"),
        representations: &[
            ("omega", include_str!("../data/figure-eight.omega.rep")),
            ("f7", include_str!("../data/figure-eight.f7.rep")),
        ],
    },
    RawEntry {
        name: "kinoshita-terasaka",
        description: "Kinoshita-Terasaka knot, trivial Alexander polynomial, not fibered",
        presentation: include_str!("../data/kinoshita-terasaka.pres"),
        representations: &[("f5", include_str!("../data/kinoshita-terasaka.f5.rep"))],
    },
    RawEntry {
        name: "monic-nonfibered",
        description: "seven-generator knot with monic Alexander polynomial, not fibered",
        presentation: include_str!("../data/monic-nonfibered.pres"),
        representations: &[("f5", include_str!("../data/monic-nonfibered.f5.rep"))],
    },
    RawEntry {
        name: "trefoil",
        description: "trefoil knot, fibered",
        presentation: include_str!("../data/trefoil.pres"),
        representations: &[("parabolic", include_str!("../data/trefoil.parabolic.rep"))],
    },
];

#[derive(Clone, Debug)]
pub struct ExampleCatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub presentation: Presentation,
    pub representations: Vec<(&'static str, Representation)>,
}

impl ExampleCatalogEntry {
    pub fn representation(&self, name: &str) -> Option<&Representation> {
        self.representations.iter().find(|(n, _)| *n == name).map(|(_, r)| r)
    }
}

pub fn names() -> Vec<&'static str> {
    RAW.iter().map(|e| e.name).collect()
}

fn load(raw: &RawEntry) -> ExampleCatalogEntry {
    let presentation = parse_presentation(raw.presentation).expect("builtin presentation parses");
    let representations = raw
        .representations
        .iter()
        .map(|(n, text)| (*n, parse_representation(text, &presentation).expect("builtin representation parses")))
        .collect();
    ExampleCatalogEntry { name: raw.name, description: raw.description, presentation, representations }
}

pub fn example(name: &str) -> Option<ExampleCatalogEntry> {
    RAW.iter().find(|e| e.name == name).map(load)
}

pub fn catalog() -> Vec<ExampleCatalogEntry> {
    RAW.iter().map(load).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::Validation;

    #[test]
    fn every_representation_validates() {
        for entry in catalog() {
            for (name, rep) in &entry.representations {
                assert_eq!(rep.validate(&entry.presentation).unwrap(), Validation::Valid, "{}/{name}", entry.name);
                assert!(rep.is_noncommutative(), "{}/{name}", entry.name);
            }
        }
    }
}
