use num_traits::One;

use crate::algebra::{smith_normal_form, IntMatrix};

use super::presentation::{Presentation, Relation, SourceTag};
use super::word::{Letter, Word};
use super::GroupError;

/// Mapping-torus presentation `⟨x1, …, x2g, h | h x_i h⁻¹ = φ(x_i)⟩` of a
/// surface automorphism given by the images of the surface generators.
pub fn presentation_from_monodromy(genus: usize, images: &[Word]) -> Result<Presentation, GroupError> {
    let n = 2 * genus;
    if images.len() != n {
        return Err(GroupError::NotAbelianizedAutomorphism(format!(
            "expected {n} images for genus {genus}, got {}",
            images.len()
        )));
    }
    if let Some(g) = images.iter().filter_map(Word::max_generator).find(|&g| g >= n) {
        return Err(GroupError::GeneratorOutOfRange { index: g, rank: n });
    }
    // the induced map on H_1 of the surface must be invertible over Z
    let rows: Vec<Vec<i64>> = images.iter().map(|w| w.exponent_sums(n)).collect();
    let snf = smith_normal_form(&IntMatrix::from_rows(n, &rows));
    if snf.rank != n || !snf.factors.iter().all(|d| d.is_one()) {
        return Err(GroupError::NotAbelianizedAutomorphism("exponent-sum matrix is not invertible over Z".into()));
    }
    let h = n;
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.push("h".into());
    let relations = images
        .iter()
        .enumerate()
        .map(|(i, img)| {
            let lhs = Word::from_letters([Letter::new(h, false), Letter::new(i, false), Letter::new(h, true)]);
            Relation::new(lhs, img.clone())
        })
        .collect();
    Presentation::new(names, relations, SourceTag::Fibered)
}

/// Images of the strand generators under one Artin generator `σ_i^{±1}`
/// (`letter = ±i`, 1-based).
fn artin_letter(letter: i32, strands: usize) -> Vec<Word> {
    let mut images: Vec<Word> = (0..strands).map(Word::generator).collect();
    let i = letter.unsigned_abs() as usize - 1;
    let (a, b) = (Word::generator(i), Word::generator(i + 1));
    if letter > 0 {
        // x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i
        images[i] = &(&a * &b) * &a.inverse();
        images[i + 1] = a;
    } else {
        // x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}
        images[i] = b.clone();
        images[i + 1] = &(&b.inverse() * &a) * &b;
    }
    images
}

fn check_braid(braid: &[i32], strands: usize) -> Result<(), GroupError> {
    for &b in braid {
        if b == 0 || b.unsigned_abs() as usize >= strands {
            return Err(GroupError::BadGeneratorIndex { index: b, strands });
        }
    }
    Ok(())
}

/// The automorphism of the free group on `strands` generators induced by a
/// braid word, letters applied left to right.
pub fn artin_automorphism(braid: &[i32], strands: usize) -> Result<Vec<Word>, GroupError> {
    check_braid(braid, strands)?;
    let mut images: Vec<Word> = (0..strands).map(Word::generator).collect();
    for &b in braid {
        let step = artin_letter(b, strands);
        images = step.iter().map(|w| w.substitute(&images)).collect();
    }
    Ok(images)
}

/// Number of cycles of the braid's underlying permutation, i.e. the number
/// of components of its closure.
pub fn closure_components(braid: &[i32], strands: usize) -> Result<usize, GroupError> {
    check_braid(braid, strands)?;
    let mut perm: Vec<usize> = (0..strands).collect();
    for &b in braid {
        let i = b.unsigned_abs() as usize - 1;
        perm.swap(i, i + 1);
    }
    let mut seen = vec![false; strands];
    let mut cycles = 0;
    for start in 0..strands {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
        }
    }
    Ok(cycles)
}

/// Knot group of a braid closure: `⟨x1, …, xs | x_k = β(x_k), k < s⟩`.
pub fn presentation_from_braid(braid: &[i32], strands: usize) -> Result<Presentation, GroupError> {
    let components = closure_components(braid, strands)?;
    if components != 1 {
        return Err(GroupError::ClosureNotKnot { components });
    }
    let images = artin_automorphism(braid, strands)?;
    let names = (1..=strands).map(|i| format!("x{i}")).collect();
    let relations = images
        .into_iter()
        .take(strands - 1)
        .enumerate()
        .map(|(k, img)| Relation::new(Word::generator(k), img))
        .collect();
    Presentation::new(names, relations, SourceTag::Braid)
}
