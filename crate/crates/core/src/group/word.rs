use std::fmt;
use std::ops::Mul;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inv(self) -> Letter {
        Letter { inverse: !self.inverse, ..self }
    }

    /// +1 or -1.
    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word in a free group. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        Word(vec![Letter::new(g, false)])
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    /// Builds the freely reduced word of a letter sequence.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Word::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// `(generator, exponent)` pairs, exponent any nonzero integer.
    pub fn from_powers(powers: &[(usize, i64)]) -> Self {
        Self::from_letters(
            powers.iter().flat_map(|&(g, e)| std::iter::repeat_n(Letter::new(g, e < 0), e.unsigned_abs() as usize)),
        )
    }

    /// Appends `l`, cancelling against the last letter if possible.
    pub fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inv()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Word::identity(), |acc, _| &acc * &base)
    }

    /// Image under the endomorphism sending generator `g` to `images[g]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Word::identity();
        for l in &self.0 {
            let img = &images[l.generator];
            if l.inverse {
                for m in img.0.iter().rev() {
                    out.push(m.inv());
                }
            } else {
                for m in &img.0 {
                    out.push(*m);
                }
            }
        }
        out
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.0.iter().filter(|l| l.generator == g).map(|l| l.exponent()).sum()
    }

    /// Exponent sums of generators `0..rank`.
    pub fn exponent_sums(&self, rank: usize) -> Vec<i64> {
        let mut sums = vec![0; rank];
        for l in &self.0 {
            sums[l.generator] += l.exponent();
        }
        sums
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator).max()
    }

    /// Renders with the given generator names, grouping runs as `x^k`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names, separator: " " }
    }
}

impl Mul<&Word> for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        let mut out = self.clone();
        for l in &rhs.0 {
            out.push(*l);
        }
        out
    }
}

impl Mul for Word {
    type Output = Word;
    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
    pub(crate) separator: &'static str,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.word.letters();
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let l = letters[i];
            let run = letters[i..].iter().take_while(|m| **m == l).count();
            if !first {
                f.write_str(self.separator)?;
            }
            first = false;
            let name = &self.names[l.generator];
            let e = run as i64 * l.exponent();
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
            i += run;
        }
        Ok(())
    }
}
