//! Generator alphabet and words for the singular braid monoid of a closed
//! orientable surface.
//!
//! A word is a plain letter sequence. Nothing is reduced implicitly; callers
//! decide when to run [`Word::free_reduce`]. Powers are always stored as
//! repeated unit letters.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Number of strands and genus of the ambient surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceParams {
    n: usize,
    genus: usize,
}

impl SurfaceParams {
    pub fn new(n: usize, genus: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroStrands);
        }
        Ok(Self { n, genus })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Number of walls, `2g`.
    pub fn walls(&self) -> usize {
        2 * self.genus
    }

    /// All generators in the order σ_1..σ_{n-1}, a_1..a_{2g}, τ_1..τ_{n-1}.
    pub fn generators(&self) -> Vec<Generator> {
        let mut out = Vec::with_capacity(2 * (self.n - 1) + self.walls());
        out.extend((1..self.n).map(Generator::Sigma));
        out.extend((1..=self.walls()).map(Generator::Wall));
        out.extend((1..self.n).map(Generator::Tau));
        out
    }

    /// Invertible letters (σ and a with both signs), in generator order.
    pub fn invertible_letters(&self) -> Vec<Letter> {
        self.generators()
            .into_iter()
            .filter(|g| g.is_invertible())
            .flat_map(|g| [Letter::new(g, Sign::Pos), Letter::new(g, Sign::Neg)])
            .collect()
    }

    pub fn contains(&self, generator: Generator) -> bool {
        match generator {
            Generator::Sigma(i) | Generator::Tau(i) => (1..self.n).contains(&i),
            Generator::Wall(r) => (1..=self.walls()).contains(&r),
        }
    }
}

impl fmt::Display for SurfaceParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}, genus={}", self.n, self.genus)
    }
}

/// A generator of the monoid: a crossing σ_i, a wall crossing a_r of the
/// first strand, or a singular crossing τ_i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Sigma(usize),
    Wall(usize),
    Tau(usize),
}

impl Generator {
    pub fn index(&self) -> usize {
        match *self {
            Generator::Sigma(i) | Generator::Wall(i) | Generator::Tau(i) => i,
        }
    }

    pub fn is_invertible(&self) -> bool {
        !matches!(self, Generator::Tau(_))
    }

    pub fn symbol(&self) -> char {
        match self {
            Generator::Sigma(_) => 's',
            Generator::Wall(_) => 'a',
            Generator::Tau(_) => 't',
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.symbol(), self.index())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A generator raised to the power ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: Generator,
    pub sign: Sign,
}

impl Letter {
    pub const fn new(generator: Generator, sign: Sign) -> Self {
        Self { generator, sign }
    }

    pub const fn sigma(i: usize) -> Self {
        Self::new(Generator::Sigma(i), Sign::Pos)
    }

    pub const fn sigma_inv(i: usize) -> Self {
        Self::new(Generator::Sigma(i), Sign::Neg)
    }

    pub const fn wall(r: usize) -> Self {
        Self::new(Generator::Wall(r), Sign::Pos)
    }

    pub const fn wall_inv(r: usize) -> Self {
        Self::new(Generator::Wall(r), Sign::Neg)
    }

    pub const fn tau(i: usize) -> Self {
        Self::new(Generator::Tau(i), Sign::Pos)
    }

    pub fn is_tau(&self) -> bool {
        matches!(self.generator, Generator::Tau(_))
    }

    /// Formal inverse; only meaningful for σ and a letters.
    pub fn inverse(&self) -> Self {
        Self::new(self.generator, self.sign.flip())
    }

    /// True when `self` followed by `other` is a freely cancellable pair.
    pub fn cancels(&self, other: &Letter) -> bool {
        self.generator.is_invertible()
            && self.generator == other.generator
            && self.sign != other.sign
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "{}", self.generator),
            Sign::Neg => write!(f, "{}^-1", self.generator),
        }
    }
}

/// A finite sequence of letters. Equality is letter-sequence equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn tau_count(&self) -> usize {
        self.0.iter().filter(|l| l.is_tau()).count()
    }

    /// Checks every letter against the alphabet of `params`.
    pub fn validate(&self, params: &SurfaceParams) -> Result<()> {
        for (position, letter) in self.0.iter().enumerate() {
            if !params.contains(letter.generator) {
                return Err(Error::IndexOutOfRange {
                    position,
                    letter: *letter,
                    n: params.n(),
                    genus: params.genus(),
                });
            }
            if letter.is_tau() && letter.sign == Sign::Neg {
                return Err(Error::NegativeTauExponent { position });
            }
        }
        Ok(())
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| !w[0].cancels(&w[1]))
    }

    /// Deletes adjacent `x x^-1` pairs of invertible generators until none
    /// remain. τ letters never cancel.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &letter in &self.0 {
            match stack.last() {
                Some(top) if top.cancels(&letter) => {
                    stack.pop();
                }
                _ => stack.push(letter),
            }
        }
        Word(stack)
    }

    /// Reversed word with negated exponents. Fails on any τ letter.
    pub fn invert(&self) -> Result<Word> {
        if let Some(position) = self.0.iter().position(Letter::is_tau) {
            return Err(Error::NotInvertible { position });
        }
        Ok(Word(self.0.iter().rev().map(Letter::inverse).collect()))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Concatenation of several words.
    pub fn product<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
        Word(parts.into_iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    /// True when `pattern` occurs at `position`.
    pub fn matches_at(&self, position: usize, pattern: &[Letter]) -> bool {
        self.0
            .get(position..position + pattern.len())
            .is_some_and(|window| window == pattern)
    }

    /// Replaces `len` letters starting at `position` with `replacement`.
    pub fn splice(&self, position: usize, len: usize, replacement: &[Letter]) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() - len + replacement.len());
        letters.extend_from_slice(&self.0[..position]);
        letters.extend_from_slice(replacement);
        letters.extend_from_slice(&self.0[position + len..]);
        Word(letters)
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a Letter;
    type IntoIter = std::slice::Iter<'a, Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Canonical text form: one token per letter, `e` for the empty word.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (k, letter) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}
