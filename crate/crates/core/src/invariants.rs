//! Isotopy invariants computed by a left-to-right pass over strand positions.
//!
//! Each strand carries its abelianized wall-crossing class in Z^{2g}. σ_i and
//! τ_i swap the strands at positions i and i+1; a_r^{±1} adds ±e_r to the
//! strand currently at position 1. Equal words always get equal profiles;
//! the converse does not hold.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{Generator, Letter, SurfaceParams, Word};

/// Running state of the strand trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceState {
    params: SurfaceParams,
    /// `occupants[p]` is the strand (0-based start position) at position p.
    occupants: Vec<usize>,
    homology: Vec<Vec<i64>>,
    a_exponent: Vec<i64>,
    sigma_count: usize,
    singular_count: usize,
}

impl TraceState {
    pub fn new(params: SurfaceParams) -> Self {
        let n = params.n();
        Self {
            params,
            occupants: (0..n).collect(),
            homology: vec![vec![0; params.walls()]; n],
            a_exponent: vec![0; params.walls()],
            sigma_count: 0,
            singular_count: 0,
        }
    }

    /// Consumes one letter. The letter must be valid for the params.
    pub fn consume(&mut self, letter: &Letter) {
        match letter.generator {
            Generator::Sigma(i) => {
                self.occupants.swap(i - 1, i);
                self.sigma_count += 1;
            }
            Generator::Tau(i) => {
                self.occupants.swap(i - 1, i);
                self.singular_count += 1;
            }
            Generator::Wall(r) => {
                let strand = self.occupants[0];
                self.homology[strand][r - 1] += letter.sign.value();
                self.a_exponent[r - 1] += letter.sign.value();
            }
        }
    }

    pub fn run(&mut self, word: &Word) -> Result<()> {
        word.validate(&self.params)?;
        for letter in word {
            self.consume(letter);
        }
        Ok(())
    }

    pub fn singular_count(&self) -> usize {
        self.singular_count
    }

    pub fn profile(&self) -> InvariantProfile {
        let mut permutation = vec![0; self.params.n()];
        for (position, &strand) in self.occupants.iter().enumerate() {
            permutation[strand] = position + 1;
        }
        InvariantProfile {
            n: self.params.n(),
            genus: self.params.genus(),
            permutation,
            strand_homology: self.homology.clone(),
            a_exponent: self.a_exponent.clone(),
            sigma_parity: (self.sigma_count % 2) as u8,
            tau_count: self.singular_count,
        }
    }
}

/// Computable invariants of a word. `permutation[k]` is the 1-based end
/// position of the strand starting at position k+1; `strand_homology[k]`
/// belongs to the same strand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantProfile {
    pub n: usize,
    pub genus: usize,
    pub permutation: Vec<usize>,
    pub strand_homology: Vec<Vec<i64>>,
    pub a_exponent: Vec<i64>,
    pub sigma_parity: u8,
    pub tau_count: usize,
}

impl InvariantProfile {
    pub fn trivial(params: SurfaceParams) -> Self {
        TraceState::new(params).profile()
    }

    /// Sign of the induced permutation as 0 (even) or 1 (odd).
    pub fn permutation_parity(&self) -> u8 {
        let mut seen = vec![false; self.permutation.len()];
        let mut transpositions = 0;
        for start in 0..self.permutation.len() {
            let mut k = start;
            let mut len = 0;
            while !seen[k] {
                seen[k] = true;
                k = self.permutation[k] - 1;
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        (transpositions % 2) as u8
    }

    /// First component in which the two profiles differ, checking the
    /// singular-point count before the others.
    pub fn first_difference(&self, other: &InvariantProfile) -> Result<Option<ProfileComponent>> {
        if (self.n, self.genus) != (other.n, other.genus) {
            return Err(Error::DimensionMismatch(
                format!("n={}, genus={}", self.n, self.genus),
                format!("n={}, genus={}", other.n, other.genus),
            ));
        }
        Ok(if self.tau_count != other.tau_count {
            Some(ProfileComponent::TauCount)
        } else if self.permutation != other.permutation {
            Some(ProfileComponent::Permutation)
        } else if self.strand_homology != other.strand_homology {
            Some(ProfileComponent::StrandHomology)
        } else if self.a_exponent != other.a_exponent {
            Some(ProfileComponent::AExponent)
        } else if self.sigma_parity != other.sigma_parity {
            Some(ProfileComponent::SigmaParity)
        } else {
            None
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProfileComponent {
    Permutation,
    StrandHomology,
    AExponent,
    SigmaParity,
    TauCount,
}

impl fmt::Display for ProfileComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProfileComponent::Permutation => "permutation",
            ProfileComponent::StrandHomology => "strand_homology",
            ProfileComponent::AExponent => "a_exponent",
            ProfileComponent::SigmaParity => "sigma_parity",
            ProfileComponent::TauCount => "tau_count",
        })
    }
}

pub fn evaluate(word: &Word, params: &SurfaceParams) -> Result<InvariantProfile> {
    let mut state = TraceState::new(*params);
    state.run(word)?;
    Ok(state.profile())
}

pub fn profiles_equal(x: &InvariantProfile, y: &InvariantProfile) -> Result<bool> {
    Ok(x.first_difference(y)?.is_none())
}

/// `None` when the profiles agree, otherwise the first differing component.
pub fn distinguish(u: &Word, v: &Word, params: &SurfaceParams) -> Result<Option<ProfileComponent>> {
    evaluate(u, params)?.first_difference(&evaluate(v, params)?)
}
