//! Relation families R1–R12, the derived words A_{2,r}, a_{i,r} and the
//! τ-conjugation words, and elimination of τ_2..τ_{n-1}.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Generator, Letter, SurfaceParams, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
    R11,
    R12,
    /// A relation supplied by a caller-provided braid relation set.
    Custom(String),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::R1 => f.write_str("R1"),
            Family::R2 => f.write_str("R2"),
            Family::R3 => f.write_str("R3"),
            Family::R4 => f.write_str("R4"),
            Family::R5 => f.write_str("R5"),
            Family::R6 => f.write_str("R6"),
            Family::R7 => f.write_str("R7"),
            Family::R8 => f.write_str("R8"),
            Family::R9 => f.write_str("R9"),
            Family::R10 => f.write_str("R10"),
            Family::R11 => f.write_str("R11"),
            Family::R12 => f.write_str("R12"),
            Family::Custom(name) => f.write_str(name),
        }
    }
}

/// An instance of a relation family: `lhs = rhs`, both freely reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub family: Family,
    /// Named index parameters in family order, e.g. `[('i', 1), ('r', 2)]`.
    pub params: Vec<(char, usize)>,
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(family: Family, params: Vec<(char, usize)>, lhs: Word, rhs: Word) -> Self {
        Self {
            family,
            params,
            lhs: lhs.free_reduce(),
            rhs: rhs.free_reduce(),
        }
    }

    /// Family label with its parameters, e.g. `R10 i=1 j=2`.
    pub fn label(&self) -> String {
        let mut out = self.family.to_string();
        for (name, value) in &self.params {
            out.push_str(&format!(" {name}={value}"));
        }
        out
    }

    /// Indices of every τ letter on either side.
    pub fn tau_indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .lhs
            .iter()
            .chain(self.rhs.iter())
            .filter_map(|l| match l.generator {
                Generator::Tau(i) => Some(i),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub params: SurfaceParams,
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    /// The full presentation with the standard braid relations R1–R6.
    pub fn standard(params: SurfaceParams) -> Self {
        Self {
            params,
            generators: params.generators(),
            relations: all_relations(&params),
        }
    }

    /// Replaces R1–R6 by any other sufficient relation set for the
    /// σ and a generators; R7–R12 are appended unchanged.
    pub fn with_braid_relations(params: SurfaceParams, braid_relations: Vec<Relation>) -> Result<Self> {
        for rel in &braid_relations {
            rel.lhs.validate(&params)?;
            rel.rhs.validate(&params)?;
        }
        let mut relations = braid_relations;
        relations.extend(build_singular_relations(&params));
        Ok(Self {
            params,
            generators: params.generators(),
            relations,
        })
    }

    /// True when every relation uses only listed generators.
    pub fn is_closed(&self) -> bool {
        self.relations.iter().all(|rel| {
            rel.lhs
                .iter()
                .chain(rel.rhs.iter())
                .all(|l| self.generators.contains(&l.generator))
        })
    }
}

fn sigma_word(indices: impl IntoIterator<Item = usize>) -> Word {
    indices.into_iter().map(Letter::sigma).collect()
}

fn sigma_inv_word(indices: impl IntoIterator<Item = usize>) -> Word {
    indices.into_iter().map(Letter::sigma_inv).collect()
}

fn check_range(name: &'static str, value: usize, min: usize, max: usize) -> Result<()> {
    if value < min || value > max {
        return Err(Error::ArgumentOutOfRange { name, value, min, max });
    }
    Ok(())
}

/// A_{2,r} = σ_1^{-1} (a_1 ⋯ a_{r-1} a_{r+1}^{-1} ⋯ a_{2g}^{-1}) σ_1^{-1}.
pub fn a2(r: usize, params: &SurfaceParams) -> Result<Word> {
    check_range("n", params.n(), 2, usize::MAX)?;
    check_range("r", r, 1, params.walls())?;
    let mut w = Word::empty();
    w.push(Letter::sigma_inv(1));
    for k in 1..r {
        w.push(Letter::wall(k));
    }
    for k in r + 1..=params.walls() {
        w.push(Letter::wall_inv(k));
    }
    w.push(Letter::sigma_inv(1));
    Ok(w)
}

/// a_{i,r}: the i-th strand crossing wall r. The σ conjugators are
/// negative for odd r and positive for even r.
pub fn a_wall(i: usize, r: usize, params: &SurfaceParams) -> Result<Word> {
    check_range("i", i, 1, params.n())?;
    check_range("r", r, 1, params.walls())?;
    let descending = (1..i).rev();
    let ascending = 1..i;
    let (head, tail) = if r % 2 == 1 {
        (sigma_inv_word(descending), sigma_inv_word(ascending))
    } else {
        (sigma_word(descending), sigma_word(ascending))
    };
    Ok(Word::product([&head, &Word::from(vec![Letter::wall(r)]), &tail]))
}

/// The conjugator `c` with `c τ_i c^{-1} = τ_j`.
pub fn tau_conjugator(i: usize, j: usize, params: &SurfaceParams) -> Result<Word> {
    let top = params.n().saturating_sub(1);
    check_range("i", i, 1, top)?;
    check_range("j", j, 1, top)?;
    Ok(if i < j {
        // (σ_{j-1} ⋯ σ_i)(σ_j ⋯ σ_{i+1})
        Word::product([&sigma_word((i..j).rev()), &sigma_word((i + 1..=j).rev())])
    } else if i > j {
        // (σ_{j+1} ⋯ σ_i)(σ_j ⋯ σ_{i-1})
        Word::product([&sigma_word(j + 1..=i), &sigma_word(j..i)])
    } else {
        Word::empty()
    })
}

/// A word equal to τ_j built from τ_i: `c τ_i c^{-1}`.
pub fn tau_conjugate(i: usize, j: usize, params: &SurfaceParams) -> Result<Word> {
    let conj = tau_conjugator(i, j, params)?;
    let inv = conj.invert()?;
    Ok(Word::product([&conj, &Word::from(vec![Letter::tau(i)]), &inv]))
}

fn ordered_pairs_with_gap(top: usize, min_gap: usize, max_gap: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=top {
        for j in 1..=top {
            let gap = i.abs_diff(j);
            if gap >= min_gap && gap <= max_gap {
                out.push((i, j));
            }
        }
    }
    out
}

/// Relations R1–R6 of the surface braid group.
pub fn build_braid_relations(params: &SurfaceParams) -> Vec<Relation> {
    let n = params.n();
    let walls = params.walls();
    let top = n - 1;
    let mut out = Vec::new();

    for (i, j) in ordered_pairs_with_gap(top, 2, usize::MAX) {
        out.push(Relation::new(
            Family::R1,
            vec![('i', i), ('j', j)],
            sigma_word([i, j]),
            sigma_word([j, i]),
        ));
    }

    for i in 1..n.saturating_sub(1) {
        out.push(Relation::new(
            Family::R2,
            vec![('i', i)],
            sigma_word([i, i + 1, i]),
            sigma_word([i + 1, i, i + 1]),
        ));
    }

    let lhs: Word = (1..=walls)
        .map(Letter::wall)
        .chain((1..=walls).map(Letter::wall_inv))
        .collect();
    let rhs = if n >= 2 {
        sigma_word((1..n - 1).chain([n - 1, n - 1]).chain((1..n - 1).rev()))
    } else {
        Word::empty()
    };
    out.push(Relation::new(Family::R3, vec![], lhs, rhs));

    if n >= 2 {
        let a2s: Vec<Word> = (1..=walls)
            .map(|r| a2(r, params).expect("r and n are in range"))
            .collect();
        for r in 1..=walls {
            for s in 1..=walls {
                if r == s {
                    continue;
                }
                let ar = Word::from(vec![Letter::wall(r)]);
                let a2s = &a2s[s - 1];
                out.push(Relation::new(
                    Family::R4,
                    vec![('r', r), ('s', s)],
                    Word::product([&ar, a2s]),
                    Word::product([a2s, &ar]),
                ));
            }
        }
        for r in 1..=walls {
            let prefix: Word = (1..=r).map(Letter::wall).collect();
            let a2r = &a2s[r - 1];
            let sq = sigma_word([1, 1]);
            out.push(Relation::new(
                Family::R5,
                vec![('r', r)],
                Word::product([&prefix, a2r]),
                Word::product([&sq, a2r, &prefix]),
            ));
        }
    }

    for r in 1..=walls {
        for i in 2..=top {
            out.push(Relation::new(
                Family::R6,
                vec![('r', r), ('i', i)],
                Word::from(vec![Letter::wall(r), Letter::sigma(i)]),
                Word::from(vec![Letter::sigma(i), Letter::wall(r)]),
            ));
        }
    }
    out
}

/// Relations R7–R12 involving the singular generators.
pub fn build_singular_relations(params: &SurfaceParams) -> Vec<Relation> {
    let n = params.n();
    let walls = params.walls();
    let top = n - 1;
    let mut out = Vec::new();

    for (i, j) in ordered_pairs_with_gap(top, 2, usize::MAX) {
        out.push(Relation::new(
            Family::R7,
            vec![('i', i), ('j', j)],
            Word::from(vec![Letter::sigma(i), Letter::tau(j)]),
            Word::from(vec![Letter::tau(j), Letter::sigma(i)]),
        ));
    }
    for (i, j) in ordered_pairs_with_gap(top, 2, usize::MAX) {
        out.push(Relation::new(
            Family::R8,
            vec![('i', i), ('j', j)],
            Word::from(vec![Letter::tau(i), Letter::tau(j)]),
            Word::from(vec![Letter::tau(j), Letter::tau(i)]),
        ));
    }
    for i in 1..=top {
        out.push(Relation::new(
            Family::R9,
            vec![('i', i)],
            Word::from(vec![Letter::sigma(i), Letter::tau(i)]),
            Word::from(vec![Letter::tau(i), Letter::sigma(i)]),
        ));
    }
    for (i, j) in ordered_pairs_with_gap(top, 1, 1) {
        out.push(Relation::new(
            Family::R10,
            vec![('i', i), ('j', j)],
            Word::from(vec![Letter::sigma(i), Letter::sigma(j), Letter::tau(i)]),
            Word::from(vec![Letter::tau(j), Letter::sigma(i), Letter::sigma(j)]),
        ));
    }

    let strand_walls = |i: usize, r: usize| a_wall(i, r, params).expect("i and r are in range");
    for i in 1..=top {
        for r in 1..=walls {
            let here = strand_walls(i, r);
            let next = strand_walls(i + 1, r);
            let pair = Word::product([&here, &next]);
            let pair_inv = pair.invert().expect("wall words are τ-free");
            let tau = Word::from(vec![Letter::tau(i)]);
            out.push(Relation::new(
                Family::R11,
                vec![('i', i), ('r', r)],
                Word::product([&pair, &tau, &pair_inv]),
                tau,
            ));
        }
    }
    for i in 1..=top {
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            for r in 1..=walls {
                let wall = strand_walls(j, r);
                let tau = Word::from(vec![Letter::tau(i)]);
                out.push(Relation::new(
                    Family::R12,
                    vec![('i', i), ('j', j), ('r', r)],
                    Word::product([&tau, &wall]),
                    Word::product([&wall, &tau]),
                ));
            }
        }
    }
    out
}

/// R1–R6 followed by R7–R12.
pub fn all_relations(params: &SurfaceParams) -> Vec<Relation> {
    let mut out = build_braid_relations(params);
    out.extend(build_singular_relations(params));
    out
}

/// Eliminates τ_2..τ_{n-1}: relations whose τ indices lie in {1, 3} are
/// kept with τ_3 replaced by its conjugate of τ_1, all others are dropped.
pub fn tietze_simplify(pres: &Presentation) -> Presentation {
    let params = pres.params;
    let generators = pres
        .generators
        .iter()
        .copied()
        .filter(|g| !matches!(g, Generator::Tau(i) if *i >= 2))
        .collect();
    let tau3 = tau_conjugate(1, 3, &params).ok();
    let substitute = |w: &Word| -> Word {
        let mut out = Word::empty();
        for letter in w {
            match (letter.generator, &tau3) {
                (Generator::Tau(3), Some(replacement)) => {
                    for l in replacement {
                        out.push(*l);
                    }
                }
                _ => out.push(*letter),
            }
        }
        out
    };
    let relations = pres
        .relations
        .iter()
        .filter(|rel| rel.tau_indices().iter().all(|&i| i == 1 || i == 3))
        .map(|rel| {
            Relation::new(
                rel.family.clone(),
                rel.params.clone(),
                substitute(&rel.lhs),
                substitute(&rel.rhs),
            )
        })
        .collect();
    Presentation {
        params,
        generators,
        relations,
    }
}
